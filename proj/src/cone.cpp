#include "toric/cone.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::vector<Vec> clean_vectors(int dim, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    for (const Vec& v : vs) {
        if (static_cast<int>(v.size()) != dim)
            throw InternalError("cone: vector dimension mismatch");
        Vec p = primitive(v);
        if (!is_zero(p)) out.push_back(p);
    }
    sort_unique(out);
    return out;
}

// Canonical representative of r modulo the row span of an echelon basis:
// eliminate the pivot coordinates rationally, then rescale positively to a
// primitive integer vector.
Vec canon_mod_span(const Mat& echelon_basis, const Vec& r) {
    if (echelon_basis.empty()) return primitive(r);
    QVec q(r.size());
    for (size_t i = 0; i < r.size(); ++i) q[i] = r[i];
    for (const Vec& b : echelon_basis) {
        size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        if (p == b.size()) continue;
        Rat coef = q[p] / Rat(b[p]);
        if (coef == 0) continue;
        for (size_t k = 0; k < q.size(); ++k) q[k] -= coef * Rat(b[k]);
    }
    Int lcm_den = 1;
    for (const Rat& x : q) lcm_den = lcm(lcm_den, denominator(x));
    Vec out(q.size());
    for (size_t k = 0; k < q.size(); ++k)
        out[k] = numerator(q[k]) * (lcm_den / denominator(q[k]));
    return primitive(out);
}

// V-description: saturated lineality lattice plus extreme rays in canonical
// representatives modulo the lineality span.
struct VDesc {
    Lattice lin;
    std::vector<Vec> rays;
};

std::vector<Vec> extreme_filter(int dim, const std::vector<Vec>& ineqs, int lin_rank,
                                const std::vector<Vec>& rays) {
    std::vector<Vec> out;
    for (const Vec& r : rays) {
        Mat active;
        for (const Vec& a : ineqs)
            if (dot(a, r) == 0) active.push_back(a);
        if (mat_rank(active) == dim - lin_rank - 1) out.push_back(r);
    }
    return out;
}

Lattice lineality_lattice(int dim, const std::vector<Vec>& ineqs) {
    if (ineqs.empty()) return full_lattice(dim);
    return kernel_lattice({dim, static_cast<int>(ineqs.size()), transpose(ineqs)});
}

VDesc dd(int dim, const std::vector<Vec>& ineqs) {
    std::vector<Vec> lin;
    for (int i = 0; i < dim; ++i) {
        Vec e = zero_vec(dim);
        e[static_cast<size_t>(i)] = 1;
        lin.push_back(e);
    }
    std::vector<Vec> rays;
    std::vector<Vec> processed;
    for (const Vec& a : ineqs) {
        processed.push_back(a);
        size_t i0 = lin.size();
        for (size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) { i0 = i; break; }
        if (i0 < lin.size()) {
            Vec l0 = lin[i0];
            Int v0 = dot(a, l0);
            if (v0 < 0) { l0 = vec_neg(l0); v0 = -v0; }
            std::vector<Vec> newlin;
            for (size_t j = 0; j < lin.size(); ++j) {
                if (j == i0) continue;
                Int vj = dot(a, lin[j]);
                newlin.push_back(primitive(vec_sub(vec_scale(v0, lin[j]), vec_scale(vj, l0))));
            }
            for (Vec& r : rays) {
                Int vr = dot(a, r);
                r = primitive(vec_sub(vec_scale(v0, r), vec_scale(vr, l0)));
            }
            rays.push_back(primitive(l0));
            lin = std::move(newlin);
        } else {
            std::vector<Vec> pos, zero, neg;
            for (const Vec& r : rays) {
                Int vr = dot(a, r);
                if (vr > 0) pos.push_back(r);
                else if (vr < 0) neg.push_back(r);
                else zero.push_back(r);
            }
            std::vector<Vec> next = pos;
            next.insert(next.end(), zero.begin(), zero.end());
            for (const Vec& p : pos)
                for (const Vec& q : neg) {
                    Vec c = primitive(vec_sub(vec_scale(dot(a, p), q), vec_scale(dot(a, q), p)));
                    if (!is_zero(c)) next.push_back(c);
                }
            rays = std::move(next);
        }
        Mat linb = lattice_span(dim, lin).basis;
        int lr = static_cast<int>(linb.size());
        std::vector<Vec> reduced;
        for (const Vec& r : rays) {
            Vec c = canon_mod_span(linb, r);
            if (!is_zero(c)) reduced.push_back(c);
        }
        sort_unique(reduced);
        rays = extreme_filter(dim, processed, lr, reduced);
    }
    VDesc out;
    out.lin = lineality_lattice(dim, ineqs);
    std::vector<Vec> final_rays;
    for (const Vec& r : rays) {
        Vec c = canon_mod_span(out.lin.basis, r);
        if (!is_zero(c)) final_rays.push_back(c);
    }
    sort_unique(final_rays);
    out.rays = extreme_filter(dim, ineqs, out.lin.rank(), final_rays);
    return out;
}

std::vector<Vec> canon_gens(const VDesc& vd) {
    std::vector<Vec> out = vd.rays;
    for (const Vec& b : vd.lin.basis) {
        out.push_back(b);
        out.push_back(vec_neg(b));
    }
    sort_unique(out);
    return out;
}

Cone assemble(int dim, const VDesc& vd, std::vector<Vec> facets) {
    Cone c;
    c.dim = dim;
    c.rays = canon_gens(vd);
    c.facets = std::move(facets);
    c.lin = vd.lin;
    c.cone_dim = mat_rank(c.rays);
    return c;
}

} // namespace

Cone cone_from_inequalities(int dim, std::vector<Vec> ineqs) {
    std::vector<Vec> cleaned = clean_vectors(dim, ineqs);
    VDesc vd = dd(dim, cleaned);
    std::vector<Vec> gens = canon_gens(vd);
    VDesc dual_vd = dd(dim, gens);
    return assemble(dim, vd, canon_gens(dual_vd));
}

Cone cone_from_rays(int dim, std::vector<Vec> gens) {
    std::vector<Vec> cleaned = clean_vectors(dim, gens);
    VDesc dual_vd = dd(dim, cleaned);
    std::vector<Vec> facets = canon_gens(dual_vd);
    VDesc vd = dd(dim, facets);
    return assemble(dim, vd, facets);
}

Cone dual_cone(const Cone& c) {
    Cone d;
    d.dim = c.dim;
    d.rays = c.facets;
    d.facets = c.rays;
    d.lin = lineality_lattice(c.dim, c.rays);
    d.cone_dim = mat_rank(d.rays);
    return d;
}

Cone zero_cone(int dim) { return cone_from_rays(dim, {}); }

Cone full_cone(int dim) { return cone_from_inequalities(dim, {}); }

bool cone_contains(const Cone& c, const Vec& v) {
    for (const Vec& a : c.facets)
        if (dot(a, v) < 0) return false;
    return true;
}

bool cone_contains_q(const Cone& c, const QVec& v) {
    for (const Vec& a : c.facets)
        if (dot_q(a, v) < 0) return false;
    return true;
}

bool relint_contains(const Cone& c, const Vec& v) {
    std::set<Vec> facet_set(c.facets.begin(), c.facets.end());
    for (const Vec& a : c.facets) {
        Int val = dot(a, v);
        bool equation = facet_set.count(vec_neg(a)) > 0;
        if (equation) {
            if (val != 0) return false;
        } else {
            if (val <= 0) return false;
        }
    }
    return true;
}

bool is_strictly_convex(const Cone& c) { return c.lin.rank() == 0; }

bool is_zero_cone(const Cone& c) { return c.cone_dim == 0; }

Vec relative_interior_point(const Cone& c) {
    if (is_zero_cone(c) && c.dim > 0)
        throw Error("ZeroCone", "relative interior point of the zero cone requested");
    Vec s = zero_vec(c.dim);
    for (const Vec& r : c.rays) s = vec_add(s, r);
    return s;
}

std::vector<Cone> all_faces(const Cone& c) {
    std::map<std::string, Cone> seen;
    std::vector<Cone> stack{c};
    while (!stack.empty()) {
        Cone f = std::move(stack.back());
        stack.pop_back();
        std::string key = cone_key(f);
        if (seen.count(key)) continue;
        std::set<Vec> fs(f.facets.begin(), f.facets.end());
        for (const Vec& a : f.facets) {
            if (fs.count(vec_neg(a))) continue; // equation
            std::vector<Vec> sub;
            for (const Vec& r : f.rays)
                if (dot(a, r) == 0) sub.push_back(r);
            stack.push_back(cone_from_rays(c.dim, sub));
        }
        seen.emplace(std::move(key), std::move(f));
    }
    std::vector<Cone> out;
    for (auto& [k, f] : seen) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), cone_less);
    return out;
}

bool is_face_of(const Cone& tau, const Cone& sigma) {
    for (const Cone& f : all_faces(sigma))
        if (f == tau) return true;
    return false;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.dim != b.dim) throw InternalError("intersect: ambient dimension mismatch");
    std::vector<Vec> ineqs = a.facets;
    ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
    return cone_from_inequalities(a.dim, ineqs);
}

Cone intersect_orthogonal(const Cone& c, const std::vector<Vec>& vs) {
    std::vector<Vec> ineqs = c.facets;
    for (const Vec& v : vs) {
        ineqs.push_back(v);
        ineqs.push_back(vec_neg(v));
    }
    return cone_from_inequalities(c.dim, ineqs);
}

std::string cone_key(const Cone& c) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c.rays.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < c.rays[i].size(); ++j) {
            if (j) os << ",";
            os << c.rays[i][j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

bool cone_less(const Cone& a, const Cone& b) {
    if (a.cone_dim != b.cone_dim) return a.cone_dim < b.cone_dim;
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    for (size_t i = 0; i < a.rays.size(); ++i) {
        if (a.rays[i] != b.rays[i]) return lex_less(a.rays[i], b.rays[i]);
    }
    return false;
}

} // namespace toric
