#include "toric/semigroup.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

namespace {

bool orthogonal_to_all(const std::vector<Vec>& rays, const Vec& v) {
    for (const Vec& r : rays)
        if (dot(r, v) != 0) return false;
    return true;
}

bool dfs_member(const AffineSemigroup& s, const std::vector<size_t>& order,
                const std::vector<Int>& weights, size_t idx, const Vec& rest,
                const Int& budget) {
    if (budget == 0) return lattice_contains(s.min_face, rest);
    if (idx == order.size()) return false;
    const Int& w = weights[idx];
    for (Int a = budget / w; a >= 0; --a) {
        Vec r2 = vec_sub(rest, vec_scale(a, s.pos_gens[order[idx]]));
        if (!cone_contains(s.cone, r2)) continue;
        if (dfs_member(s, order, weights, idx + 1, r2, budget - a * w)) return true;
    }
    return false;
}

// Lexicographic scan of the integer vectors of fixed total absolute value,
// returning the first one that passes `test`.
template <typename Test>
bool shell_scan(Vec& cur, size_t pos, const Int& rem, const Test& test, Vec& out) {
    if (pos + 1 == cur.size()) {
        for (int side = 0; side < 2; ++side) {
            if (rem == 0 && side == 1) break;
            cur[pos] = side == 0 ? Int(-rem) : rem;
            if (test(cur)) {
                out = cur;
                return true;
            }
        }
        return false;
    }
    for (Int val = -rem; val <= rem; ++val) {
        cur[pos] = val;
        if (shell_scan(cur, pos + 1, rem - abs(val), test, out)) return true;
    }
    return false;
}

} // namespace

AffineSemigroup make_semigroup(int dim, std::vector<Vec> gens_in) {
    std::vector<Vec> gens;
    for (Vec& g : gens_in) {
        if (static_cast<int>(g.size()) != dim)
            throw InternalError("semigroup: generator dimension mismatch");
        if (!is_zero(g)) gens.push_back(std::move(g));
    }
    sort_unique(gens);
    if (!(lattice_span(dim, gens) == full_lattice(dim)))
        throw GroupNotFullError("generators do not span the full lattice as a group");

    AffineSemigroup s;
    s.dim = dim;
    s.gens = std::move(gens);
    s.cone = cone_from_rays(dim, s.gens);
    for (const Vec& g : s.gens) {
        if (cone_contains(s.cone, vec_neg(g)))
            s.lin_gens.push_back(g);
        else
            s.pos_gens.push_back(g);
    }
    s.min_face = lattice_span(dim, s.lin_gens);
    if (s.pos_gens.empty()) {
        s.grading = zero_vec(dim);
    } else {
        s.grading = relative_interior_point(dual_cone(s.cone));
        for (const Vec& p : s.pos_gens)
            if (dot(s.grading, p) <= 0) throw InternalError("grading must be positive off the minimal face");
        for (const Vec& l : s.lin_gens)
            if (dot(s.grading, l) != 0) throw InternalError("grading must vanish on the minimal face");
    }
    return s;
}

bool contains(const AffineSemigroup& s, const Vec& v) {
    if (static_cast<int>(v.size()) != s.dim)
        throw InternalError("semigroup membership: dimension mismatch");
    if (!cone_contains(s.cone, v)) return false;
    if (s.pos_gens.empty()) return lattice_contains(s.min_face, v);
    Int budget = dot(s.grading, v);
    if (budget == 0) return lattice_contains(s.min_face, v);

    std::vector<size_t> order(s.pos_gens.size());
    std::vector<Int> weights(s.pos_gens.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return dot(s.grading, s.pos_gens[a]) > dot(s.grading, s.pos_gens[b]);
    });
    for (size_t i = 0; i < order.size(); ++i)
        weights[i] = dot(s.grading, s.pos_gens[order[i]]);
    return dfs_member(s, order, weights, 0, v, budget);
}

bool same_members(const AffineSemigroup& a, const AffineSemigroup& b) {
    if (a.dim != b.dim) return false;
    for (const Vec& g : a.gens)
        if (!contains(b, g)) return false;
    for (const Vec& g : b.gens)
        if (!contains(a, g)) return false;
    return true;
}

FaceLattices face_data(const AffineSemigroup& s, const std::vector<Vec>& tau_rays) {
    std::vector<Vec> in_perp;
    for (const Vec& g : s.gens)
        if (orthogonal_to_all(tau_rays, g)) in_perp.push_back(g);
    FaceLattices out;
    out.span = lattice_span(s.dim, in_perp);
    out.sat = tau_rays.empty()
                  ? full_lattice(s.dim)
                  : kernel_lattice({s.dim, static_cast<int>(tau_rays.size()), transpose(tau_rays)});
    out.index = sublattice_index(out.span, out.sat);
    return out;
}

Vec localization_shift(const AffineSemigroup& s, const std::vector<Vec>& tau_rays) {
    Cone slice = intersect_orthogonal(s.cone, tau_rays);
    if (is_zero_cone(slice)) return zero_vec(s.dim);
    Vec g0 = zero_vec(s.dim);
    bool any = false;
    for (const Vec& g : s.gens)
        if (orthogonal_to_all(tau_rays, g)) {
            g0 = vec_add(g0, g);
            any = true;
        }
    if (!any || !relint_contains(slice, g0))
        throw InternalError("localization slice is not a face of the cone");
    // 0 in the relative interior means the slice is a linear subspace; the
    // generators on it already form a group and localizing changes nothing.
    if (is_zero(g0)) return zero_vec(s.dim);
    auto test = [&](const Vec& m) {
        return orthogonal_to_all(tau_rays, m) && relint_contains(slice, m) && contains(s, m);
    };
    Int bound = l1_norm(g0);
    Vec cur(static_cast<size_t>(s.dim));
    Vec out;
    for (Int r = 1; r <= bound; ++r)
        if (shell_scan(cur, 0, r, test, out)) return out;
    throw InternalError("localization shift scan missed its certificate");
}

AffineSemigroup localize(const AffineSemigroup& s, const std::vector<Vec>& tau_rays) {
    Vec shift = localization_shift(s, tau_rays);
    if (is_zero(shift)) return s;
    std::vector<Vec> gens = s.gens;
    gens.push_back(vec_neg(shift));
    return make_semigroup(s.dim, gens);
}

std::vector<Vec> hilbert_basis(const Cone& c) {
    if (!is_strictly_convex(c))
        throw NotPointedError("irreducible points of a cone with lines");
    if (is_zero_cone(c)) return {};
    size_t n = static_cast<size_t>(c.dim);
    Vec lo = zero_vec(c.dim), hi = zero_vec(c.dim);
    for (const Vec& r : c.rays)
        for (size_t i = 0; i < n; ++i) {
            if (r[i] < 0) lo[i] += r[i];
            else hi[i] += r[i];
        }
    std::vector<Vec> pts;
    Vec cur = lo;
    while (true) {
        if (!is_zero(cur) && cone_contains(c, cur)) pts.push_back(cur);
        size_t k = 0;
        while (k < n && ++cur[k] > hi[k]) {
            cur[k] = lo[k];
            ++k;
        }
        if (k == n) break;
    }
    Vec grading = relative_interior_point(dual_cone(c));
    std::vector<Int> val(pts.size());
    std::vector<size_t> order(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        val[i] = dot(grading, pts[i]);
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return val[a] < val[b]; });
    std::vector<Vec> out;
    for (size_t oi : order) {
        const Vec& p = pts[oi];
        bool reducible = false;
        for (size_t oj : order) {
            if (val[oj] >= val[oi]) break;
            if (cone_contains(c, vec_sub(p, pts[oj]))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(p);
    }
    sort_unique(out);
    return out;
}

AffineSemigroup saturation(const AffineSemigroup& s) {
    const Cone& c = s.cone;
    int r = c.lin.rank();
    std::vector<Vec> gens;
    if (r == 0) {
        gens = hilbert_basis(c);
    } else {
        Mat w = complete_to_basis(c.lin);
        Mat winv = inverse_unimodular(w);
        int k = s.dim - r;
        std::vector<Vec> qrays;
        for (const Vec& ray : c.rays) {
            Vec y = row_times_mat(ray, winv);
            Vec tail(y.begin() + r, y.end());
            if (!is_zero(tail)) qrays.push_back(tail);
        }
        Cone qc = cone_from_rays(k, qrays);
        if (!is_strictly_convex(qc))
            throw InternalError("quotient by the minimal face must be strictly convex");
        for (const Vec& h : hilbert_basis(qc)) {
            Vec m = zero_vec(s.dim);
            for (int j = 0; j < k; ++j)
                m = vec_add(m, vec_scale(h[static_cast<size_t>(j)], w[static_cast<size_t>(r + j)]));
            gens.push_back(m);
        }
        for (const Vec& b : c.lin.basis) {
            gens.push_back(b);
            gens.push_back(vec_neg(b));
        }
    }
    return make_semigroup(s.dim, gens);
}

bool is_saturated(const AffineSemigroup& s) {
    for (const Vec& g : saturation(s).gens)
        if (!contains(s, g)) return false;
    return true;
}

std::vector<Vec> minimal_generators(const AffineSemigroup& s) {
    if (!is_strictly_convex(s.cone))
        throw NotPointedError("minimal generators exist only for strictly convex cones");
    std::vector<Vec> out;
    for (const Vec& g : s.gens) {
        bool reducible = false;
        for (const Vec& q : s.gens) {
            Vec d = vec_sub(g, q);
            if (!is_zero(d) && contains(s, d)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(g);
    }
    return out;
}

LinealitySplit split_lineality(const AffineSemigroup& s) {
    if (s.min_face.rank() == 0)
        return {zero_lattice(s.dim), s, identity_mat(s.dim)};
    if (!(lattice_saturation(s.min_face) == s.min_face))
        throw NotSplittableError("unit group has index > 1 in its saturation");
    Mat w = complete_to_basis(s.min_face);
    Mat winv = inverse_unimodular(w);
    int r = s.min_face.rank();
    int k = s.dim - r;
    std::vector<Vec> qgens;
    for (const Vec& g : s.gens) {
        Vec y = row_times_mat(g, winv);
        Vec tail(y.begin() + r, y.end());
        if (!is_zero(tail)) qgens.push_back(tail);
    }
    LinealitySplit out{s.min_face, make_semigroup(k, qgens), w};
    if (!is_strictly_convex(out.pointed.cone))
        throw InternalError("pointed part of a lineality split must be strictly convex");
    return out;
}

bool is_free_semigroup(const AffineSemigroup& s) {
    LinealitySplit sp;
    try {
        sp = split_lineality(s);
    } catch (const NotSplittableError&) {
        return false;
    }
    if (sp.pointed.dim == 0) return true;
    std::vector<Vec> mg = minimal_generators(sp.pointed);
    if (static_cast<int>(mg.size()) != sp.pointed.dim) return false;
    Int d = determinant(mg);
    return d == 1 || d == -1;
}

} // namespace toric
