#include "toric/divisor.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace toric {

namespace {

std::string vec_text(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::string lattice_text(const Lattice& l) {
    std::ostringstream os;
    os << "Z{";
    for (size_t i = 0; i < l.basis.size(); ++i) os << (i ? "," : "") << vec_text(l.basis[i]);
    os << "}";
    return os.str();
}

Int rat_floor(const Rat& q) { return floor_div(numerator(q), denominator(q)); }

Int rat_ceil(const Rat& q) { return -floor_div(-numerator(q), denominator(q)); }

// h on the ray generator nu: pairing with the data of any chart whose cone
// holds nu (well defined for Cartier data).
Int ray_value(const CartierData& d, const Vec& nu) {
    for (size_t i = 0; i < d.variety.charts.size(); ++i)
        if (cone_contains(d.variety.charts[i].cone, nu)) return dot(nu, d.data[i]);
    throw InternalError("fan ray not contained in any maximal cone");
}

bool qvec_lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Ordered adjacent chart pairs (i, j) with their shared facet.
std::vector<std::pair<size_t, size_t>> adjacent_pairs(const ToricTriple& v) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < v.charts.size(); ++i)
        for (size_t j = 0; j < v.charts.size(); ++j) {
            if (i == j) continue;
            Cone tau = intersect(v.charts[i].cone, v.charts[j].cone);
            if (tau.cone_dim == v.rank - 1) out.emplace_back(i, j);
        }
    return out;
}

// Upper convexity across every wall: the data of the neighbour dominates on
// the rays of the cone.
bool pairwise_convex(const CartierData& d) {
    for (auto [i, j] : adjacent_pairs(d.variety))
        for (const Vec& nu : d.variety.charts[i].cone.rays)
            if (dot(nu, d.data[j]) < dot(nu, d.data[i])) return false;
    return true;
}

void check_host_match(const CartierData& a, const CartierData& b) {
    bool same = a.variety.rank == b.variety.rank &&
                a.variety.charts.size() == b.variety.charts.size();
    if (same)
        for (size_t i = 0; i < a.variety.charts.size(); ++i)
            if (a.variety.charts[i].cone != b.variety.charts[i].cone ||
                a.variety.charts[i].semigroup.gens != b.variety.charts[i].semigroup.gens)
                same = false;
    if (!same)
        throw MalformedDocumentError("the two divisors live on different varieties");
}

void enumerate_box(const std::vector<Int>& lo, const std::vector<Int>& hi, size_t pos,
                   Vec& cur, std::vector<Vec>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (Int x = lo[pos]; x <= hi[pos]; ++x) {
        cur[pos] = x;
        enumerate_box(lo, hi, pos + 1, cur, out);
    }
}

void probe_directions(int dim, size_t pos, Vec& cur, std::vector<Vec>& out) {
    if (pos == cur.size()) {
        if (!is_zero(cur) && content(cur) == 1) out.push_back(cur);
        return;
    }
    for (long x = -3; x <= 3; ++x) {
        cur[pos] = x;
        probe_directions(dim, pos + 1, cur, out);
    }
}

} // namespace

CartierData make_cartier(const ToricTriple& v, const std::map<std::string, Vec>& assignment) {
    CartierData d;
    d.variety = v;
    for (const Chart& ch : v.charts) {
        auto it = assignment.find(ch.id);
        if (it == assignment.end())
            throw MalformedDocumentError("no divisor data for chart " + ch.id);
        if (static_cast<int>(it->second.size()) != v.rank)
            throw MalformedDocumentError("divisor data for chart " + ch.id +
                                         " has the wrong dimension");
        d.data.push_back(it->second);
    }
    if (assignment.size() != v.charts.size())
        throw MalformedDocumentError("divisor data names a chart the variety does not have");

    for (size_t i = 0; i < v.charts.size(); ++i)
        for (size_t j = i + 1; j < v.charts.size(); ++j) {
            Cone tau = intersect(v.charts[i].cone, v.charts[j].cone);
            FaceLattices face = face_data(v.charts[i].semigroup, tau.rays);
            Vec diff = vec_sub(d.data[i], d.data[j]);
            if (lattice_contains(face.span, diff)) continue;
            std::string msg = "data of charts " + v.charts[i].id + " and " + v.charts[j].id +
                              " differ by " + vec_text(diff) + ", which is outside the face group " +
                              lattice_text(face.span) + " of their shared face";
            if (lattice_contains(face.sat, diff))
                msg += "; it lies in the orthogonal lattice " + lattice_text(face.sat) +
                       ", so the data is Cartier on the normalization only";
            else
                msg += " and outside the orthogonal lattice " + lattice_text(face.sat);
            throw NotCartierError(msg);
        }
    return d;
}

DivisorPolytope divisor_polytope(const CartierData& d) {
    int k = d.variety.rank;
    DivisorPolytope p;
    p.dim = k;
    for (const Cone& f : d.variety.fan)
        if (f.cone_dim == 1) {
            p.normals.push_back(f.rays[0]);
            p.offsets.push_back(ray_value(d, f.rays[0]));
        }

    std::vector<Vec> rows;
    for (size_t i = 0; i < p.normals.size(); ++i) {
        Vec row = p.normals[i];
        row.push_back(-p.offsets[i]);
        rows.push_back(std::move(row));
    }
    Vec last = zero_vec(k);
    last.push_back(1);
    rows.push_back(std::move(last));
    Cone hom = cone_from_inequalities(k + 1, rows);

    p.bounded = hom.lin.rank() == 0;
    for (const Vec& r : hom.rays)
        if (r[static_cast<size_t>(k)] == 0) p.bounded = false;
    if (p.bounded) {
        for (const Vec& r : hom.rays) {
            Rat t(r[static_cast<size_t>(k)]);
            QVec vert;
            for (int c = 0; c < k; ++c) vert.push_back(Rat(r[static_cast<size_t>(c)]) / t);
            p.vertices.push_back(std::move(vert));
        }
        std::sort(p.vertices.begin(), p.vertices.end(), qvec_lex_less);
    }
    return p;
}

bool is_complete(const ToricTriple& v) {
    for (const Chart& ch : v.charts)
        if (ch.cone.cone_dim != v.rank) return false;

    for (size_t i = 0; i < v.charts.size(); ++i)
        for (const Cone& f : all_faces(v.charts[i].cone)) {
            if (f.cone_dim != v.rank - 1) continue;
            int shared = 0;
            for (size_t j = 0; j < v.charts.size(); ++j)
                if (j != i && is_face_of(f, v.charts[j].cone)) ++shared;
            if (shared != 1) return false;
        }

    std::vector<Vec> probes;
    Vec cur = zero_vec(v.rank);
    probe_directions(v.rank, 0, cur, probes);
    for (const Vec& w : probes) {
        bool covered = false;
        for (const Chart& ch : v.charts)
            if (cone_contains(ch.cone, w)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

std::vector<Vec> global_sections(const CartierData& d) {
    if (!is_complete(d.variety))
        throw NonCompleteFanError("global sections need a fan covering the whole space; "
                                  "only the polytope description is finite here");
    DivisorPolytope p = divisor_polytope(d);
    if (!p.bounded) throw InternalError("complete fan produced an unbounded polytope");
    if (p.vertices.empty()) return {};

    int k = d.variety.rank;
    std::vector<Int> lo, hi;
    for (int c = 0; c < k; ++c) {
        Rat mn = p.vertices[0][static_cast<size_t>(c)];
        Rat mx = mn;
        for (const QVec& vert : p.vertices) {
            mn = std::min(mn, vert[static_cast<size_t>(c)]);
            mx = std::max(mx, vert[static_cast<size_t>(c)]);
        }
        lo.push_back(rat_ceil(mn));
        hi.push_back(rat_floor(mx));
    }
    std::vector<Vec> box;
    Vec cur = zero_vec(k);
    enumerate_box(lo, hi, 0, cur, box);

    std::vector<Vec> out;
    for (const Vec& m : box) {
        bool inside = true;
        for (size_t i = 0; i < p.normals.size() && inside; ++i)
            if (dot(p.normals[i], m) < p.offsets[i]) inside = false;
        for (size_t i = 0; i < d.variety.charts.size() && inside; ++i)
            if (!contains(d.variety.charts[i].semigroup, vec_sub(m, d.data[i]))) inside = false;
        if (inside) out.push_back(m);
    }
    return out;
}

bool is_basepoint_free(const CartierData& d) {
    if (!is_complete(d.variety))
        throw NonCompleteFanError("base point freeness is only decided over a covering fan");
    bool convex = pairwise_convex(d);

    // cross-check: convexity holds exactly when the polytope's vertices are
    // the chart data
    DivisorPolytope p = divisor_polytope(d);
    std::set<Vec> data_set(d.data.begin(), d.data.end());
    std::set<Vec> vert_set;
    bool integral = true;
    for (const QVec& vert : p.vertices) {
        Vec w;
        for (const Rat& q : vert) {
            if (denominator(q) != 1) integral = false;
            w.push_back(numerator(q));
        }
        if (integral) vert_set.insert(w);
    }
    bool by_vertices = integral && vert_set == data_set;
    if (convex != by_vertices)
        throw InternalError("wall convexity and polytope vertex tests disagree");
    return convex;
}

bool is_ample(const CartierData& d) {
    if (!is_basepoint_free(d)) return false;
    for (auto [i, j] : adjacent_pairs(d.variety)) {
        Cone tau = intersect(d.variety.charts[i].cone, d.variety.charts[j].cone);
        for (const Vec& nu : d.variety.charts[i].cone.rays) {
            if (cone_contains(tau, nu)) continue;
            if (dot(nu, d.data[j]) <= dot(nu, d.data[i])) return false;
        }
    }
    return true;
}

bool is_very_ample(const CartierData& d) {
    if (!is_ample(d)) return false;
    std::vector<Vec> sections = global_sections(d);
    for (size_t i = 0; i < d.variety.charts.size(); ++i) {
        std::vector<Vec> shifted;
        for (const Vec& m : sections) shifted.push_back(vec_sub(m, d.data[i]));
        try {
            if (!same_members(make_semigroup(d.variety.rank, shifted),
                              d.variety.charts[i].semigroup))
                return false;
        } catch (const GroupNotFullError&) {
            return false;
        }
    }
    return true;
}

std::optional<Vec> principal_witness(const CartierData& d) {
    Mat rows;
    Vec rhs;
    for (size_t i = 0; i < d.variety.charts.size(); ++i)
        for (const Vec& nu : d.variety.charts[i].cone.rays) {
            rows.push_back(nu);
            rhs.push_back(dot(nu, d.data[i]));
        }
    if (rows.empty()) return zero_vec(d.variety.rank);
    return solve_left(transpose(rows), rhs);
}

bool is_principal(const CartierData& d) { return principal_witness(d).has_value(); }

bool divisors_equivalent(const CartierData& a, const CartierData& b) {
    check_host_match(a, b);
    CartierData diff;
    diff.variety = a.variety;
    for (size_t i = 0; i < a.data.size(); ++i) diff.data.push_back(vec_sub(a.data[i], b.data[i]));
    return is_principal(diff);
}

CartierData gkz_triple(const std::vector<Vec>& points_in) {
    std::vector<Vec> points = points_in;
    sort_unique(points);
    if (points.empty()) throw DegeneratePolytopeError("no points given");
    size_t amb = points[0].size();
    for (const Vec& p : points)
        if (p.size() != amb) throw MalformedDocumentError("points of mixed dimension");

    std::vector<Vec> diffs;
    for (size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    Lattice span = lattice_span(static_cast<int>(amb), diffs);

    int k;
    std::vector<Vec> pts;
    if (span == full_lattice(static_cast<int>(amb))) {
        k = static_cast<int>(amb);
        pts = points;
    } else {
        // re-express in a basis of the difference group so it becomes the
        // full lattice
        k = span.rank();
        for (const Vec& p : points) {
            auto coords = lattice_coords(span, vec_sub(p, points[0]));
            if (!coords) throw InternalError("difference outside its own span");
            pts.push_back(*coords);
        }
    }

    std::vector<ChartInput> inputs;
    std::map<std::string, Vec> assignment;
    for (const Vec& u : pts) {
        std::vector<Vec> ineqs;
        std::vector<Vec> gens;
        for (const Vec& w : pts) {
            Vec diff = vec_sub(w, u);
            if (is_zero(diff)) continue;
            ineqs.push_back(diff);
            gens.push_back(std::move(diff));
        }
        Cone normal = cone_from_inequalities(k, ineqs);
        if (normal.cone_dim != k) continue;
        std::string id = "g" + std::to_string(assignment.size());
        assignment[id] = u;
        inputs.push_back({id, normal.rays, std::move(gens)});
    }
    return make_cartier(build_triple(k, inputs), assignment);
}

} // namespace toric
