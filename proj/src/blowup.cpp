#include "toric/blowup.hpp"

#include "toric/errors.hpp"

#include <iterator>
#include <sstream>
#include <utility>

namespace toric {

namespace {

std::string vec_text(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "]";
    return os.str();
}

struct LinearityRegion {
    Vec exponent;
    Cone cone;
    bool full = false;
};

// Region of the support where the exponent realizes the minimum.
std::vector<LinearityRegion> linearity_regions(const MonomialIdeal& ideal) {
    const AffineSemigroup& s = ideal.chart;
    Cone sigma = dual_cone(s.cone);
    std::vector<LinearityRegion> out;
    out.reserve(ideal.exponents.size());
    for (const Vec& mi : ideal.exponents) {
        std::vector<Vec> ineqs;
        for (const Vec& mj : ideal.exponents) {
            Vec d = vec_sub(mj, mi);
            if (!is_zero(d)) ineqs.push_back(std::move(d));
        }
        Cone region = ineqs.empty() ? sigma : intersect(sigma, cone_from_inequalities(s.dim, ineqs));
        bool full = region.cone_dim == sigma.cone_dim;
        out.push_back({mi, std::move(region), full});
    }
    return out;
}

} // namespace

MonomialIdeal make_monomial_ideal(const AffineSemigroup& chart, std::vector<Vec> exponents) {
    sort_unique(exponents);
    if (exponents.empty())
        throw MalformedDocumentError("a monomial ideal needs at least one exponent");
    for (const Vec& e : exponents) {
        if (static_cast<int>(e.size()) != chart.dim)
            throw MalformedDocumentError("exponent " + vec_text(e) + " has the wrong dimension");
        if (!contains(chart, e))
            throw MalformedDocumentError("exponent " + vec_text(e) +
                                         " is not a member of the chart semigroup");
    }
    return {chart, std::move(exponents)};
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    if (!is_strictly_convex(ideal.chart.cone))
        throw NotPointedError("newton polyhedron needs a strictly convex recession cone");
    NewtonPolyhedron np;
    np.recession = ideal.chart.cone;
    np.support = dual_cone(np.recession);
    for (LinearityRegion& r : linearity_regions(ideal))
        if (r.full) {
            np.vertices.push_back(r.exponent);
            np.linearity.emplace_back(std::move(r.cone), std::move(r.exponent));
        }
    return np;
}

Int order_function(const NewtonPolyhedron& np, const Vec& nu) {
    if (!cone_contains(np.support, nu))
        throw MalformedDocumentError("direction " + vec_text(nu) +
                                     " lies outside the support of the order function");
    bool first = true;
    Int best = 0;
    for (const Vec& m : np.vertices) {
        Int x = dot(nu, m);
        if (first || x < best) {
            best = x;
            first = false;
        }
    }
    return best;
}

std::vector<ChartInput> blowup_chart_inputs(const MonomialIdeal& ideal,
                                            const std::string& id_prefix) {
    std::vector<ChartInput> out;
    std::vector<Cone> seen;
    int next = 0;
    for (LinearityRegion& r : linearity_regions(ideal)) {
        if (!r.full) continue;
        // two exponents with one region differ by a unit and give one chart
        bool dup = false;
        for (const Cone& c : seen)
            if (c == r.cone) {
                dup = true;
                break;
            }
        if (dup) continue;
        seen.push_back(r.cone);
        std::vector<Vec> gens = ideal.chart.gens;
        for (const Vec& mj : ideal.exponents) {
            Vec d = vec_sub(mj, r.exponent);
            if (!is_zero(d)) gens.push_back(std::move(d));
        }
        out.push_back({id_prefix + "." + std::to_string(next), r.cone.rays, std::move(gens)});
        ++next;
    }
    return out;
}

ToricTriple blowup_affine(const MonomialIdeal& ideal, const std::string& id_prefix) {
    return build_triple(ideal.chart.dim, blowup_chart_inputs(ideal, id_prefix));
}

namespace {

// Both ideals must generate the same ideal of the shared-face semigroup.
void check_extensions_agree(const ToricTriple& v, const std::vector<MonomialIdeal>& ideals) {
    for (size_t i = 0; i < v.charts.size(); ++i)
        for (size_t j = i + 1; j < v.charts.size(); ++j) {
            Cone shared = intersect(v.charts[i].cone, v.charts[j].cone);
            AffineSemigroup face = localize(v.charts[i].semigroup, shared.rays);
            auto covered = [&](const Vec& e, const MonomialIdeal& other) {
                for (const Vec& f : other.exponents)
                    if (contains(face, vec_sub(e, f))) return true;
                return false;
            };
            for (const Vec& e : ideals[i].exponents)
                if (!covered(e, ideals[j]))
                    throw SheafIncompatibleError(
                        "ideals of charts " + v.charts[i].id + " and " + v.charts[j].id +
                        " extend differently to their shared face " + cone_key(shared));
            for (const Vec& e : ideals[j].exponents)
                if (!covered(e, ideals[i]))
                    throw SheafIncompatibleError(
                        "ideals of charts " + v.charts[i].id + " and " + v.charts[j].id +
                        " extend differently to their shared face " + cone_key(shared));
        }
}

} // namespace

ToricTriple blowup_sheaf(const ToricTriple& v,
                         const std::map<std::string, std::vector<Vec>>& exponents) {
    if (exponents.size() != v.charts.size())
        throw MalformedDocumentError("expected exactly one exponent list per chart");
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(v.charts.size());
    for (const Chart& ch : v.charts) {
        auto it = exponents.find(ch.id);
        if (it == exponents.end())
            throw MalformedDocumentError("no ideal given for chart " + ch.id);
        ideals.push_back(make_monomial_ideal(ch.semigroup, it->second));
    }
    check_extensions_agree(v, ideals);
    std::vector<ChartInput> inputs;
    for (size_t i = 0; i < v.charts.size(); ++i) {
        std::vector<ChartInput> part = blowup_chart_inputs(ideals[i], v.charts[i].id);
        inputs.insert(inputs.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return build_triple(v.rank, inputs);
}

} // namespace toric
