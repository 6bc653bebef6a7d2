#pragma once

#include "toric/variety.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// Monomial ideal of a chart: a duplicate-free, canonically sorted list of
// exponents, each a member of the chart semigroup.
struct MonomialIdeal {
    AffineSemigroup chart;
    std::vector<Vec> exponents;
};

MonomialIdeal make_monomial_ideal(const AffineSemigroup& chart, std::vector<Vec> exponents);

// Convex hull of the exponents plus the chart's recession cone. `support` is
// the dual of the recession cone; on it the minimum of the pairings against
// the exponents is finite and piecewise linear, linear with functional m on
// the paired cone of `linearity`.
struct NewtonPolyhedron {
    Cone recession;
    Cone support;
    std::vector<Vec> vertices;
    std::vector<std::pair<Cone, Vec>> linearity;
};

// Requires a strictly convex recession cone; throws NotPointedError.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

// min over the exponents of <nu, m>; nu must lie in the support.
Int order_function(const NewtonPolyhedron& np, const Vec& nu);

// One chart per region of linearity of the order function: on the region of
// the exponent m the chart semigroup is the chart plus all differences to m.
// Regions whose cone has full dimension inside the support carry charts;
// coinciding regions are emitted once. Ids are id_prefix.0, id_prefix.1, ...
// in canonical exponent order.
std::vector<ChartInput> blowup_chart_inputs(const MonomialIdeal& ideal,
                                            const std::string& id_prefix);

ToricTriple blowup_affine(const MonomialIdeal& ideal, const std::string& id_prefix = "b");

// Blow up one ideal per chart and glue. The per-chart ideals must extend to
// the same ideal on every shared face; otherwise SheafIncompatibleError.
ToricTriple blowup_sheaf(const ToricTriple& v,
                         const std::map<std::string, std::vector<Vec>>& exponents);

} // namespace toric
