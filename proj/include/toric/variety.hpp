#pragma once

#include "toric/semigroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toric {

// One affine chart: a strictly convex cone sigma in N together with a
// semigroup in M whose cone is the dual of sigma.
struct Chart {
    std::string id;
    Cone cone;
    AffineSemigroup semigroup;
};

// Charted fan. `charts` carries the maximal cones in canonical order; `fan`
// is the closure of the maximal cones under taking faces, deduplicated and
// canonically sorted. Face semigroups are always derived by localization.
struct ToricTriple {
    int rank = 0;
    std::vector<Chart> charts;
    std::vector<Cone> fan;
};

struct ChartInput {
    std::string id;
    std::vector<Vec> rays;
    std::vector<Vec> gens;
};

// Validates and assembles a triple. Checks, in order: structural sanity,
// strict convexity and inclusion-maximality of the listed cones, that each
// semigroup's cone is the dual of its chart cone, that pairwise
// intersections are common faces, and that for every pair the two
// localizations at the shared face agree and equal the sum of the two chart
// semigroups. Errors name the offending cones.
ToricTriple build_triple(int rank, const std::vector<ChartInput>& inputs);

// First chart (canonical order) whose cone has tau as a face. Throws
// UnknownConeError if tau is not in the fan.
const Chart& chart_above(const ToricTriple& v, const Cone& tau);

// The fan member with the given ray list. Throws UnknownConeError.
const Cone& find_fan_cone(const ToricTriple& v, const std::vector<Vec>& rays);

// Face semigroup of tau, computed from the first chart above it.
AffineSemigroup face_semigroup(const ToricTriple& v, const Cone& tau);

// One torus orbit per fan cone. `span` is the group generated by the face
// semigroup's invertible part, `sat` its saturation inside M, `index` the
// (finite) index between them; the orbit is a torus of rank sat.rank().
struct OrbitDescriptor {
    Cone cone;
    Lattice span;
    Lattice sat;
    IndexResult index;
    int dim = 0;
};
std::vector<OrbitDescriptor> orbits(const ToricTriple& v);

// Closure of the orbit of tau, as a triple of rank = d - dim tau: the charts
// above tau restricted to the face's span lattice, re-expressed in its basis.
ToricTriple orbit_closure(const ToricTriple& v, const Cone& tau);

// Same fan, every chart semigroup saturated. Idempotent.
ToricTriple normalization(const ToricTriple& v);

// Fan cones whose orbits are smooth points: the cone is regular, the face
// index is 1 and the face semigroup is free.
std::vector<Cone> smooth_locus(const ToricTriple& v);

// True iff v lies in the support of the fan: the one-parameter subgroup of v
// has a limit.
bool limit_exists(const ToricTriple& v, const Vec& dir);

// Lattice of relations of the chart generators, with one binomial (plus,
// minus exponent pair) per basis vector. The basis binomials cut out the
// chart set-theoretically but need not generate the full relation ideal;
// `full_ideal_basis` stays false to record that.
struct ToricIdealData {
    Lattice relations;
    std::vector<std::pair<Vec, Vec>> binomials;
    bool full_ideal_basis = false;
};
ToricIdealData toric_ideal_lattice(const AffineSemigroup& s);

// Checks that push (a map N_source -> N_target) carries the source triple
// into the target triple: each maximal source cone needs a target chart
// whose semigroup pulls back into the source chart's semigroup. `assignment`
// pairs source chart ids with the first compatible target chart id; on
// failure `failing` names the source chart with no compatible cone.
struct FanMapCheck {
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> assignment;
    std::string failing;
};
FanMapCheck check_fan_map(const LinearMap& push, const ToricTriple& source,
                          const ToricTriple& target);

// Given a map out of the orbit of tau, described by the images (rows, one
// per basis vector of the face span lattice), decides whether it extends
// integrally to the saturated face lattice. On success `extension` lists the
// images of the saturation's basis vectors.
struct LiftResult {
    bool lifts = false;
    Mat extension;
};
LiftResult lifts_to_normalization(const ToricTriple& v, const Cone& tau,
                                  const Mat& images, int target_rank);

} // namespace toric
