#pragma once

#include "toric/lattice.hpp"

#include <string>
#include <vector>

namespace toric {

// Rational polyhedral cone in R^dim, canonical in both descriptions:
//   cone = nonneg span of `rays`  =  {v : a.v >= 0 for every a in `facets`}.
// Rays and facet normals are primitive and lex-sorted. A lineality direction
// shows up in `rays` as a +- pair, an equation in `facets` likewise. Two
// cones are equal iff their canonical forms are identical.
struct Cone {
    int dim = 0;
    int cone_dim = 0;
    std::vector<Vec> rays;
    std::vector<Vec> facets;
    Lattice lin; // saturated lineality lattice

    bool operator==(const Cone&) const = default;
};

Cone cone_from_rays(int dim, std::vector<Vec> gens);
Cone cone_from_inequalities(int dim, std::vector<Vec> ineqs);

// Swaps the two descriptions.
Cone dual_cone(const Cone& c);

Cone zero_cone(int dim);
Cone full_cone(int dim);

bool cone_contains(const Cone& c, const Vec& v);
bool cone_contains_q(const Cone& c, const QVec& v);
// Membership in the relative interior: strict on every facet that is not an
// equation.
bool relint_contains(const Cone& c, const Vec& v);

bool is_strictly_convex(const Cone& c);
bool is_zero_cone(const Cone& c);

// Sum of the canonical generator list; lies in the relative interior.
// Throws on the zero cone.
Vec relative_interior_point(const Cone& c);

// Every face, the cone itself and its minimal face included, sorted
// canonically (by dimension, then ray list).
std::vector<Cone> all_faces(const Cone& c);

bool is_face_of(const Cone& tau, const Cone& sigma);

Cone intersect(const Cone& a, const Cone& b);

// c cut with the subspace orthogonal to every vector of vs.
Cone intersect_orthogonal(const Cone& c, const std::vector<Vec>& vs);

// Canonical text key "[[...],[...]]" built from the ray list; used for maps
// and reports.
std::string cone_key(const Cone& c);

// Deterministic strict order compatible with the canonical form.
bool cone_less(const Cone& a, const Cone& b);

} // namespace toric
