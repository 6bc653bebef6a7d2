#pragma once

#include "toric/variety.hpp"

#include <map>
#include <optional>
#include <vector>

namespace toric {

// An invariant Cartier divisor: one lattice point per maximal chart, aligned
// with the chart order of the host. Differences of adjacent data lie in the
// face group of the shared face.
struct CartierData {
    ToricTriple variety;
    std::vector<Vec> data;
};

// Validates the assignment (keyed by chart id). Throws NotCartierError naming
// the face group and the orthogonal lattice when a difference escapes the
// former; the message says whether the data still descends to the
// normalization.
CartierData make_cartier(const ToricTriple& v, const std::map<std::string, Vec>& assignment);

// {m : <nu_rho, m> >= offset_rho over the rays rho of the fan}. Vertices are
// filled in exactly when the polyhedron has no recession direction.
struct DivisorPolytope {
    int dim = 0;
    std::vector<Vec> normals;
    std::vector<Int> offsets;
    bool bounded = false;
    std::vector<QVec> vertices;
};

DivisorPolytope divisor_polytope(const CartierData& d);

// The maximal cones cover every probe direction and each facet of each
// maximal cone is shared with exactly one other.
bool is_complete(const ToricTriple& v);

// Lattice points lying in m_c + semigroup for every maximal chart c. Throws
// NonCompleteFanError when the fan does not cover the whole space.
std::vector<Vec> global_sections(const CartierData& d);

bool is_basepoint_free(const CartierData& d);
bool is_ample(const CartierData& d);
bool is_very_ample(const CartierData& d);

// A single lattice point whose pairing with every ray matches the data, when
// one exists.
std::optional<Vec> principal_witness(const CartierData& d);
bool is_principal(const CartierData& d);

// True iff the difference of the two assignments is principal. The divisors
// must live on the same variety.
bool divisors_equivalent(const CartierData& a, const CartierData& b);

// Projective model of a finite point set: the normal fan of its convex hull,
// with chart semigroups generated by the differences into each vertex and the
// vertex itself as Cartier data. A point set spanning a proper sublattice or
// affine subspace is first re-expressed in a basis of the lattice its
// differences generate.
CartierData gkz_triple(const std::vector<Vec>& points);

} // namespace toric
