#pragma once

#include "toric/cone.hpp"
#include "toric/lattice.hpp"
#include "toric/vec.hpp"

#include <vector>

namespace toric {

// Finitely generated subsemigroup of Z^dim whose generators span the full
// lattice as a group. Generators are stored nonzero, deduplicated and sorted;
// the derived fields are determined by them.
struct AffineSemigroup {
    int dim = 0;
    std::vector<Vec> gens;
    Cone cone;                  // nonnegative span of the generators
    std::vector<Vec> lin_gens;  // generators on the minimal face of the cone
    std::vector<Vec> pos_gens;  // remaining generators
    Lattice min_face;           // group generated by lin_gens
    Vec grading;                // zero on min_face, strictly positive on pos_gens

    bool operator==(const AffineSemigroup& o) const {
        return dim == o.dim && gens == o.gens;
    }
};

// Throws GroupNotFullError if the generators do not span Z^dim as a group.
AffineSemigroup make_semigroup(int dim, std::vector<Vec> gens);

bool contains(const AffineSemigroup& s, const Vec& v);

// Member-set equality, decided by mutual containment of generator lists.
bool same_members(const AffineSemigroup& a, const AffineSemigroup& b);

// Lattice data attached to the slice orthogonal to the given vectors: the
// group generated by the members lying in the slice, the saturated lattice of
// all integer vectors in the slice, and the index of the first in the second.
struct FaceLattices {
    Lattice span;
    Lattice sat;
    IndexResult index;
};
FaceLattices face_data(const AffineSemigroup& s, const std::vector<Vec>& tau_rays);

// Smallest member of the relative interior of cone(s) sliced orthogonally to
// tau_rays, by total absolute value then lexicographic order; zero when the
// slice is the zero cone.
Vec localization_shift(const AffineSemigroup& s, const std::vector<Vec>& tau_rays);

// Adjoins the negative of the localization shift.
AffineSemigroup localize(const AffineSemigroup& s, const std::vector<Vec>& tau_rays);

// Irreducible lattice points of a strictly convex cone; they generate the
// points of the cone and no proper subset does.
std::vector<Vec> hilbert_basis(const Cone& c);

// Semigroup of all lattice points of cone(s).
AffineSemigroup saturation(const AffineSemigroup& s);
bool is_saturated(const AffineSemigroup& s);

// Unique minimal generating set. Throws NotPointedError if cone(s) is not
// strictly convex.
std::vector<Vec> minimal_generators(const AffineSemigroup& s);

// Decomposition s = (unit group) x (pointed part) in the coordinates given by
// the unimodular matrix `basis`, whose first rows span the unit group; the
// pointed part lives in the remaining coordinates. Throws NotSplittableError
// if the unit group is not saturated, in which case no such decomposition
// exists.
struct LinealitySplit {
    Lattice unit_group;
    AffineSemigroup pointed;
    Mat basis;
};
LinealitySplit split_lineality(const AffineSemigroup& s);

// True iff s is a product of a full unit group and a free monoid on
// rank-many independent generators that complete a lattice basis.
bool is_free_semigroup(const AffineSemigroup& s);

} // namespace toric
