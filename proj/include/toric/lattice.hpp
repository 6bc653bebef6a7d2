#pragma once

#include "toric/vec.hpp"

#include <optional>

namespace toric {

// Row-style Hermite normal form: h = u * a with u unimodular, h in echelon
// form, pivots positive, entries above a pivot reduced into [0, pivot).
struct HnfResult {
    Mat h;
    Mat u;
};
HnfResult hermite_normal_form(const Mat& a);

// Smith normal form: d = u * a * v with u, v unimodular, d diagonal with
// d_1 | d_2 | ... and nonnegative diagonal. v_inv is v^{-1} (tracked, not
// recomputed).
struct SnfResult {
    Mat d;
    Mat u;
    Mat v;
    Mat v_inv;
};
SnfResult smith_normal_form(const Mat& a);

// A sublattice of Z^dim given by a canonical (HNF) basis, one row per basis
// vector. rank == basis.size().
struct Lattice {
    int dim = 0;
    Mat basis;

    int rank() const { return static_cast<int>(basis.size()); }
    bool operator==(const Lattice&) const = default;
};

// Span of arbitrary integer vectors, basis in canonical HNF form.
Lattice lattice_span(int dim, const std::vector<Vec>& vectors);

Lattice full_lattice(int dim);
Lattice zero_lattice(int dim);

// Coordinates of v in the basis of L, if v lies in L.
std::optional<Vec> lattice_coords(const Lattice& l, const Vec& v);
bool lattice_contains(const Lattice& l, const Vec& v);

// Index [amb : sub]. finite == false means the ranks differ (index infinite).
// Throws if sub is not contained in amb.
struct IndexResult {
    bool finite = true;
    Int value = 1;
};
IndexResult sublattice_index(const Lattice& sub, const Lattice& amb);

// Smallest sublattice containing l whose quotient in Z^dim is torsion free.
Lattice lattice_saturation(const Lattice& l);
bool is_saturated(const Lattice& l);

// For saturated l of rank r, a unimodular dim x dim matrix whose first r rows
// are a basis of l. Throws InternalError if l is not saturated.
Mat complete_to_basis(const Lattice& l);

// Exact determinant of a square matrix (Bareiss).
Int determinant(const Mat& a);

// True iff the d x d matrix formed by the given d vectors has nonzero
// determinant.
bool wedge_nonzero(const std::vector<Vec>& vectors);

// Group homomorphism Z^src -> Z^dst; rows[i] is the image of e_i, applied as
// v |-> sum v_i rows[i].
struct LinearMap {
    int src = 0;
    int dst = 0;
    Mat rows;

    Vec apply(const Vec& v) const;
    LinearMap transpose_map() const;
};

// Saturated lattice {v : v * rows = 0} (kernel of the map).
Lattice kernel_lattice(const LinearMap& map);

// Integer solution x of x * a = v, if one exists.
std::optional<Vec> solve_left(const Mat& a, const Vec& v);

// Inverse of a matrix with determinant +-1. Throws InternalError otherwise.
Mat inverse_unimodular(const Mat& a);

int mat_rank(const Mat& a);

} // namespace toric
