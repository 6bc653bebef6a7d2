#include "toric/lattice.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

// g = s*x + t*y, g >= 0.
static void xgcd(const Int& x, const Int& y, Int& g, Int& s, Int& t) {
    Int old_r = x, r = y;
    Int old_s = 1, s1 = 0;
    Int old_t = 0, t1 = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s1; old_s = s1; s1 = tmp;
        tmp = old_t - q * t1; old_t = t1; t1 = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    g = old_r; s = old_s; t = old_t;
}

static void check_rect(const Mat& a) {
    for (const Vec& row : a)
        if (row.size() != a[0].size()) throw InternalError("ragged matrix");
}

// Unimodular 2x2 combination of rows i and j of both h and u so that
// h[j][col] becomes 0 and h[i][col] becomes gcd. When the pivot already
// divides the entry, row i is left untouched (keeps the loops in SNF
// stationary).
static void row_gcd_step(Mat& h, Mat& u, size_t i, size_t j, size_t col) {
    Int x = h[i][col], y = h[j][col];
    if (x != 0 && y % x == 0) {
        Int q = y / x;
        for (size_t k = 0; k < h[j].size(); ++k) h[j][k] -= q * h[i][k];
        for (size_t k = 0; k < u[j].size(); ++k) u[j][k] -= q * u[i][k];
        return;
    }
    Int g, s, t;
    xgcd(x, y, g, s, t);
    Int xr = x / g, yr = y / g;
    auto combine = [&](Mat& m) {
        Vec ri(m[i].size()), rj(m[j].size());
        for (size_t k = 0; k < m[i].size(); ++k) {
            ri[k] = s * m[i][k] + t * m[j][k];
            rj[k] = -yr * m[i][k] + xr * m[j][k];
        }
        m[i] = std::move(ri);
        m[j] = std::move(rj);
    };
    combine(h);
    combine(u);
}

HnfResult hermite_normal_form(const Mat& a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (m) check_rect(a);
    Mat h = a;
    Mat u = identity_mat(static_cast<int>(m));
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        bool found = false;
        for (size_t r = row; r < m; ++r)
            if (h[r][col] != 0) { piv = r; found = true; break; }
        if (!found) continue;
        std::swap(h[row], h[piv]);
        std::swap(u[row], u[piv]);
        for (size_t r = row + 1; r < m; ++r)
            if (h[r][col] != 0) row_gcd_step(h, u, row, r, col);
        if (h[row][col] < 0) {
            for (Int& x : h[row]) x = -x;
            for (Int& x : u[row]) x = -x;
        }
        for (size_t r = 0; r < row; ++r) {
            Int q = floor_div(h[r][col], h[row][col]);
            if (q == 0) continue;
            for (size_t k = 0; k < n; ++k) h[r][k] -= q * h[row][k];
            for (size_t k = 0; k < m; ++k) u[r][k] -= q * u[row][k];
        }
        ++row;
    }
    return {std::move(h), std::move(u)};
}

// Column analogue of row_gcd_step acting on d, v, v_inv: columns i, j of d
// are combined so d[prow][j] becomes 0.
static void col_gcd_step(Mat& d, Mat& v, Mat& v_inv, size_t prow, size_t i, size_t j) {
    Int x = d[prow][i], y = d[prow][j];
    if (x != 0 && y % x == 0) {
        Int q = y / x;
        for (auto& row : d) row[j] -= q * row[i];
        for (auto& row : v) row[j] -= q * row[i];
        for (size_t k = 0; k < v_inv[i].size(); ++k) v_inv[i][k] += q * v_inv[j][k];
        return;
    }
    Int g, s, t;
    xgcd(x, y, g, s, t);
    Int xr = x / g, yr = y / g;
    for (auto& row : d) {
        Int ci = s * row[i] + t * row[j];
        Int cj = -yr * row[i] + xr * row[j];
        row[i] = ci;
        row[j] = cj;
    }
    for (auto& row : v) {
        Int ci = s * row[i] + t * row[j];
        Int cj = -yr * row[i] + xr * row[j];
        row[i] = ci;
        row[j] = cj;
    }
    // v_inv picks up the inverse transform as row operations
    Vec ri(v_inv[i].size()), rj(v_inv[j].size());
    for (size_t k = 0; k < v_inv[i].size(); ++k) {
        ri[k] = xr * v_inv[i][k] + yr * v_inv[j][k];
        rj[k] = -t * v_inv[i][k] + s * v_inv[j][k];
    }
    v_inv[i] = std::move(ri);
    v_inv[j] = std::move(rj);
}

SnfResult smith_normal_form(const Mat& a) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    if (m) check_rect(a);
    Mat d = a;
    Mat u = identity_mat(static_cast<int>(m));
    Mat v = identity_mat(static_cast<int>(n));
    Mat v_inv = identity_mat(static_cast<int>(n));
    size_t k = std::min(m, n);

    auto diagonalize = [&]() {
        for (size_t t = 0; t < k; ++t) {
            // pick smallest-abs nonzero entry of the trailing block as pivot
            size_t pr = t, pc = t;
            bool found = false;
            for (size_t r = t; r < m; ++r)
                for (size_t c = t; c < n; ++c)
                    if (d[r][c] != 0 &&
                        (!found || abs(d[r][c]) < abs(d[pr][pc]))) {
                        pr = r; pc = c; found = true;
                    }
            if (!found) return;
            if (pr != t) { std::swap(d[t], d[pr]); std::swap(u[t], u[pr]); }
            if (pc != t) {
                for (auto& row : d) std::swap(row[t], row[pc]);
                for (auto& row : v) std::swap(row[t], row[pc]);
                std::swap(v_inv[t], v_inv[pc]);
            }
            bool clean = false;
            while (!clean) {
                clean = true;
                for (size_t r = t + 1; r < m; ++r)
                    if (d[r][t] != 0) { row_gcd_step(d, u, t, r, t); clean = false; }
                for (size_t c = t + 1; c < n; ++c)
                    if (d[t][c] != 0) { col_gcd_step(d, v, v_inv, t, t, c); clean = false; }
            }
            if (d[t][t] < 0) {
                for (Int& x : d[t]) x = -x;
                for (Int& x : u[t]) x = -x;
            }
        }
    };

    diagonalize();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = 0; t + 1 < k; ++t) {
            if (d[t][t] == 0) continue;
            if (d[t + 1][t + 1] % d[t][t] != 0) {
                for (size_t c = 0; c < n; ++c) d[t][c] += d[t + 1][c];
                for (size_t c = 0; c < m; ++c) u[t][c] += u[t + 1][c];
                diagonalize();
                changed = true;
                break;
            }
        }
    }
    return {std::move(d), std::move(u), std::move(v), std::move(v_inv)};
}

Lattice lattice_span(int dim, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw InternalError("lattice_span: vector dimension mismatch");
    HnfResult hu = hermite_normal_form(vectors);
    Lattice l;
    l.dim = dim;
    for (const Vec& row : hu.h)
        if (!is_zero(row)) l.basis.push_back(row);
    return l;
}

Lattice full_lattice(int dim) {
    Lattice l;
    l.dim = dim;
    l.basis = identity_mat(dim);
    return l;
}

Lattice zero_lattice(int dim) {
    Lattice l;
    l.dim = dim;
    return l;
}

static int pivot_col(const Vec& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return static_cast<int>(j);
    return -1;
}

std::optional<Vec> lattice_coords(const Lattice& l, const Vec& v) {
    if (static_cast<int>(v.size()) != l.dim) throw InternalError("lattice_coords dimension mismatch");
    Vec rem = v;
    Vec y;
    y.reserve(l.basis.size());
    for (const Vec& b : l.basis) {
        int p = pivot_col(b);
        if (p < 0) throw InternalError("zero row in lattice basis");
        if (rem[p] % b[p] != 0) return std::nullopt;
        Int q = rem[p] / b[p];
        if (q != 0)
            for (size_t k = 0; k < rem.size(); ++k) rem[k] -= q * b[k];
        y.push_back(q);
    }
    if (!is_zero(rem)) return std::nullopt;
    return y;
}

bool lattice_contains(const Lattice& l, const Vec& v) {
    return lattice_coords(l, v).has_value();
}

IndexResult sublattice_index(const Lattice& sub, const Lattice& amb) {
    if (sub.dim != amb.dim) throw InternalError("sublattice_index: ambient dimension mismatch");
    Mat x;
    for (const Vec& b : sub.basis) {
        auto c = lattice_coords(amb, b);
        if (!c) throw InternalError("sublattice_index: first argument not contained in second");
        x.push_back(*c);
    }
    if (sub.rank() < amb.rank()) return {false, 0};
    // ranks equal; coordinates form a square matrix
    IndexResult r;
    r.finite = true;
    r.value = abs(determinant(x));
    if (r.value == 0) throw InternalError("sublattice_index: degenerate coordinates");
    return r;
}

Lattice lattice_saturation(const Lattice& l) {
    if (l.rank() == 0) return l;
    LinearMap pair_with_basis{l.dim, l.rank(), transpose(l.basis)};
    Lattice perp = kernel_lattice(pair_with_basis);
    if (perp.rank() == 0) return full_lattice(l.dim);
    LinearMap pair_with_perp{l.dim, perp.rank(), transpose(perp.basis)};
    return kernel_lattice(pair_with_perp);
}

bool is_saturated(const Lattice& l) { return lattice_saturation(l) == l; }

Mat complete_to_basis(const Lattice& l) {
    if (!is_saturated(l)) throw InternalError("complete_to_basis: lattice not saturated");
    if (l.rank() == 0) return identity_mat(l.dim);
    SnfResult s = smith_normal_form(l.basis);
    for (int t = 0; t < l.rank(); ++t)
        if (s.d[t][t] != 1) throw InternalError("complete_to_basis: non-unit invariant factor");
    return s.v_inv;
}

Int determinant(const Mat& a) {
    size_t n = a.size();
    if (n == 0) return 1;
    check_rect(a);
    if (a[0].size() != n) throw InternalError("determinant of non-square matrix");
    Mat w = a;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && w[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(w[k], w[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

bool wedge_nonzero(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return true; // empty wedge in rank 0
    if (vectors.size() != vectors[0].size())
        throw InternalError("wedge_nonzero: need exactly dim vectors");
    return determinant(vectors) != 0;
}

Vec LinearMap::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != src) throw InternalError("LinearMap::apply size mismatch");
    if (rows.empty()) return zero_vec(dst);
    return row_times_mat(v, rows);
}

LinearMap LinearMap::transpose_map() const { return {dst, src, transpose(rows)}; }

Lattice kernel_lattice(const LinearMap& map) {
    if (static_cast<int>(map.rows.size()) != map.src)
        throw InternalError("kernel_lattice: row count != src rank");
    HnfResult hu = hermite_normal_form(map.rows);
    std::vector<Vec> gens;
    for (size_t i = 0; i < hu.h.size(); ++i)
        if (is_zero(hu.h[i])) gens.push_back(hu.u[i]);
    return lattice_span(map.src, gens);
}

std::optional<Vec> solve_left(const Mat& a, const Vec& v) {
    size_t m = a.size();
    HnfResult hu = hermite_normal_form(a);
    Vec rem = v;
    Vec y(m, Int(0));
    for (size_t i = 0; i < m; ++i) {
        int p = pivot_col(hu.h[i]);
        if (p < 0) break; // zero rows are at the bottom
        if (rem[p] % hu.h[i][p] != 0) return std::nullopt;
        Int q = rem[p] / hu.h[i][p];
        if (q != 0)
            for (size_t k = 0; k < rem.size(); ++k) rem[k] -= q * hu.h[i][k];
        y[i] = q;
    }
    if (!is_zero(rem)) return std::nullopt;
    return row_times_mat(y, hu.u);
}

Mat inverse_unimodular(const Mat& a) {
    size_t n = a.size();
    if (n && a[0].size() != n) throw InternalError("inverse_unimodular: non-square matrix");
    Mat inv;
    inv.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Vec e = zero_vec(static_cast<int>(n));
        e[i] = 1;
        auto x = solve_left(a, e);
        if (!x) throw InternalError("inverse_unimodular: matrix is not unimodular");
        inv.push_back(*x);
    }
    return inv;
}

int mat_rank(const Mat& a) {
    HnfResult hu = hermite_normal_form(a);
    int r = 0;
    for (const Vec& row : hu.h)
        if (!is_zero(row)) ++r;
    return r;
}

} // namespace toric
