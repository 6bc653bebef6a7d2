#include "toric/vec.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

static void check_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw InternalError("vector size mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Int dot(const Vec& a, const Vec& b) {
    check_same_size(a, b);
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot_q(const Vec& a, const QVec& b) {
    if (a.size() != b.size()) throw InternalError("vector size mismatch in dot_q");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int l1_norm(const Vec& a) {
    Int s = 0;
    for (const Int& x : a) s += abs(x);
    return s;
}

Int content(const Vec& a) {
    Int g = 0;
    for (const Int& x : a) g = gcd(g, x);
    return g;
}

Vec primitive(const Vec& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool norm_lex_less(const Vec& a, const Vec& b) {
    Int na = l1_norm(a), nb = l1_norm(b);
    if (na != nb) return na < nb;
    return lex_less(a, b);
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Int(0)); }

Mat identity_mat(int n) {
    Mat m(static_cast<size_t>(n), zero_vec(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty()) return {};
    size_t n = a.size(), k = a[0].size(), m = b.empty() ? 0 : b[0].size();
    if (b.size() != k) throw InternalError("matrix size mismatch in mat_mul");
    Mat r(n, zero_vec(static_cast<int>(m)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    size_t n = a.size(), m = a[0].size();
    Mat r(m, zero_vec(static_cast<int>(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

Vec row_times_mat(const Vec& v, const Mat& a) {
    if (a.empty()) {
        if (!v.empty()) throw InternalError("row_times_mat: empty matrix, nonempty vector");
        return {};
    }
    if (v.size() != a.size()) throw InternalError("row_times_mat size mismatch");
    Vec r = zero_vec(static_cast<int>(a[0].size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * a[i][j];
    }
    return r;
}

std::string vec_to_string(const Vec& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

std::string mat_to_string(const Mat& a) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << " ";
        os << vec_to_string(a[i]);
    }
    os << "]";
    return os.str();
}

void sort_unique(std::vector<Vec>& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Int floor_div(const Int& a, const Int& b) {
    if (b <= 0) throw InternalError("floor_div needs positive divisor");
    Int q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

} // namespace toric
