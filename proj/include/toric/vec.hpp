#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>; // row major

using QVec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Int& c, const Vec& a);
Int dot(const Vec& a, const Vec& b);
Rat dot_q(const Vec& a, const QVec& b);
bool is_zero(const Vec& a);
Int l1_norm(const Vec& a);

// Componentwise gcd, always >= 0; 0 for the zero vector.
Int content(const Vec& a);
// a / content(a); the zero vector is returned unchanged.
Vec primitive(const Vec& a);

// Lexicographic order, used everywhere a canonical order is needed.
bool lex_less(const Vec& a, const Vec& b);
// (l1 norm, lex) order used for canonical smallest-member choices.
bool norm_lex_less(const Vec& a, const Vec& b);

Vec zero_vec(int n);
Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
// v * a  (row vector times matrix).
Vec row_times_mat(const Vec& v, const Mat& a);

std::string vec_to_string(const Vec& a);
std::string mat_to_string(const Mat& a);

// Sorts lexicographically and removes duplicates.
void sort_unique(std::vector<Vec>& rows);

// Floored division/modulo (b > 0): remainder in [0, b).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

} // namespace toric
