#pragma once

// 2x2 complex matrices over Scalar. Everything downstream works in SL(2),
// so the inverse of a unimodular matrix is taken via the adjugate, with no
// division. Unimodularity is a checked property, not a separate type.

#include <string>

#include "isocover/scalar.hpp"

namespace isocover {

struct Mat2 {
  Scalar m11, m12, m21, m22;

  static Mat2 identity() { return {1, 0, 0, 1}; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(const Scalar& s, const Mat2& m);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& m);

Scalar trace(const Mat2& m);
Scalar det(const Mat2& m);
Mat2 adjugate(const Mat2& m);

// Adjugate when det is 1 (exactly, or within eps on floats); otherwise
// adjugate/det. Throws std::domain_error("singular matrix") when det
// vanishes (exactly, or |det| <= eps).
Mat2 inverse(const Mat2& m);

bool is_unimodular(const Mat2& m, double eps);
bool is_unimodular(const Mat2& m);
// Returns m unchanged or throws std::domain_error("matrix not unimodular").
Mat2 require_unimodular(const Mat2& m);

bool approx_eq(const Mat2& a, const Mat2& b, double eps);
bool approx_eq(const Mat2& a, const Mat2& b);
// max over entries of |a_ij - b_ij|, for diagnostics
double max_entry_dist(const Mat2& a, const Mat2& b);

bool is_exact(const Mat2& m);  // all four entries exact

std::string to_string(const Mat2& m);

}  // namespace isocover
