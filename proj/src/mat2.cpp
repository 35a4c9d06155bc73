#include "isocover/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isocover {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Mat2 operator*(const Scalar& s, const Mat2& m) {
  return {s * m.m11, s * m.m12, s * m.m21, s * m.m22};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}

Mat2 operator-(const Mat2& m) { return {-m.m11, -m.m12, -m.m21, -m.m22}; }

Scalar trace(const Mat2& m) { return m.m11 + m.m22; }

Scalar det(const Mat2& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

Mat2 adjugate(const Mat2& m) { return {m.m22, -m.m12, -m.m21, m.m11}; }

Mat2 inverse(const Mat2& m) {
  Scalar d = det(m);
  if (d.is_exact()) {
    if (d.is_zero()) throw std::domain_error("singular matrix");
    if (approx_eq(d, Scalar(1), 0.0)) return adjugate(m);
    return (Scalar(1) / d) * adjugate(m);
  }
  if (d.abs() <= epsilon()) throw std::domain_error("singular matrix");
  if (std::abs(d.to_complex() - std::complex<double>(1.0, 0.0)) <= epsilon())
    return adjugate(m);
  return (Scalar(1) / d) * adjugate(m);
}

bool is_unimodular(const Mat2& m, double eps) {
  return approx_eq(det(m), Scalar(1), eps);
}

bool is_unimodular(const Mat2& m) { return is_unimodular(m, epsilon()); }

Mat2 require_unimodular(const Mat2& m) {
  if (!is_unimodular(m)) throw std::domain_error("matrix not unimodular");
  return m;
}

bool approx_eq(const Mat2& a, const Mat2& b, double eps) {
  return approx_eq(a.m11, b.m11, eps) && approx_eq(a.m12, b.m12, eps) &&
         approx_eq(a.m21, b.m21, eps) && approx_eq(a.m22, b.m22, eps);
}

bool approx_eq(const Mat2& a, const Mat2& b) {
  return approx_eq(a, b, epsilon());
}

double max_entry_dist(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.m11.to_complex() - b.m11.to_complex()),
                   std::abs(a.m12.to_complex() - b.m12.to_complex()),
                   std::abs(a.m21.to_complex() - b.m21.to_complex()),
                   std::abs(a.m22.to_complex() - b.m22.to_complex())});
}

bool is_exact(const Mat2& m) {
  return m.m11.is_exact() && m.m12.is_exact() && m.m21.is_exact() &&
         m.m22.is_exact();
}

std::string to_string(const Mat2& m) {
  std::ostringstream out;
  out << "[[" << to_string(m.m11) << ", " << to_string(m.m12) << "], ["
      << to_string(m.m21) << ", " << to_string(m.m22) << "]]";
  return out.str();
}

}  // namespace isocover
