#pragma once

// Complex scalars under two interchangeable backends: floating
// (std::complex<double>) and exact (Gaussian rationals over arbitrary
// precision integers). Arithmetic between mixed backends promotes to
// floating; square roots of exact values stay exact only when the root
// lies in Q(i), otherwise they promote and the caller can record it.

#include <complex>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace isocover {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Global comparison tolerance for the floating backend. Exact values
// compare exactly; anything involving a float compares within epsilon().
double epsilon();
void set_epsilon(double eps);

// sqrt(q) if it is rational, nullopt otherwise. q must be >= 0.
std::optional<Rational> sqrt_rational(const Rational& q);

struct GaussianRational {
  Rational re, im;
};

// Principal square root of x + iy inside Q(i), when it exists there.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(int v) : exact_(true) { q_.re = v; }                      // NOLINT
  Scalar(double v) : exact_(false), f_(v) {}                       // NOLINT
  Scalar(double re, double im) : exact_(false), f_(re, im) {}
  Scalar(const std::complex<double>& z) : exact_(false), f_(z) {}  // NOLINT
  Scalar(const Rational& re) : exact_(true) { q_.re = re; }        // NOLINT
  Scalar(const Rational& re, const Rational& im) : exact_(true), q_{re, im} {}
  Scalar(const GaussianRational& q) : exact_(true), q_(q) {}       // NOLINT

  bool is_exact() const { return exact_; }
  const GaussianRational& exact_value() const;  // throws if floating
  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }
  bool is_zero() const;  // exact zero, or |.| == 0 on the float backend

  Scalar conj() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on exact /0

 private:
  bool exact_;
  std::complex<double> f_{0.0, 0.0};
  GaussianRational q_;
};

// Exact equality when both sides are exact, |a-b| <= eps otherwise.
bool approx_eq(const Scalar& a, const Scalar& b, double eps);
bool approx_eq(const Scalar& a, const Scalar& b);  // eps = epsilon()

// Principal branch; sets promoted when an exact input had to leave Q(i).
Scalar sqrt_scalar(const Scalar& s, bool* promoted = nullptr);

std::string to_string(const Scalar& s);

}  // namespace isocover
