#include "isocover/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isocover {

namespace {
double g_epsilon = 1e-9;
}

double epsilon() { return g_epsilon; }

void set_epsilon(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("epsilon must be positive");
  g_epsilon = eps;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt_rational needs a nonnegative input");
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.im == 0) {
    if (z.re >= 0) {
      auto r = sqrt_rational(z.re);
      if (!r) return std::nullopt;
      return GaussianRational{*r, Rational(0)};
    }
    auto r = sqrt_rational(-z.re);
    if (!r) return std::nullopt;
    return GaussianRational{Rational(0), *r};  // principal root of x < 0
  }
  // x + iy = (u + iv)^2 with u = sqrt((x+n)/2), |v| = sqrt((n-x)/2),
  // n = |z|; everything must stay rational.
  auto n = sqrt_rational(z.re * z.re + z.im * z.im);
  if (!n) return std::nullopt;
  auto u = sqrt_rational((z.re + *n) / 2);
  if (!u) return std::nullopt;
  auto v = sqrt_rational((*n - z.re) / 2);
  if (!v) return std::nullopt;
  if (z.im < 0) return GaussianRational{*u, -*v};
  return GaussianRational{*u, *v};
}

const GaussianRational& Scalar::exact_value() const {
  if (!exact_) throw std::domain_error("scalar is on the floating backend");
  return q_;
}

std::complex<double> Scalar::to_complex() const {
  if (!exact_) return f_;
  return {q_.re.convert_to<double>(), q_.im.convert_to<double>()};
}

bool Scalar::is_zero() const {
  if (exact_) return q_.re == 0 && q_.im == 0;
  return f_ == std::complex<double>(0.0, 0.0);
}

Scalar Scalar::conj() const {
  if (exact_) return Scalar(q_.re, -q_.im);
  return Scalar(std::conj(f_));
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(-q_.re, -q_.im);
  return Scalar(-f_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_)
    return Scalar(a.q_.re + b.q_.re, a.q_.im + b.q_.im);
  return Scalar(a.to_complex() + b.to_complex());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_)
    return Scalar(a.q_.re - b.q_.re, a.q_.im - b.q_.im);
  return Scalar(a.to_complex() - b.to_complex());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_)
    return Scalar(a.q_.re * b.q_.re - a.q_.im * b.q_.im,
                  a.q_.re * b.q_.im + a.q_.im * b.q_.re);
  return Scalar(a.to_complex() * b.to_complex());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.exact_ && b.exact_) {
    Rational norm = b.q_.re * b.q_.re + b.q_.im * b.q_.im;
    return Scalar((a.q_.re * b.q_.re + a.q_.im * b.q_.im) / norm,
                  (a.q_.im * b.q_.re - a.q_.re * b.q_.im) / norm);
  }
  return Scalar(a.to_complex() / b.to_complex());
}

bool approx_eq(const Scalar& a, const Scalar& b, double eps) {
  if (a.is_exact() && b.is_exact()) {
    return a.exact_value().re == b.exact_value().re &&
           a.exact_value().im == b.exact_value().im;
  }
  return std::abs(a.to_complex() - b.to_complex()) <= eps;
}

bool approx_eq(const Scalar& a, const Scalar& b) {
  return approx_eq(a, b, epsilon());
}

Scalar sqrt_scalar(const Scalar& s, bool* promoted) {
  if (promoted) *promoted = false;
  if (s.is_exact()) {
    auto r = exact_sqrt(s.exact_value());
    if (r) return Scalar(*r);
    if (promoted) *promoted = true;
  }
  return Scalar(std::sqrt(s.to_complex()));
}

namespace {

std::string rational_str(const Rational& q) { return q.str(); }

}  // namespace

std::string to_string(const Scalar& s) {
  std::ostringstream out;
  if (s.is_exact()) {
    const auto& q = s.exact_value();
    if (q.im == 0) return rational_str(q.re);
    if (q.re != 0) out << rational_str(q.re);
    out << (q.im < 0 ? "-" : (q.re != 0 ? "+" : ""))
        << rational_str(boost::multiprecision::abs(q.im)) << "i";
    return out.str();
  }
  std::complex<double> z = s.to_complex();
  if (z.imag() == 0.0) {
    out << z.real();
    return out.str();
  }
  out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

}  // namespace isocover
