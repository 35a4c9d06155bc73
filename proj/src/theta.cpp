#include "isocover/theta.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isocover {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Theta Theta::from_rational(const Rational& q) {
  if (q < 0 || q > 1) throw std::domain_error("theta must lie in [0,1]");
  Theta t;
  t.exact_ = true;
  t.q_ = q;
  return t;
}

Theta Theta::from_double(double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error("theta must lie in [0,1]");
  Theta t;
  t.exact_ = false;
  t.f_ = v;
  return t;
}

bool Theta::is_half() const {
  return exact_ ? q_ == Rational(1, 2) : f_ == 0.5;
}

const Rational& Theta::rational_value() const {
  if (!exact_) throw std::domain_error("theta is on the floating backend");
  return q_;
}

double Theta::value() const {
  return exact_ ? q_.convert_to<double>() : f_;
}

Scalar Theta::trace() const {
  if (exact_) {
    // the rational angles with rational cosine
    if (q_ == 0) return Scalar(2);
    if (q_ == Rational(1, 3)) return Scalar(1);
    if (q_ == Rational(1, 2)) return Scalar(0);
    if (q_ == Rational(2, 3)) return Scalar(-1);
    if (q_ == 1) return Scalar(-2);
  }
  return Scalar(2.0 * std::cos(kPi * value()));
}

std::string Theta::str() const {
  if (exact_) return q_.str();
  std::ostringstream out;
  out << f_;
  return out.str();
}

}  // namespace isocover
