#pragma once

// The local exponent theta in [0,1]; the constrained generators carry
// trace 2 cos(pi theta). Rational theta whose cosine is rational
// (0, 1/3, 1/2, 2/3, 1 — Niven) keeps the trace on the exact backend.

#include <optional>
#include <string>

#include "isocover/scalar.hpp"

namespace isocover {

class Theta {
 public:
  Theta() : exact_(true), q_(1, 2) {}
  static Theta half() { return Theta(); }
  static Theta from_rational(const Rational& q);  // throws if outside [0,1]
  static Theta from_double(double v);             // throws if outside [0,1]

  bool is_exact() const { return exact_; }
  bool is_half() const;
  const Rational& rational_value() const;  // throws if floating
  double value() const;

  // 2 cos(pi theta); exact Scalar for the five Niven values, float otherwise.
  Scalar trace() const;

  std::string str() const;

 private:
  bool exact_;
  Rational q_;
  double f_ = 0.5;
};

}  // namespace isocover
