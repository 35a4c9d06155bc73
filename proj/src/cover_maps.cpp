#include "isocover/cover_maps.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "isocover/sl2.hpp"

namespace isocover {

namespace {

void require_valid(const std::vector<std::string>& problems,
                   const char* what) {
  if (!problems.empty()) {
    throw std::domain_error(std::string("invalid ") + what + ": " +
                            problems.front());
  }
}

bool near_plus_minus_identity(const Mat2& m) {
  const double eps = epsilon();
  return max_entry_dist(m, Mat2::identity()) <= eps ||
         max_entry_dist(m, -Mat2::identity()) <= eps;
}

// The descent words, with the involution (or its negative) plugged in.
FivePuncturedRep descend_with(const TorusTwoRep& rep, const Mat2& m) {
  Mat2 m0 = -(rep.a * m);
  Mat2 m1 = rep.a * rep.b * inverse(rep.d2) * m;
  Mat2 mlambda = -(rep.b * m);
  return {m0, m1, rep.d1, mlambda, m, rep.theta};
}

}  // namespace

TorusTwoRep phi1_pullback(const FivePuncturedRep& rep) {
  require_valid(validate(rep), "five-punctured input");
  Mat2 a = rep.m1 * rep.mt * rep.mlambda;
  Mat2 b = rep.mlambda * rep.minf;
  Mat2 d2 = rep.minf * rep.mt * inverse(rep.minf);
  return {a, b, rep.mt, d2, rep.theta};
}

Phi1Descent phi1_descend(const TorusTwoRep& rep) {
  require_valid(validate(rep), "twice-punctured torus input");
  if (is_reducible_pair(rep.a, rep.b)) {
    throw std::domain_error(
        "descent needs an irreducible generating pair (A, B)");
  }
  if (near_plus_minus_identity(rep.d1) || near_plus_minus_identity(rep.d2)) {
    throw std::domain_error(
        "descent needs decorations D1, D2 different from +-I");
  }
  InvolutionResult inv = inverting_involution(rep.a, rep.b);
  if (max_entry_dist(inv.m * rep.d1 * inverse(inv.m), rep.d2) >
      10 * epsilon()) {
    throw std::runtime_error(
        "inverting involution failed to exchange D1 and D2");
  }
  FivePuncturedRep down = descend_with(rep, inv.m);
  double residual = trace(rep.b * rep.a * inv.m * rep.d1).abs();
  return {down, residual, inv.promoted};
}

Phi1Fiber phi1_fiber(const TorusTwoRep& rep) {
  Phi1Descent first = phi1_descend(rep);
  FivePuncturedRep minus = descend_with(rep, -first.rep.minf);
  bool proj = is_conjugate(first.rep, minus, /*projective=*/true);
  return {first.rep, minus, proj};
}

GenusTwoRep pi_pullback(const TorusTwoRepC& rep) {
  require_valid(validate(rep), "commutator-form torus input");
  Mat2 ci = inverse(rep.c1);
  return {rep.a, rep.b, ci * rep.a * rep.c1, ci * rep.b * rep.c1};
}

TorusTwoRepC pi_descend(const GenusTwoRep& rep) {
  require_valid(validate(rep), "genus-2 input");
  auto m = conjugator(rep.a1, rep.b1, rep.a2, rep.b2);
  if (!m) {
    throw std::domain_error(
        "no conjugating matrix carries (A1, B1) to (A2, B2)");
  }
  if (max_entry_dist(*m * *m, -Mat2::identity()) > epsilon()) {
    throw std::domain_error("the conjugating matrix does not square to -I");
  }
  Mat2 c2 = inverse(*m) * commutator(rep.a1, rep.b1);
  if (trace(c2).abs() > 10 * epsilon()) {
    throw std::runtime_error("second branch matrix failed to be traceless");
  }
  return {rep.a1, rep.b1, *m, c2};
}

GenusTwoRep five_to_genus2(const FivePuncturedRep& rep) {
  return pi_pullback(reparam_d_to_c(phi1_pullback(rep)));
}

}  // namespace isocover
