#include "doctest.h"

#include <stdexcept>

#include "isocover/cover_maps.hpp"
#include "isocover/sl2.hpp"

using namespace isocover;

namespace {

Mat2 mi(int a, int b, int c, int d) {
  return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
}

Scalar half() { return Scalar(Rational(1, 2)); }

// exact pair with a rational normal form: AB = diag(2, 1/2)
const Mat2 kDiagA = mi(0, -1, 1, 0);
const Mat2 kDiagB = {Scalar(0), half(), Scalar(-2), Scalar(0)};

// exact valid twice-punctured-torus tuple over that pair, theta = 1/2:
// trace(D1^-1 [A,B]) = 0 forces the D1 below (up to the free entry)
TorusTwoRep exact_torus() {
  Mat2 d1 = mi(0, 1, -1, 0);
  Mat2 d2 = inverse(kDiagA) * inverse(kDiagB) * inverse(d1) * kDiagA * kDiagB;
  return {kDiagA, kDiagB, d1, d2, Theta::half()};
}

// exact five-punctured tuple with Mt = I (exponent 0): M0, M1 traceless,
// Mlambda solves trace(M0 M1 Mlambda) = 0, Minf closes the product
FivePuncturedRep exact_five_theta0() {
  Mat2 m0 = mi(0, -1, 1, 0);
  Mat2 m1 = {Scalar(0), Scalar(2), -half(), Scalar(0)};
  Mat2 mt = Mat2::identity();
  Mat2 ml = {Scalar(0), Scalar(3), Scalar(Rational(-1, 3)), Scalar(0)};
  Mat2 minf = inverse(m0 * m1 * mt * ml);
  return {m0, m1, mt, ml, minf, Theta::from_rational(0)};
}

FivePuncturedRep flip_odd(const FivePuncturedRep& r) {
  return {-r.m0, -r.m1, r.mt, -r.mlambda, -r.minf, r.theta};
}

bool same_tuple(const FivePuncturedRep& x, const FivePuncturedRep& y,
                double eps) {
  return approx_eq(x.m0, y.m0, eps) && approx_eq(x.m1, y.m1, eps) &&
         approx_eq(x.mt, y.mt, eps) && approx_eq(x.mlambda, y.mlambda, eps) &&
         approx_eq(x.minf, y.minf, eps);
}

bool same_torus(const TorusTwoRep& x, const TorusTwoRep& y, double eps) {
  return approx_eq(x.a, y.a, eps) && approx_eq(x.b, y.b, eps) &&
         approx_eq(x.d1, y.d1, eps) && approx_eq(x.d2, y.d2, eps);
}

}  // namespace

TEST_CASE("pullback realizes the stated words and keeps validity") {
  auto five = sample_five_rep(Theta::half(), 2);
  auto torus = phi1_pullback(five);
  CHECK(validate(torus).empty());
  CHECK(approx_eq(torus.a, five.m1 * five.mt * five.mlambda, 1e-12));
  CHECK(approx_eq(torus.b, five.mlambda * five.minf, 1e-12));
  CHECK(approx_eq(torus.d1, five.mt, 1e-12));
  CHECK(approx_eq(torus.d2, five.minf * five.mt * inverse(five.minf), 1e-12));
  CHECK(approx_eq(trace(torus.d2), trace(five.mt), 1e-9));
}

TEST_CASE("pullback rejects an invalid tuple") {
  Mat2 id = Mat2::identity();
  FivePuncturedRep bad{id, id, id, id, id, Theta::half()};
  CHECK_THROWS_AS(phi1_pullback(bad), std::domain_error);
}

TEST_CASE("degenerate exponent 0: decorations collapse to the identity") {
  auto five = exact_five_theta0();
  REQUIRE(validate(five).empty());
  auto torus = phi1_pullback(five);
  CHECK(validate(torus).empty());
  CHECK(approx_eq(torus.d1, Mat2::identity(), 0.0));
  CHECK(approx_eq(torus.d2, Mat2::identity(), 0.0));
  CHECK(is_exact(torus.a));
  // the descent hypothesis D1, D2 != +-I now fails
  CHECK_THROWS_AS(phi1_descend(torus), std::domain_error);
}

TEST_CASE("exact descent oracle: the diagonal-product pair, start to finish") {
  auto rep = exact_torus();
  REQUIRE(validate(rep).empty());
  auto down = phi1_descend(rep);
  CHECK(!down.promoted);
  CHECK(down.residual_bamd1 == 0.0);
  CHECK(is_exact(down.rep.m0));
  CHECK(is_exact(down.rep.minf));

  Scalar i_pos(Rational(0), Rational(1));
  Scalar i_neg(Rational(0), Rational(-1));
  Mat2 want_minf = {i_pos, Scalar(0), Scalar(0), i_neg};  // the involution
  Mat2 want_m0 = {Scalar(0), i_neg, i_neg, Scalar(0)};    // -A * involution
  CHECK(approx_eq(down.rep.minf, want_minf, 0.0));
  CHECK(approx_eq(down.rep.m0, want_m0, 0.0));
  CHECK(validate(down.rep).empty());

  // round trip is exact on the exact backend
  auto back = phi1_pullback(down.rep);
  CHECK(same_torus(back, rep, 0.0));
}

TEST_CASE("sampled descents validate, round-trip, and kill the diagnostic") {
  for (auto theta : {Theta::half(), Theta::from_rational(Rational(1, 3)),
                     Theta::from_double(0.137)}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      CAPTURE(seed);
      auto rep = sample_torus_rep(theta, seed);
      auto down = phi1_descend(rep);
      REQUIRE(validate(down.rep).empty());
      CHECK(down.residual_bamd1 < 1e-9);
      CHECK(same_torus(phi1_pullback(down.rep), rep, 1e-9));
    }
  }
}

TEST_CASE("descent rejects a reducible pair") {
  // commuting A, B; D2 = (AB)^-1 D1^-1 (AB) keeps the relation valid
  Mat2 a = mi(1, 1, 0, 1), b = mi(1, 2, 0, 1);
  Mat2 d1 = mi(0, 1, -1, 0);
  Mat2 ab = a * b;
  TorusTwoRep rep{a, b, d1, inverse(ab) * inverse(d1) * ab, Theta::half()};
  REQUIRE(validate(rep).empty());
  CHECK_THROWS_AS(phi1_descend(rep), std::domain_error);
}

TEST_CASE("fiber: two valid preimages apart by the odd sign flips") {
  auto rep = sample_torus_rep(Theta::half(), 6);
  auto fiber = phi1_fiber(rep);
  CHECK(validate(fiber.plus).empty());
  CHECK(validate(fiber.minus).empty());
  CHECK(max_entry_dist(fiber.plus.m0, fiber.minus.m0) > 1e-3);

  // exactly the matrices containing one factor of M change sign
  CHECK(approx_eq(fiber.minus.m0, -fiber.plus.m0, 1e-12));
  CHECK(approx_eq(fiber.minus.m1, -fiber.plus.m1, 1e-12));
  CHECK(approx_eq(fiber.minus.mt, fiber.plus.mt, 1e-12));
  CHECK(approx_eq(fiber.minus.mlambda, -fiber.plus.mlambda, 1e-12));
  CHECK(approx_eq(fiber.minus.minf, -fiber.plus.minf, 1e-12));

  CHECK(same_torus(phi1_pullback(fiber.plus), rep, 1e-9));
  CHECK(same_torus(phi1_pullback(fiber.minus), rep, 1e-9));
  CHECK(fiber.projectively_conjugate);

  // even words in the tuple cannot see the flips
  Scalar even1 = trace(fiber.plus.m0 * fiber.plus.m1);
  Scalar even2 = trace(fiber.minus.m0 * fiber.minus.m1);
  CHECK(approx_eq(even1, even2, 1e-12));
}

TEST_CASE("descent after pullback lands on the tuple or its odd flip") {
  auto five = sample_five_rep(Theta::half(), 14);
  auto down = phi1_descend(phi1_pullback(five)).rep;
  CHECK((same_tuple(down, five, 1e-9) ||
         same_tuple(down, flip_odd(five), 1e-9)));
  CHECK(is_conjugate(down, five, /*projective=*/true));
}

TEST_CASE("bielliptic pullback: conjugated pair closes the genus-2 relation") {
  auto c = reparam_d_to_c(exact_torus());
  REQUIRE(validate(c).empty());
  auto g2 = pi_pullback(c);
  CHECK(validate(g2).empty());
  CHECK(is_exact(g2.a2));
  CHECK(approx_eq(trace(g2.a2), trace(g2.a1), 0.0));
  CHECK(approx_eq(trace(g2.b2), trace(g2.b1), 0.0));
  CHECK(approx_eq(trace(g2.a1 * g2.b1), trace(g2.a2 * g2.b2), 0.0));

  auto sampled = reparam_d_to_c(sample_torus_rep(Theta::half(), 17));
  auto g2s = pi_pullback(sampled);
  CHECK(validate(g2s).empty());
}

TEST_CASE("bielliptic descent inverts the pullback exactly on the oracle") {
  auto c = reparam_d_to_c(exact_torus());
  auto g2 = pi_pullback(c);
  auto back = pi_descend(g2);
  CHECK(validate(back).empty());
  CHECK(is_exact(back.c1));
  // the conjugating matrix is +-C1; the sign convention lands on +
  CHECK(approx_eq(back.c1, c.c1, 0.0));
  CHECK(approx_eq(back.c2, c.c2, 0.0));
  CHECK(approx_eq(back.a, c.a, 0.0));
}

TEST_CASE("bielliptic descent on sampled data recovers C1 up to sign") {
  for (std::uint64_t seed : {23, 24, 25}) {
    CAPTURE(seed);
    auto c = reparam_d_to_c(sample_torus_rep(Theta::half(), seed));
    auto back = pi_descend(pi_pullback(c));
    REQUIRE(validate(back).empty());
    bool plus = approx_eq(back.c1, c.c1, 1e-9) && approx_eq(back.c2, c.c2, 1e-9);
    bool minus =
        approx_eq(back.c1, -c.c1, 1e-9) && approx_eq(back.c2, -c.c2, 1e-9);
    CHECK((plus || minus));
  }
}

TEST_CASE("swapped-pair tuple descends through an antidiagonal involution") {
  Mat2 a = mi(1, 1, 0, 1), b = mi(1, 0, 1, 1);
  GenusTwoRep g2{a, b, b, a};  // [B,A] = [A,B]^-1 always
  REQUIRE(validate(g2).empty());
  auto c = pi_descend(g2);
  CHECK(validate(c).empty());
  Mat2 want_c1 = {Scalar(0), Scalar(0.0, 1.0), Scalar(0.0, 1.0), Scalar(0)};
  CHECK(approx_eq(c.c1, want_c1, 1e-9));
  Mat2 want_c2 = {Scalar(0.0, -1.0), Scalar(0), Scalar(0.0, -3.0),
                  Scalar(0.0, 1.0)};
  CHECK(approx_eq(c.c2, want_c2, 1e-9));
}

TEST_CASE("bielliptic descent refuses mismatched traces") {
  Mat2 a = mi(2, 1, 1, 1), b = mi(1, 0, 1, 1);  // traces 3 and 2
  GenusTwoRep g2{a, b, b, a};
  REQUIRE(validate(g2).empty());
  CHECK_THROWS_WITH_AS(pi_descend(g2) /**/, doctest::Contains("conjugat"),
                       std::domain_error);
}

TEST_CASE("anticommuting locus: conjugating matrix need not square to -I") {
  // [A,B] = -I here, the only locus where the square condition can fail
  Mat2 a = mi(0, -1, 1, 0);
  Mat2 b = {Scalar(0), Scalar(Rational(0), Rational(1)),
            Scalar(Rational(0), Rational(1)), Scalar(0)};
  REQUIRE(approx_eq(commutator(a, b), -Mat2::identity(), 0.0));
  Mat2 c = mi(1, 1, 1, 2);
  GenusTwoRep g2{a, b, c * a * inverse(c), c * b * inverse(c)};
  REQUIRE(validate(g2).empty());
  CHECK_THROWS_WITH_AS(pi_descend(g2) /**/, doctest::Contains("square"),
                       std::domain_error);
}

TEST_CASE("sphere-to-genus-2 composition and the chain back") {
  CHECK_THROWS_AS(
      five_to_genus2(sample_five_rep(Theta::from_rational(Rational(1, 3)), 4)),
      std::domain_error);

  auto five = sample_five_rep(Theta::half(), 41);
  auto g2 = five_to_genus2(five);
  REQUIRE(validate(g2).empty());

  Scalar tr_comm = trace(commutator(g2.a1, g2.b1));
  REQUIRE((tr_comm - Scalar(2)).abs() > 1e-3);
  auto torus_back = reparam_c_to_d(pi_descend(g2));
  REQUIRE(validate(torus_back).empty());
  auto five_back = phi1_descend(torus_back).rep;
  REQUIRE(validate(five_back).empty());

  auto reference = phi1_descend(phi1_pullback(five)).rep;
  CHECK(is_conjugate(five_back, reference, /*projective=*/true));
  CHECK(is_conjugate(five_back, five, /*projective=*/true));
}
