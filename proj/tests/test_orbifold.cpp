// Classification of branched covers: exact areas, the constraint
// system on cover data, the enumeration in both search modes, and the
// permutation obstruction killing the last degree-4 datum.
//
// Every number asserted here was derived by hand from the constraint
// definitions before the implementation existed: areas from the cone
// angles, cover genus from degree and total ramification, upstairs
// cone counts from divisibility of the local multiplicities, and the
// admissible lists by walking the finitely many point multisets that
// fit inside the dimension budget.

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "isocover/orbifold.hpp"

namespace {

using namespace isocover;

constexpr int I = kOrderInf;

CoverCandidate quadratic() {
  return make_cover_candidate(2, {0, {2, 2, I, I}}, {{2}, {2}, {1, 1}, {1, 1}},
                              0);
}

CoverCandidate quartic() {
  return make_cover_candidate(
      4, {0, {2, 2, 2, I}}, {{2, 2}, {2, 2}, {2, 2}, {1, 1, 1, 1}}, 0);
}

CoverCandidate lame() {
  return make_cover_candidate(2, {0, {2, 2, 2, I}}, {{2}, {2}, {2}, {2}}, 0);
}

CoverCandidate genus2() {
  return make_cover_candidate(2, {0, {2, 2, 2, 2, 2}},
                              {{2}, {2}, {2}, {2}, {2}}, 1);
}

CoverCandidate twice_punctured_torus() {
  return make_cover_candidate(2, {0, {2, 2, 2, I}}, {{2}, {2}, {2}, {1, 1}},
                              1);
}

CoverCandidate uncomplete_genus2() {
  return make_cover_candidate(2, {0, {2, 2, 2, 2, 2, 2}},
                              {{2}, {2}, {2}, {2}, {2}, {2}}, 0);
}

CoverCandidate bielliptic() {
  return make_cover_candidate(2, {0, {2, 2, 2, 2, I}},
                              {{2}, {2}, {2}, {2}, {1, 1}}, 0);
}

CoverCandidate eliminated_quartic() {
  return make_cover_candidate(4, {0, {2, 2, 2, 3}},
                              {{2, 2}, {2, 2}, {2, 2}, {3, 1}}, 0);
}

void check_entry(const ClassificationEntry& entry, const char* label,
                 int degree, const OrbifoldSignature& base, int cover_genus,
                 int cover_cones, int branch_count) {
  CAPTURE(entry.label);
  CHECK(entry.label == label);
  CHECK(entry.candidate.degree == degree);
  CHECK(entry.candidate.base == base);
  CHECK(entry.candidate.cover_genus == cover_genus);
  CHECK(entry.candidate.cover_orbifold_count == cover_cones);
  CHECK(entry.candidate.branch_count == branch_count);
  CHECK(entry.report.admissible());
}

TEST_CASE("area, hyperbolicity, and deformation dimension") {
  CHECK(area_over_pi({0, {2, 2, 2, 2}}) == Rational(0));
  CHECK_FALSE(is_hyperbolic({0, {2, 2, 2, 2}}));

  CHECK(area_over_pi({0, {2, 2, 2, 2, 2}}) == Rational(1));
  CHECK(is_hyperbolic({0, {2, 2, 2, 2, 2}}));

  CHECK(area_over_pi({2, {}}) == Rational(4));
  CHECK(is_hyperbolic({2, {}}));

  CHECK(area_over_pi({0, {2, 2, I, I}}) == Rational(2));
  CHECK(area_over_pi({0, {2, 2, 2, 3}}) == Rational(1, 3));
  CHECK(area_over_pi({0, {2, 2, 2, I}}) == Rational(1));
  CHECK(area_over_pi({1, {2}}) == Rational(1));
  CHECK(area_over_pi({0, {3, 3, 3}}) == Rational(0));
  CHECK_FALSE(is_hyperbolic({0, {3, 3, 3}}));
  CHECK_FALSE(is_hyperbolic({1, {}}));

  CHECK(teich_dim({0, {2, 2, I, I}}) == 1);
  CHECK(teich_dim({0, {2, 2, 2, 2, 2}}) == 2);
  CHECK(teich_dim({1, {2, 2}}) == 2);
  CHECK(teich_dim({2, {}}) == 3);

  CHECK(order_reciprocal(kOrderInf) == Rational(0));
  CHECK(order_reciprocal(2) == Rational(1, 2));
  CHECK(order_reciprocal(7) == Rational(1, 7));
  CHECK_THROWS_AS(order_reciprocal(1), std::invalid_argument);

  CHECK(to_string(OrbifoldSignature{0, {2, 2, I}}) == "(0; 2,2,inf)");
  CHECK(to_string(OrbifoldSignature{2, {}}) == "(2;)");
}

TEST_CASE("candidate construction derives genus and cone count") {
  CoverCandidate c = genus2();
  CHECK(c.cover_genus == 2);
  CHECK(c.cover_orbifold_count == 0);

  c = quadratic();
  CHECK(c.cover_genus == 0);
  CHECK(c.cover_orbifold_count == 4);

  c = quartic();
  CHECK(c.cover_genus == 0);
  CHECK(c.cover_orbifold_count == 4);

  c = eliminated_quartic();
  CHECK(c.cover_genus == 1);
  CHECK(c.cover_orbifold_count == 1);

  // Input order of the cone points does not matter: points are sorted
  // with their partitions attached.
  CoverCandidate shuffled = make_cover_candidate(
      2, {0, {I, 2, 2, 2}}, {{1, 1}, {2}, {2}, {2}}, 1);
  CHECK(shuffled == twice_punctured_torus());

  // Degree 1 (the identity cover) is constructible; the degree check
  // lives in the constraint report.
  CoverCandidate identity_cover = make_cover_candidate(
      1, {0, {2, 2, I, I}}, {{1}, {1}, {1}, {1}}, 0);
  CHECK(identity_cover.cover_genus == 0);
  CHECK(identity_cover.cover_orbifold_count == 4);
}

TEST_CASE("candidate construction rejects malformed branching data") {
  // Odd total ramification: no integer cover genus.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {2, 2, 2, 2, 2}},
                                       {{2}, {2}, {2}, {2}, {2}}, 0),
                  std::invalid_argument);
  // Unbranched degree-2 cover of the sphere: cover genus -1.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {}}, {}, 0),
                  std::invalid_argument);
  // Partition does not sum to the degree.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {2, 2, I, I}},
                                       {{2}, {2}, {1, 1}, {1}}, 0),
                  std::invalid_argument);
  // Nonpositive local multiplicity.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {2, 2, I, I}},
                                       {{2}, {2}, {1, 1}, {2, 0}}, 0),
                  std::invalid_argument);
  // Cone order 1.
  CHECK_THROWS_AS(
      make_cover_candidate(2, {0, {1, 2, I, I}}, {{2}, {2}, {1, 1}, {1, 1}}, 0),
      std::invalid_argument);
  // One partition per point.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {2, 2, I}},
                                       {{2}, {2}, {1, 1}, {1, 1}}, 0),
                  std::invalid_argument);
  // Negative free branch count.
  CHECK_THROWS_AS(make_cover_candidate(2, {0, {2, 2, I, I}},
                                       {{2}, {2}, {1, 1}, {1, 1}}, -1),
                  std::invalid_argument);
  // Negative base genus.
  CHECK_THROWS_AS(
      make_cover_candidate(2, {-1, {2, 2, I, I}}, {{2}, {2}, {1, 1}, {1, 1}}, 0),
      std::invalid_argument);
}

TEST_CASE("constraint report isolates the failing inequality") {
  // The degree-2 pullback of the four-point base with two punctures
  // satisfies everything, with area equality.
  ConstraintReport report = check_candidate(quadratic());
  CHECK(report.degree_at_least_two);
  CHECK(report.base_hyperbolic);
  CHECK(report.area_inequality);
  CHECK(report.area_equality);
  CHECK(report.dimension_budget);
  CHECK(report.dimension_sandwich);
  CHECK(report.admissible());

  // The identity cover of the same base fails the degree bound alone.
  report = check_candidate(
      make_cover_candidate(1, {0, {2, 2, I, I}}, {{1}, {1}, {1}, {1}}, 0));
  CHECK_FALSE(report.degree_at_least_two);
  CHECK(report.base_hyperbolic);
  CHECK(report.area_inequality);
  CHECK(report.area_equality);
  CHECK(report.dimension_budget);
  CHECK(report.dimension_sandwich);
  CHECK_FALSE(report.admissible());

  // Degree 3 over four cone points: cover genus 0, six cone points
  // upstairs, one free branch point. The deformation space upstairs is
  // 3-dimensional but the base only offers 1 + 1 directions: the
  // dimension budget is the one constraint that fails.
  report = check_candidate(make_cover_candidate(
      3, {0, {2, 2, 2, 3}}, {{2, 1}, {2, 1}, {2, 1}, {1, 1, 1}}, 1));
  CHECK(report.degree_at_least_two);
  CHECK(report.base_hyperbolic);
  CHECK(report.area_inequality);
  CHECK(report.area_equality);
  CHECK_FALSE(report.dimension_budget);
  CHECK(report.dimension_sandwich);
  CHECK_FALSE(report.admissible());

  // Area-zero base: hyperbolicity and the sandwich both fail.
  report = check_candidate(
      make_cover_candidate(2, {0, {2, 2, 2, 2}}, {{2}, {2}, {2}, {2}}, 0));
  CHECK_FALSE(report.base_hyperbolic);
  CHECK_FALSE(report.dimension_sandwich);
  CHECK(report.area_inequality);
  CHECK_FALSE(report.admissible());

  // A candidate whose stored derived fields were tampered with is
  // malformed, not merely inadmissible.
  CoverCandidate tampered = quadratic();
  tampered.cover_genus = 1;
  CHECK_THROWS_AS(check_candidate(tampered), std::invalid_argument);
}

TEST_CASE("order normalization replaces undivided finite orders by punctures") {
  // Two order-2 points covered by two simple points each: nothing
  // upstairs remembers the order 2, so the points normalize to
  // punctures and the candidate becomes the quadratic one.
  CoverCandidate unnormalized = make_cover_candidate(
      2, {0, {2, 2, 2, 2}}, {{2}, {2}, {1, 1}, {1, 1}}, 0);
  CHECK(normalize_orders(unnormalized) == quadratic());

  // Orders larger than the degree can never divide a multiplicity.
  CoverCandidate big_order = make_cover_candidate(
      2, {0, {2, 2, 2, 5}}, {{2}, {2}, {2}, {1, 1}}, 1);
  CHECK(normalize_orders(big_order) == twice_punctured_torus());

  // Normalized candidates are fixed points.
  CHECK(normalize_orders(quadratic()) == quadratic());
  CHECK(normalize_orders(eliminated_quartic()) == eliminated_quartic());

  // The invariants the constraints consume are untouched.
  CoverCandidate norm = normalize_orders(unnormalized);
  CHECK(norm.cover_genus == unnormalized.cover_genus);
  CHECK(norm.cover_orbifold_count == unnormalized.cover_orbifold_count);
  CHECK(norm.branch_count == unnormalized.branch_count);
}

TEST_CASE("labels name the known constructions") {
  CHECK(label_for(quadratic()) == "Quadratic");
  CHECK(label_for(quartic()) == "Quartic");
  CHECK(label_for(lame()) == "Lame");
  CHECK(label_for(genus2()) == "Genus2");
  CHECK(label_for(twice_punctured_torus()) ==
        "UncompleteTwicePuncturedTorus");
  CHECK(label_for(uncomplete_genus2()) == "UncompleteGenus2");
  CHECK(label_for(bielliptic()) == "Bielliptic1");
  CHECK(label_for(eliminated_quartic()) == "Eliminated-Sigma4");

  // Anything outside the fixed table is flagged loudly.
  CoverCandidate stranger = make_cover_candidate(
      3, {0, {2, 2, 2, 3}}, {{2, 1}, {2, 1}, {2, 1}, {1, 1, 1}}, 1);
  CHECK(label_for(stranger) == "UNEXPECTED");
}

TEST_CASE("degree-2 enumeration finds exactly the six known covers") {
  EnumerationResult result = enumerate_covers(2);
  REQUIRE(result.entries.size() == 6);

  check_entry(result.entries[0], "Quadratic", 2, {0, {2, 2, I, I}}, 0, 4, 0);
  check_entry(result.entries[1], "Lame", 2, {0, {2, 2, 2, I}}, 1, 1, 0);
  check_entry(result.entries[2], "UncompleteTwicePuncturedTorus", 2,
              {0, {2, 2, 2, I}}, 1, 2, 1);
  check_entry(result.entries[3], "Bielliptic1", 2, {0, {2, 2, 2, 2, I}}, 1, 2,
              0);
  check_entry(result.entries[4], "Genus2", 2, {0, {2, 2, 2, 2, 2}}, 2, 0, 1);
  check_entry(result.entries[5], "UncompleteGenus2", 2,
              {0, {2, 2, 2, 2, 2, 2}}, 2, 0, 0);

  // Exact branching profiles.
  CHECK(result.entries[0].candidate == quadratic());
  CHECK(result.entries[1].candidate == lame());
  CHECK(result.entries[2].candidate == twice_punctured_torus());
  CHECK(result.entries[3].candidate == bielliptic());
  CHECK(result.entries[4].candidate == genus2());
  CHECK(result.entries[5].candidate == uncomplete_genus2());

  // Branching is as simple as possible in every admissible datum: the
  // area relation is an equality throughout.
  for (const ClassificationEntry& entry : result.entries)
    CHECK(entry.report.area_equality);

  // The area-zero four-point sphere shows up once, reported separately.
  REQUIRE(result.known_non_hyperbolic.size() == 1);
  CHECK(result.known_non_hyperbolic[0] == OrbifoldSignature{0, {2, 2, 2, 2}});
}

TEST_CASE("no degree-3 cover satisfies the constraints") {
  EnumerationResult two = enumerate_covers(2);
  EnumerationResult three = enumerate_covers(3);
  REQUIRE(three.entries.size() == two.entries.size());
  for (size_t i = 0; i < two.entries.size(); ++i)
    CHECK(three.entries[i] == two.entries[i]);
}

TEST_CASE("degree-4 enumeration adds the quartic datum and the eliminated one") {
  EnumerationResult result = enumerate_covers(4);
  REQUIRE(result.entries.size() == 8);

  // Degree-2 block unchanged, then the two degree-4 rows.
  check_entry(result.entries[6], "Quartic", 4, {0, {2, 2, 2, I}}, 0, 4, 0);
  check_entry(result.entries[7], "Eliminated-Sigma4", 4, {0, {2, 2, 2, 3}}, 1,
              1, 0);
  CHECK(result.entries[6].candidate == quartic());
  CHECK(result.entries[7].candidate == eliminated_quartic());

  int eliminated = 0;
  for (const ClassificationEntry& entry : result.entries) {
    CHECK(entry.label != "UNEXPECTED");
    CHECK(entry.report.admissible());
    CHECK(entry.report.area_equality);
    if (entry.label == "Eliminated-Sigma4") ++eliminated;
  }
  CHECK(eliminated == 1);
}

TEST_CASE("brute force without pruning reproduces the pruned list") {
  EnumerateOptions brute;
  brute.pruning = false;

  EnumerationResult pruned2 = enumerate_covers(2);
  EnumerationResult full2 = enumerate_covers(2, brute);
  REQUIRE(full2.entries.size() == pruned2.entries.size());
  for (size_t i = 0; i < pruned2.entries.size(); ++i)
    CHECK(full2.entries[i] == pruned2.entries[i]);
  CHECK(full2.known_non_hyperbolic == pruned2.known_non_hyperbolic);

  EnumerationResult pruned4 = enumerate_covers(4);
  EnumerationResult full4 = enumerate_covers(4, brute);
  REQUIRE(full4.entries.size() == pruned4.entries.size());
  for (size_t i = 0; i < pruned4.entries.size(); ++i)
    CHECK(full4.entries[i] == pruned4.entries[i]);
  CHECK(full4.known_non_hyperbolic == pruned4.known_non_hyperbolic);
}

TEST_CASE("three double-transpositions never compose to order three") {
  const std::array<Perm4, 3> dts = double_transpositions();
  CHECK(cycle_string(dts[0]) == "(12)(34)");
  CHECK(cycle_string(dts[1]) == "(13)(24)");
  CHECK(cycle_string(dts[2]) == "(14)(23)");
  CHECK(cycle_string(Perm4::identity()) == "id");

  for (const Perm4& dt : dts) CHECK(permutation_order(dt) == 2);

  // The three of them close up into the Klein four-group.
  CHECK(compose(dts[0], dts[1]) == dts[2]);
  CHECK(compose(dts[1], dts[2]) == dts[0]);
  CHECK(compose(dts[0], dts[0]) == Perm4::identity());

  Sigma4Report report = sigma4_obstruction();
  REQUIRE(report.rows.size() == 27);
  for (const Sigma4Row& row : report.rows) {
    CHECK((row.product_order == 1 || row.product_order == 2));
    CHECK(permutation_order(row.product) == row.product_order);
  }
  CHECK(report.obstruction_confirmed);
  CHECK(report.verdict.find("nonexistent") != std::string::npos);

  // A same-element triple composes to the element itself (order 2), a
  // pairwise-distinct triple to the identity.
  CHECK(compose(compose(dts[0], dts[0]), dts[0]) == dts[0]);
  CHECK(compose(compose(dts[0], dts[1]), dts[2]) == Perm4::identity());
}

}  // namespace
