#pragma once

// Exact-rational classification of the ramified covers of hyperbolic
// orbifolds that can carry a reduction of an isomonodromic deformation:
// signatures and areas, the constraint system on cover candidates
// (Riemann-Hurwitz bookkeeping, area inequality, dimension budget,
// dimension sandwich, degree bound), the exhaustive enumeration with
// and without the order-normalization / genus-zero pruning, and the
// symmetric-group obstruction that eliminates the one degree-4
// candidate passing every numeric test. No floating point anywhere.

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "isocover/scalar.hpp"  // Rational

namespace isocover {

// A puncture: cone angle 0, reciprocal 0 in all rational formulas.
inline constexpr int kOrderInf = std::numeric_limits<int>::max();

// 1/nu with 1/infinity = 0, exact.
Rational order_reciprocal(int nu);

struct OrbifoldSignature {
  int genus = 0;
  // cone orders, each >= 2 or kOrderInf, ascending (kOrderInf last)
  std::vector<int> orders;

  int point_count() const { return static_cast<int>(orders.size()); }
  bool operator==(const OrbifoldSignature&) const = default;
};

// e.g. "(0; 2,2,inf)"
std::string to_string(const OrbifoldSignature& sig);

// Orbifold area divided by pi: 2(2g-2) + sum(2 - 2/nu), exact.
Rational area_over_pi(const OrbifoldSignature& sig);

// area > 0, decided in exact rationals.
bool is_hyperbolic(const OrbifoldSignature& sig);

// Deformation-space dimension 3g - 3 + n.
int teich_dim(const OrbifoldSignature& sig);

struct CoverCandidate {
  int degree = 2;  // d
  OrbifoldSignature base;
  // profile[i] = descending partition of degree: local multiplicities
  // of the cover over the i-th base cone point
  std::vector<std::vector<int>> profile;
  // simple branch points over regular base points ("free" critical
  // values, the only ones contributing deformation directions)
  int branch_count = 0;
  // derived: genus upstairs, from Riemann-Hurwitz
  int cover_genus = 0;
  // derived: cone points upstairs = parts k with nu = inf or nu !| k
  int cover_orbifold_count = 0;

  bool operator==(const CoverCandidate&) const = default;
};

// Fills in the derived fields; throws std::invalid_argument when the
// data is malformed (bad orders, partition not summing to the degree,
// negative counts, or no integer cover genus >= 0).
CoverCandidate make_cover_candidate(int degree, OrbifoldSignature base,
                                    std::vector<std::vector<int>> profile,
                                    int branch_count);

struct ConstraintReport {
  bool degree_at_least_two = false;
  bool base_hyperbolic = false;
  // d(2g-2+sum(1-1/nu)) <= 2g~-2 + sum over upstairs cone points of
  // (1 - k/nu) - b, exact rationals
  bool area_inequality = false;
  bool area_equality = false;  // holds when branching is as simple as possible
  // 3g-3+n+b >= 3g~-3+n~
  bool dimension_budget = false;
  // 0 < 3g-3+n <= 3g~-3+n~
  bool dimension_sandwich = false;

  bool admissible() const {
    return degree_at_least_two && base_hyperbolic && area_inequality &&
           dimension_budget && dimension_sandwich;
  }
  bool operator==(const ConstraintReport&) const = default;
};

// Evaluates every constraint; throws std::invalid_argument on a
// malformed candidate (same conditions as make_cover_candidate).
ConstraintReport check_candidate(const CoverCandidate& c);

// Replace a finite order nu by inf wherever no local multiplicity over
// the point is divisible by nu; this changes neither the point counts
// nor any constraint value, and maps every candidate onto the
// representative the pruned search generates. Re-sorts the points.
CoverCandidate normalize_orders(const CoverCandidate& c);

// Fixed lookup from a candidate's numeric data (degree, base, cover
// genus, upstairs cone count, branch count) to the name of the known
// construction; "Eliminated-Sigma4" for the impossible degree-4 datum;
// "UNEXPECTED" for anything else (a loud flag, not a fallback).
std::string label_for(const CoverCandidate& c);

struct ClassificationEntry {
  CoverCandidate candidate;
  std::string label;
  ConstraintReport report;

  bool operator==(const ClassificationEntry&) const = default;
};

struct EnumerateOptions {
  bool pruning = true;       // genus 0, orders in {2..d, inf}, normalized
  int max_points = 12;       // brute-force safety bounds
  int max_order = 12;
  int max_base_genus = 3;
  int max_cover_genus = 4;
};

struct EnumerationResult {
  // sorted by (degree, n, cover genus, upstairs cone count, ...)
  std::vector<ClassificationEntry> entries;
  // area-zero signatures of known constructions met on the way
  // (the four-point order-2 sphere), reported but not classified
  std::vector<OrbifoldSignature> known_non_hyperbolic;
};

// Exhaustive search over cover data for degrees 2..d_max. With pruning
// the search space is the normalized one; without, everything inside
// the safety bounds is visited and normalized afterwards. Both must
// produce the same entry set; the only search cut used in both modes
// is the exact infeasibility of the dimension budget (each extra base
// point costs at least 1/2 of it), which discards only candidates that
// could never be admissible.
EnumerationResult enumerate_covers(int d_max, EnumerateOptions opts = {});

// Permutation of {0,1,2,3} by images.
struct Perm4 {
  std::array<int, 4> image{0, 1, 2, 3};

  static Perm4 identity() { return {}; }
  bool operator==(const Perm4&) const = default;
};

Perm4 compose(const Perm4& p, const Perm4& q);  // p after q
int permutation_order(const Perm4& p);
std::string cycle_string(const Perm4& p);  // e.g. "(12)(34)", "id"

// The three double-transpositions (12)(34), (13)(24), (14)(23).
std::array<Perm4, 3> double_transpositions();

struct Sigma4Row {
  Perm4 a, b, c;
  Perm4 product;  // a b c
  int product_order;
};

struct Sigma4Report {
  std::vector<Sigma4Row> rows;  // all 27 ordered triples
  bool obstruction_confirmed;   // no product of order 3 anywhere
  std::string verdict;
};

// The monodromy of the eliminated degree-4 cover would need three
// double-transpositions composing to an order-3 element; the table
// shows every product has order 1 or 2 (they generate the Klein
// four-group), so the cover does not exist.
Sigma4Report sigma4_obstruction();

}  // namespace isocover
