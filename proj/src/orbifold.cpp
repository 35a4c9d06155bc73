#include "isocover/orbifold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace isocover {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Partitions of d, parts descending, in a stable deterministic order.
std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

int ramification(const std::vector<int>& partition) {
  int r = 0;
  for (int k : partition) r += k - 1;
  return r;
}

// Cone points the partition leaves upstairs over a point of this order.
int upstairs_cone_points(int nu, const std::vector<int>& partition) {
  int count = 0;
  for (int k : partition)
    if (nu == kOrderInf || k % nu != 0) ++count;
  return count;
}

bool has_divisible_part(int nu, const std::vector<int>& partition) {
  if (nu == kOrderInf) return true;  // inf never normalizes further
  for (int k : partition)
    if (k % nu == 0) return true;
  return false;
}

using Point = std::pair<int, std::vector<int>>;  // (order, partition)

CoverCandidate from_points(int degree, int genus, std::vector<Point> points,
                           int branch_count) {
  std::sort(points.begin(), points.end());
  OrbifoldSignature base;
  base.genus = genus;
  std::vector<std::vector<int>> profile;
  for (auto& [nu, partition] : points) {
    base.orders.push_back(nu);
    profile.push_back(std::move(partition));
  }
  return make_cover_candidate(degree, std::move(base), std::move(profile),
                              branch_count);
}

std::vector<Point> points_of(const CoverCandidate& c) {
  std::vector<Point> points;
  for (size_t i = 0; i < c.profile.size(); ++i)
    points.emplace_back(c.base.orders[i], c.profile[i]);
  return points;
}

// Twice the dimension-budget cost of one base point: 3r + 2n~ - 2.
// Always >= 1, which makes the accumulated cost a sound search cutoff.
int cost2(int nu, const std::vector<int>& partition) {
  return 3 * ramification(partition) + 2 * upstairs_cone_points(nu, partition) -
         2;
}

struct SortKey {
  int degree;
  int n;
  int cover_genus;
  int cover_cones;
  int base_genus;
  std::vector<int> orders;
  int branch_count;
  std::vector<std::vector<int>> profile;

  explicit SortKey(const CoverCandidate& c)
      : degree(c.degree),
        n(c.base.point_count()),
        cover_genus(c.cover_genus),
        cover_cones(c.cover_orbifold_count),
        base_genus(c.base.genus),
        orders(c.base.orders),
        branch_count(c.branch_count),
        profile(c.profile) {}

  bool operator<(const SortKey& o) const {
    return std::tie(degree, n, cover_genus, cover_cones, base_genus, orders,
                    branch_count, profile) <
           std::tie(o.degree, o.n, o.cover_genus, o.cover_cones, o.base_genus,
                    o.orders, o.branch_count, o.profile);
  }
};

}  // namespace

Rational order_reciprocal(int nu) {
  if (nu == kOrderInf) return Rational(0);
  require(nu >= 2, "cone order must be >= 2 or infinite");
  return Rational(1, nu);
}

std::string to_string(const OrbifoldSignature& sig) {
  std::ostringstream os;
  os << '(' << sig.genus << ';';
  for (size_t i = 0; i < sig.orders.size(); ++i) {
    os << (i == 0 ? " " : ",");
    if (sig.orders[i] == kOrderInf)
      os << "inf";
    else
      os << sig.orders[i];
  }
  os << ')';
  return os.str();
}

Rational area_over_pi(const OrbifoldSignature& sig) {
  Rational area = 2 * (2 * sig.genus - 2);
  for (int nu : sig.orders) area += 2 - 2 * order_reciprocal(nu);
  return area;
}

bool is_hyperbolic(const OrbifoldSignature& sig) {
  return area_over_pi(sig) > 0;
}

int teich_dim(const OrbifoldSignature& sig) {
  return 3 * sig.genus - 3 + sig.point_count();
}

CoverCandidate make_cover_candidate(int degree, OrbifoldSignature base,
                                    std::vector<std::vector<int>> profile,
                                    int branch_count) {
  require(degree >= 1, "degree must be positive");
  require(base.genus >= 0, "genus must be nonnegative");
  require(branch_count >= 0, "branch count must be nonnegative");
  require(base.orders.size() == profile.size(),
          "profile must list one partition per cone point");

  // Canonicalize: partitions descending, points sorted by (order, partition).
  std::vector<Point> points;
  for (size_t i = 0; i < profile.size(); ++i) {
    int nu = base.orders[i];
    require(nu == kOrderInf || nu >= 2, "cone order must be >= 2 or infinite");
    std::sort(profile[i].begin(), profile[i].end(), std::greater<int>());
    int total = 0;
    for (int k : profile[i]) {
      require(k >= 1, "local multiplicities must be positive");
      total += k;
    }
    require(total == degree, "local multiplicities must sum to the degree");
    points.emplace_back(nu, std::move(profile[i]));
  }
  std::sort(points.begin(), points.end());

  CoverCandidate c;
  c.degree = degree;
  c.base.genus = base.genus;
  c.branch_count = branch_count;
  int total_ram = branch_count;
  c.cover_orbifold_count = 0;
  for (auto& [nu, partition] : points) {
    total_ram += ramification(partition);
    c.cover_orbifold_count += upstairs_cone_points(nu, partition);
    c.base.orders.push_back(nu);
    c.profile.push_back(std::move(partition));
  }

  // Riemann-Hurwitz: 2g~ - 2 = d(2g - 2) + total ramification.
  const int rh = degree * (2 * base.genus - 2) + total_ram;
  require((rh + 2) % 2 == 0, "no integer cover genus fits the branching data");
  c.cover_genus = (rh + 2) / 2;
  require(c.cover_genus >= 0, "branching data forces a negative cover genus");
  return c;
}

ConstraintReport check_candidate(const CoverCandidate& c) {
  // Recompute everything; a candidate whose stored derived fields do not
  // match its own data is malformed.
  CoverCandidate rebuilt =
      make_cover_candidate(c.degree, c.base, c.profile, c.branch_count);
  require(rebuilt == c, "derived fields do not match the branching data");

  ConstraintReport report;
  report.degree_at_least_two = c.degree >= 2;
  report.base_hyperbolic = is_hyperbolic(c.base);

  const int n = c.base.point_count();
  const int g = c.base.genus;

  // Area comparison in units of 2*pi, exact.
  Rational lhs = 2 * g - 2;
  for (int nu : c.base.orders) lhs += 1 - order_reciprocal(nu);
  lhs *= c.degree;
  Rational rhs = 2 * c.cover_genus - 2;
  for (size_t i = 0; i < c.profile.size(); ++i) {
    const int nu = c.base.orders[i];
    for (int k : c.profile[i])
      if (nu == kOrderInf || k % nu != 0) rhs += 1 - k * order_reciprocal(nu);
  }
  rhs -= c.branch_count;
  report.area_inequality = lhs <= rhs;
  report.area_equality = lhs == rhs;

  const int dim_base = 3 * g - 3 + n;
  const int dim_cover = 3 * c.cover_genus - 3 + c.cover_orbifold_count;
  report.dimension_budget = dim_base + c.branch_count >= dim_cover;
  report.dimension_sandwich = 0 < dim_base && dim_base <= dim_cover;
  return report;
}

CoverCandidate normalize_orders(const CoverCandidate& c) {
  std::vector<Point> points = points_of(c);
  for (auto& [nu, partition] : points)
    if (!has_divisible_part(nu, partition)) nu = kOrderInf;
  return from_points(c.degree, c.base.genus, std::move(points),
                     c.branch_count);
}

std::string label_for(const CoverCandidate& c) {
  struct Known {
    int degree;
    OrbifoldSignature base;
    int cover_genus;
    int cover_cones;
    int branch_count;
    const char* label;
  };
  const int I = kOrderInf;
  static const std::vector<Known> table = {
      {2, {0, {2, 2, I, I}}, 0, 4, 0, "Quadratic"},
      {4, {0, {2, 2, 2, I}}, 0, 4, 0, "Quartic"},
      {2, {0, {2, 2, 2, I}}, 1, 1, 0, "Lame"},
      {2, {0, {2, 2, 2, 2, 2}}, 2, 0, 1, "Genus2"},
      {2, {0, {2, 2, 2, I}}, 1, 2, 1, "UncompleteTwicePuncturedTorus"},
      {2, {0, {2, 2, 2, 2, 2, 2}}, 2, 0, 0, "UncompleteGenus2"},
      {2, {0, {2, 2, 2, 2, I}}, 1, 2, 0, "Bielliptic1"},
      {4, {0, {2, 2, 2, 3}}, 1, 1, 0, "Eliminated-Sigma4"},
  };
  for (const Known& row : table) {
    if (row.degree == c.degree && row.base == c.base &&
        row.cover_genus == c.cover_genus &&
        row.cover_cones == c.cover_orbifold_count &&
        row.branch_count == c.branch_count)
      return row.label;
  }
  return "UNEXPECTED";
}

EnumerationResult enumerate_covers(int d_max, EnumerateOptions opts) {
  require(d_max >= 1, "degree bound must be positive");
  EnumerationResult result;
  std::set<SortKey> seen;
  std::set<std::pair<int, std::vector<int>>> non_hyperbolic_seen;
  const OrbifoldSignature picard{0, {2, 2, 2, 2}};

  for (int d = 2; d <= d_max; ++d) {
    // Point types available at this degree: (order, partition of d).
    std::vector<Point> types;
    std::vector<int> type_cost2;
    std::vector<int> allowed_orders;
    if (opts.pruning) {
      for (int nu = 2; nu <= d; ++nu) allowed_orders.push_back(nu);
    } else {
      for (int nu = 2; nu <= opts.max_order; ++nu) allowed_orders.push_back(nu);
    }
    allowed_orders.push_back(kOrderInf);
    for (int nu : allowed_orders) {
      for (const auto& partition : partitions_of(d)) {
        // Pruned mode only generates normalized points: a finite order
        // must divide some local multiplicity, else the point is
        // represented by its order-infinity normalization.
        if (opts.pruning && !has_divisible_part(nu, partition)) continue;
        types.emplace_back(nu, partition);
        type_cost2.push_back(cost2(nu, partition));
      }
    }

    const int max_genus = opts.pruning ? 0 : opts.max_base_genus;
    for (int g = 0; g <= max_genus; ++g) {
      // Dimension budget, doubled: sum of point costs + b <= budget2.
      // Every point costs at least 1, so overshooting is final.
      const int budget2 = 6 * (d - 1) * (1 - g);
      if (budget2 < 0) continue;  // budget fails for every candidate

      std::vector<Point> current;
      auto emit = [&](int spent2) {
        OrbifoldSignature sig;
        sig.genus = g;
        for (const auto& [nu, partition] : current)
          sig.orders.push_back(nu);
        std::sort(sig.orders.begin(), sig.orders.end());
        if (!is_hyperbolic(sig)) {
          if (sig == picard)
            non_hyperbolic_seen.insert({sig.genus, sig.orders});
          return;
        }
        int sum_ram = 0;
        for (const auto& [nu, partition] : current)
          sum_ram += ramification(partition);
        // b must keep 2g~-2 = d(2g-2) + sum_ram + b even.
        const int parity = ((d * (2 * g - 2) + sum_ram) % 2 + 2) % 2;
        for (int b = parity; spent2 + b <= budget2; b += 2) {
          const int rh = d * (2 * g - 2) + sum_ram + b;
          if (rh + 2 < 0) continue;  // cover genus would be negative
          if ((rh + 2) / 2 > opts.max_cover_genus) break;
          CoverCandidate cand = from_points(d, g, current, b);
          ConstraintReport report = check_candidate(cand);
          if (!report.admissible()) continue;
          CoverCandidate normalized = normalize_orders(cand);
          if (seen.insert(SortKey(normalized)).second) {
            std::string label = label_for(normalized);
            result.entries.push_back(
                {std::move(normalized), std::move(label), report});
          }
        }
      };

      auto rec = [&](auto&& self, size_t first_type, int spent2) -> void {
        emit(spent2);
        if (static_cast<int>(current.size()) >= opts.max_points) return;
        for (size_t t = first_type; t < types.size(); ++t) {
          if (spent2 + type_cost2[t] > budget2) continue;
          current.push_back(types[t]);
          self(self, t, spent2 + type_cost2[t]);
          current.pop_back();
        }
      };
      rec(rec, 0, 0);
    }
  }

  std::sort(result.entries.begin(), result.entries.end(),
            [](const ClassificationEntry& a, const ClassificationEntry& b) {
              return SortKey(a.candidate) < SortKey(b.candidate);
            });
  for (const auto& [genus, orders] : non_hyperbolic_seen)
    result.known_non_hyperbolic.push_back({genus, orders});
  return result;
}

Perm4 compose(const Perm4& p, const Perm4& q) {
  Perm4 r;
  for (int i = 0; i < 4; ++i) r.image[i] = p.image[q.image[i]];
  return r;
}

int permutation_order(const Perm4& p) {
  Perm4 acc = p;
  int order = 1;
  while (!(acc == Perm4::identity())) {
    acc = compose(acc, p);
    ++order;
  }
  return order;
}

std::string cycle_string(const Perm4& p) {
  std::ostringstream os;
  std::array<bool, 4> done{};
  for (int start = 0; start < 4; ++start) {
    if (done[start] || p.image[start] == start) continue;
    os << '(';
    int i = start;
    do {
      done[i] = true;
      os << i + 1;
      i = p.image[i];
    } while (i != start);
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "id" : s;
}

std::array<Perm4, 3> double_transpositions() {
  return {Perm4{{1, 0, 3, 2}}, Perm4{{2, 3, 0, 1}}, Perm4{{3, 2, 1, 0}}};
}

Sigma4Report sigma4_obstruction() {
  Sigma4Report report;
  report.obstruction_confirmed = true;
  for (const Perm4& a : double_transpositions())
    for (const Perm4& b : double_transpositions())
      for (const Perm4& c : double_transpositions()) {
        Perm4 product = compose(compose(a, b), c);
        int order = permutation_order(product);
        if (order != 1 && order != 2) report.obstruction_confirmed = false;
        report.rows.push_back({a, b, c, product, order});
      }
  report.verdict =
      report.obstruction_confirmed
          ? "cover nonexistent: every product of three double-transpositions "
            "has order 1 or 2, never the required 3"
          : "obstruction not confirmed";
  return report;
}

}  // namespace isocover
