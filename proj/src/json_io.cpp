#include "isocover/json_io.hpp"

#include <stdexcept>

namespace isocover {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

Json component_to_json(bool exact, const Rational& q, double f) {
  if (exact) return rational_to_string(q);
  return f;
}

// One [re,im] component: number -> float backend, "p/q" -> exact.
bool component_is_exact(const Json& j, const char* side) {
  if (j.is_string()) return true;
  if (j.is_number()) return false;
  bad(std::string("scalar ") + side +
      " component must be a number or an exact-rational string");
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing field \"") + name + '"');
  return j.at(name);
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) bad("empty exact-rational string");
  try {
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    bad("not an exact rational: \"" + text + '"');
  }
}

Json to_json(const Scalar& s) {
  if (s.is_exact()) {
    const GaussianRational& q = s.exact_value();
    return Json::array({component_to_json(true, q.re, 0.0),
                        component_to_json(true, q.im, 0.0)});
  }
  const std::complex<double> z = s.to_complex();
  return Json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    bad("scalar must be a [re, im] pair");
  const bool re_exact = component_is_exact(j[0], "real");
  const bool im_exact = component_is_exact(j[1], "imaginary");
  if (re_exact != im_exact)
    bad("scalar components must both be numbers or both exact strings");
  if (re_exact)
    return Scalar(parse_rational(j[0].get<std::string>()),
                  parse_rational(j[1].get<std::string>()));
  return Scalar(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const Mat2& m) {
  return Json{{"m11", to_json(m.m11)},
              {"m12", to_json(m.m12)},
              {"m21", to_json(m.m21)},
              {"m22", to_json(m.m22)}};
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix must be an object with m11..m22");
  return {scalar_from_json(field(j, "m11")), scalar_from_json(field(j, "m12")),
          scalar_from_json(field(j, "m21")),
          scalar_from_json(field(j, "m22"))};
}

Json to_json(const Theta& t) {
  if (t.is_exact()) return rational_to_string(t.rational_value());
  return t.value();
}

Theta theta_from_json(const Json& j) {
  if (j.is_string()) return Theta::from_rational(parse_rational(j.get<std::string>()));
  if (j.is_number()) return Theta::from_double(j.get<double>());
  bad("theta must be a number or an exact-rational string");
}

namespace {

Json matrices_json(const std::vector<std::pair<const char*, const Mat2*>>& ms) {
  Json out = Json::object();
  for (const auto& [name, m] : ms) out[name] = to_json(*m);
  return out;
}

Mat2 named_matrix(const Json& j, const char* name) {
  return mat2_from_json(field(field(j, "matrices"), name));
}

void require_type(const Json& j, const char* expected) {
  const Json& t = field(j, "type");
  if (!t.is_string() || t.get<std::string>() != expected)
    bad(std::string("expected representation type \"") + expected + '"');
}

}  // namespace

std::string rep_type(const Json& j) {
  const Json& t = field(j, "type");
  if (!t.is_string()) bad("\"type\" must be a string");
  return t.get<std::string>();
}

Json to_json(const FivePuncturedRep& rep) {
  return Json{{"type", "five"},
              {"theta", to_json(rep.theta)},
              {"matrices", matrices_json({{"m0", &rep.m0},
                                          {"m1", &rep.m1},
                                          {"mt", &rep.mt},
                                          {"mlambda", &rep.mlambda},
                                          {"minf", &rep.minf}})}};
}

Json to_json(const TorusTwoRep& rep) {
  return Json{{"type", "torus"},
              {"theta", to_json(rep.theta)},
              {"matrices", matrices_json({{"a", &rep.a},
                                          {"b", &rep.b},
                                          {"d1", &rep.d1},
                                          {"d2", &rep.d2}})}};
}

Json to_json(const TorusTwoRepC& rep) {
  return Json{{"type", "torusC"},
              {"matrices", matrices_json({{"a", &rep.a},
                                          {"b", &rep.b},
                                          {"c1", &rep.c1},
                                          {"c2", &rep.c2}})}};
}

Json to_json(const GenusTwoRep& rep) {
  return Json{{"type", "genus2"},
              {"matrices", matrices_json({{"a1", &rep.a1},
                                          {"b1", &rep.b1},
                                          {"a2", &rep.a2},
                                          {"b2", &rep.b2}})}};
}

FivePuncturedRep five_from_json(const Json& j) {
  require_type(j, "five");
  return {named_matrix(j, "m0"),      named_matrix(j, "m1"),
          named_matrix(j, "mt"),      named_matrix(j, "mlambda"),
          named_matrix(j, "minf"),    theta_from_json(field(j, "theta"))};
}

TorusTwoRep torus_from_json(const Json& j) {
  require_type(j, "torus");
  return {named_matrix(j, "a"), named_matrix(j, "b"), named_matrix(j, "d1"),
          named_matrix(j, "d2"), theta_from_json(field(j, "theta"))};
}

TorusTwoRepC torus_c_from_json(const Json& j) {
  require_type(j, "torusC");
  return {named_matrix(j, "a"), named_matrix(j, "b"), named_matrix(j, "c1"),
          named_matrix(j, "c2")};
}

GenusTwoRep genus2_from_json(const Json& j) {
  require_type(j, "genus2");
  return {named_matrix(j, "a1"), named_matrix(j, "b1"), named_matrix(j, "a2"),
          named_matrix(j, "b2")};
}

Json to_json(const OrbifoldSignature& sig) {
  Json orders = Json::array();
  for (int nu : sig.orders) {
    if (nu == kOrderInf)
      orders.push_back("inf");
    else
      orders.push_back(nu);
  }
  return Json{{"genus", sig.genus}, {"orders", orders}};
}

Json to_json(const CoverCandidate& c) {
  return Json{{"degree", c.degree},
              {"base", to_json(c.base)},
              {"profile", c.profile},
              {"branch_count", c.branch_count},
              {"cover_genus", c.cover_genus},
              {"cover_orbifold_count", c.cover_orbifold_count}};
}

Json to_json(const ConstraintReport& r) {
  return Json{{"degree_at_least_two", r.degree_at_least_two},
              {"base_hyperbolic", r.base_hyperbolic},
              {"area_inequality", r.area_inequality},
              {"area_equality", r.area_equality},
              {"dimension_budget", r.dimension_budget},
              {"dimension_sandwich", r.dimension_sandwich},
              {"admissible", r.admissible()}};
}

Json to_json(const ClassificationEntry& e) {
  return Json{{"label", e.label},
              {"candidate", to_json(e.candidate)},
              {"constraints", to_json(e.report)}};
}

Json to_json(const EnumerationResult& r) {
  Json entries = Json::array();
  for (const ClassificationEntry& e : r.entries) entries.push_back(to_json(e));
  Json known = Json::array();
  for (const OrbifoldSignature& sig : r.known_non_hyperbolic)
    known.push_back(to_json(sig));
  return Json{{"entries", entries}, {"known_non_hyperbolic", known}};
}

Json to_json(const Sigma4Report& r) {
  Json rows = Json::array();
  for (const Sigma4Row& row : r.rows)
    rows.push_back(Json{{"a", cycle_string(row.a)},
                        {"b", cycle_string(row.b)},
                        {"c", cycle_string(row.c)},
                        {"product", cycle_string(row.product)},
                        {"order", row.product_order}});
  return Json{{"rows", rows},
              {"obstruction_confirmed", r.obstruction_confirmed},
              {"verdict", r.verdict}};
}

}  // namespace isocover
