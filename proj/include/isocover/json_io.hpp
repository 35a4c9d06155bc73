#pragma once

// JSON encoding shared by the CLI and the verification reports.
//
// Scalars are [re, im] pairs: JSON numbers select the floating backend,
// strings "p/q" the exact one (bit-exact round trip). Matrices are
// objects {"m11": [re,im], ..., "m22": [re,im]}; representations carry
// a "type" tag ("five", "torus", "torusC", "genus2"), a "theta" field
// where the space has one, and a "matrices" object keyed by generator
// name. Classifier data serializes one way only (the CLI never reads
// it back). Structural problems throw std::invalid_argument; semantic
// validation of parsed representations stays with validate().

#include <string>

#include "json.hpp"

#include "isocover/orbifold.hpp"
#include "isocover/rep_spaces.hpp"

namespace isocover {

using Json = nlohmann::json;

// --- scalars, matrices, exponents ---
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json to_json(const Theta& t);  // "p/q" when exact, number otherwise
Theta theta_from_json(const Json& j);

// "p/q" (or "p") -> exact rational; throws on anything else.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);  // always "p/q"

// --- representations ---
Json to_json(const FivePuncturedRep& rep);
Json to_json(const TorusTwoRep& rep);
Json to_json(const TorusTwoRepC& rep);
Json to_json(const GenusTwoRep& rep);

FivePuncturedRep five_from_json(const Json& j);
TorusTwoRep torus_from_json(const Json& j);
TorusTwoRepC torus_c_from_json(const Json& j);
GenusTwoRep genus2_from_json(const Json& j);

// The "type" tag of an encoded representation.
std::string rep_type(const Json& j);

// --- classifier output ---
Json to_json(const OrbifoldSignature& sig);  // orders: numbers or "inf"
Json to_json(const CoverCandidate& c);
Json to_json(const ConstraintReport& r);
Json to_json(const ClassificationEntry& e);
Json to_json(const EnumerationResult& r);
Json to_json(const Sigma4Report& r);

}  // namespace isocover
