#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "kpack/bounds.hpp"
#include "kpack/decomposer.hpp"
#include "kpack/design.hpp"
#include "kpack/extremal.hpp"
#include "kpack/fractional.hpp"
#include "kpack/integral.hpp"

// JSON payloads for every CLI surface. Vertices are 1-indexed on the wire,
// rationals are "num/den" strings (plain "num" for integers). nlohmann's
// default object keeps keys sorted, so identical data serializes to
// identical bytes.
namespace kpack {

using json = nlohmann::json;

json to_json(const FractionalPacking& p);
FractionalPacking fractional_from_json(const json& j);

json to_json(const DecompositionReport& rep);

json to_json(const IntegralPacking& p);
IntegralPacking packing_from_json(const json& j);

json to_json(const GapReport& rep);

json to_json(const Design& d);
Design design_from_json(const json& j);

json to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const json& j);

struct ExtremalLPCheck {
  std::string mode = "none";  // "exact" | "float" | "none"
  Rational exact_value;
  double float_value = 0.0;
};
json to_json(const ExtremalReport& rep, const ExtremalLPCheck& lp = {});

json to_json(const BoundQuery& q, const BoundValue& v);
json cor27_to_json(const Rational& gamma, int t, const ProbBound& b);
json to_json(const Lemma26Report& rep, int t);

json to_json(const ValidityReport& rep);

// Embedded JSON schemas, one per payload kind; names() lists them.
const std::string& schema_source(const std::string& name);
std::vector<std::string> schema_names();

// Minimal structural validator: type / required / properties / items / enum.
ValidityReport validate_schema(const json& schema, const json& doc);

}  // namespace kpack
