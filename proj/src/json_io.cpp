#include "kpack/json_io.hpp"

#include <algorithm>
#include <map>

namespace kpack {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw ParamError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParamError(std::string("missing key \"") + key + "\"");
  return *it;
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw ParamError(std::string("key \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_from(const json& v) {
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParamError("expected a rational encoded as a string");
}

json edge_to_json(const Edge& e) { return json::array({e.u + 1, e.v + 1}); }

Edge edge_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ParamError("edge must be a [u,v] pair");
  const long u = v[0].get<long>(), w = v[1].get<long>();
  if (u < 1 || w < 1) throw ParamError("edge endpoints are 1-indexed");
  return make_edge(static_cast<int>(u - 1), static_cast<int>(w - 1));
}

json verts_to_json(const std::vector<int>& vs) {
  json a = json::array();
  for (int v : vs) a.push_back(v + 1);
  return a;
}

std::vector<int> verts_from_json(const json& v) {
  if (!v.is_array()) throw ParamError("vertex list must be an array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long>() < 1)
      throw ParamError("vertices are positive 1-indexed integers");
    out.push_back(static_cast<int>(x.get<long>() - 1));
  }
  return out;
}

}  // namespace

json to_json(const FractionalPacking& p) {
  json weights = json::array();
  for (const auto& [copy, w] : p.weights)
    weights.push_back({{"vertices", verts_to_json(copy)}, {"weight", w.str()}});
  return {{"k", p.k}, {"weights", weights}};
}

FractionalPacking fractional_from_json(const json& j) {
  FractionalPacking p;
  p.k = need_int(j, "k");
  for (const auto& e : need(j, "weights")) {
    CliqueCopy copy = verts_from_json(need(e, "vertices"));
    p.weights.emplace_back(std::move(copy), rational_from(need(e, "weight")));
  }
  std::sort(p.weights.begin(), p.weights.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return p;
}

json to_json(const DecompositionReport& rep) {
  return {{"k", rep.k},
          {"lp_value", rep.lp_value.str()},
          {"target", rep.target.str()},
          {"is_fractional_decomposition", rep.is_fractional_decomposition},
          {"witness", to_json(rep.witness)}};
}

json to_json(const IntegralPacking& p) {
  json copies = json::array();
  for (const auto& c : p.copies) copies.push_back(verts_to_json(c));
  return {{"k", p.k}, {"copies", copies}};
}

IntegralPacking packing_from_json(const json& j) {
  IntegralPacking p;
  p.k = need_int(j, "k");
  for (const auto& c : need(j, "copies")) p.copies.push_back(verts_from_json(c));
  return p;
}

json to_json(const GapReport& rep) {
  return {{"nu_star", rep.nu_star.str()},
          {"nu", rep.nu},
          {"gap", rep.gap.str()},
          {"method", rep.method == GapMethod::exact ? "exact" : "greedy-lower-bound"}};
}

json to_json(const Design& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(verts_to_json(b));
  return {{"n", d.n}, {"t", d.t}, {"blocks", blocks}};
}

Design design_from_json(const json& j) {
  Design d;
  d.n = need_int(j, "n");
  d.t = need_int(j, "t");
  for (const auto& b : need(j, "blocks")) d.blocks.push_back(verts_from_json(b));
  if (const auto rep = validate_design(d); !rep.ok())
    throw ParamError("design fails validation: " + rep.violations.front());
  return d;
}

json to_json(const DecompositionCertificate& cert) {
  json parts = json::array();
  for (const auto& p : cert.parts) {
    json edges = json::array();
    for (const auto& e : p.edges) edges.push_back(edge_to_json(e));
    parts.push_back({{"tag", std::string(tag_name(p.tag))},
                     {"vertices", verts_to_json(p.vertices)},
                     {"edges", edges}});
  }
  json rejections = {{"a1", cert.diag.a1},
                     {"a2", cert.diag.a2},
                     {"a3", cert.diag.a3},
                     {"a4", cert.diag.a4},
                     {"a5", cert.diag.a5}};
  json meta = {{"seed", cert.seed},
               {"maxdeg_cap", cert.maxdeg_cap},
               {"saturation_cap", cert.saturation_cap},
               {"keep_near_kt", cert.keep_near_kt},
               {"above_cap", cert.partition_above_cap},
               {"below_paper_threshold", cert.below_paper_threshold},
               {"rejections", rejections}};
  return {{"k", cert.k}, {"parts", parts}, {"meta", meta}};
}

DecompositionCertificate certificate_from_json(const json& j) {
  DecompositionCertificate cert;
  cert.k = need_int(j, "k");
  for (const auto& p : need(j, "parts")) {
    CertificatePart part;
    const std::string tag = need(p, "tag").get<std::string>();
    if (tag == "Kk")
      part.tag = CertificatePart::Tag::Kk;
    else if (tag == "Kt")
      part.tag = CertificatePart::Tag::Kt;
    else if (tag == "KtMinus")
      part.tag = CertificatePart::Tag::KtMinus;
    else
      throw ParamError("unknown part tag \"" + tag + "\"");
    part.vertices = verts_from_json(need(p, "vertices"));
    for (const auto& e : need(p, "edges")) part.edges.push_back(edge_from_json(e));
    cert.parts.push_back(std::move(part));
  }
  if (j.contains("meta")) {
    const json& m = j["meta"];
    if (m.contains("seed")) cert.seed = m["seed"].get<std::uint64_t>();
    if (m.contains("maxdeg_cap")) cert.maxdeg_cap = m["maxdeg_cap"].get<int>();
    if (m.contains("saturation_cap")) cert.saturation_cap = m["saturation_cap"].get<int>();
    if (m.contains("keep_near_kt")) cert.keep_near_kt = m["keep_near_kt"].get<bool>();
    if (m.contains("above_cap")) cert.partition_above_cap = m["above_cap"].get<bool>();
    if (m.contains("below_paper_threshold"))
      cert.below_paper_threshold = m["below_paper_threshold"].get<bool>();
    if (m.contains("rejections")) {
      const json& r = m["rejections"];
      if (r.contains("a1")) cert.diag.a1 = r["a1"].get<std::uint64_t>();
      if (r.contains("a2")) cert.diag.a2 = r["a2"].get<std::uint64_t>();
      if (r.contains("a3")) cert.diag.a3 = r["a3"].get<std::uint64_t>();
      if (r.contains("a4")) cert.diag.a4 = r["a4"].get<std::uint64_t>();
      if (r.contains("a5")) cert.diag.a5 = r["a5"].get<std::uint64_t>();
    }
  }
  return cert;
}

json to_json(const ExtremalReport& rep, const ExtremalLPCheck& lp) {
  json out = {{"n", rep.n},
              {"min_degree", rep.min_degree},
              {"intra_edge_count", rep.intra_edge_count},
              {"structural_bound", rep.structural_bound.str()},
              {"target", rep.target.str()},
              {"deficiency", rep.deficiency.str()},
              {"premise_checked", rep.premise_checked},
              {"kk_copies", rep.kk_copies},
              {"lp_mode", lp.mode}};
  if (lp.mode == "exact") out["lp_value"] = lp.exact_value.str();
  if (lp.mode == "float") out["lp_value_float"] = lp.float_value;
  return out;
}

json to_json(const BoundQuery& q, const BoundValue& v) {
  return {{"n_star", q.n_star},
          {"deficit", q.degree_deficit},
          {"t", q.t},
          {"bound", v.value.str()},
          {"vacuous", v.vacuous}};
}

json cor27_to_json(const Rational& gamma, int t, const ProbBound& b) {
  return {{"gamma", gamma.str()}, {"t", t}, {"bound", b.value.str()}, {"clamped", b.clamped}};
}

json to_json(const Lemma26Report& rep, int t) {
  return {{"t", t},
          {"deficit", rep.deficit},
          {"bound", rep.bound.str()},
          {"vacuous", rep.vacuous},
          {"min_count", rep.min_count},
          {"argmin_edge", edge_to_json(rep.argmin)},
          {"holds", rep.holds},
          {"copies", rep.copies_enumerated}};
}

json to_json(const ValidityReport& rep) {
  return {{"valid", rep.ok()}, {"violations", rep.violations}};
}

namespace {

const std::map<std::string, std::string>& schema_table() {
  static const std::map<std::string, std::string> table = {
      {"decomposition_report", R"({
  "type": "object",
  "required": ["k", "lp_value", "target", "is_fractional_decomposition", "witness"],
  "properties": {
    "k": {"type": "integer"},
    "lp_value": {"type": "string"},
    "target": {"type": "string"},
    "is_fractional_decomposition": {"type": "boolean"},
    "witness": {
      "type": "object",
      "required": ["k", "weights"],
      "properties": {
        "k": {"type": "integer"},
        "weights": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["vertices", "weight"],
            "properties": {
              "vertices": {"type": "array", "items": {"type": "integer"}},
              "weight": {"type": "string"}
            }
          }
        }
      }
    }
  }
})"},
      {"fractional_packing", R"({
  "type": "object",
  "required": ["k", "weights"],
  "properties": {
    "k": {"type": "integer"},
    "weights": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["vertices", "weight"],
        "properties": {
          "vertices": {"type": "array", "items": {"type": "integer"}},
          "weight": {"type": "string"}
        }
      }
    }
  }
})"},
      {"integral_packing", R"({
  "type": "object",
  "required": ["k", "copies"],
  "properties": {
    "k": {"type": "integer"},
    "copies": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer"}}
    }
  }
})"},
      {"gap_report", R"({
  "type": "object",
  "required": ["nu_star", "nu", "gap", "method"],
  "properties": {
    "nu_star": {"type": "string"},
    "nu": {"type": "integer"},
    "gap": {"type": "string"},
    "method": {"enum": ["exact", "greedy-lower-bound"]}
  }
})"},
      {"design", R"({
  "type": "object",
  "required": ["n", "t", "blocks"],
  "properties": {
    "n": {"type": "integer"},
    "t": {"type": "integer"},
    "blocks": {
      "type": "array",
      "items": {"type": "array", "items": {"type": "integer"}}
    }
  }
})"},
      {"design_search", R"({
  "type": "object",
  "required": ["status"],
  "properties": {
    "status": {"enum": ["found", "none_exists", "budget_exceeded", "divisibility"]},
    "nodes": {"type": "integer"},
    "design": {"type": "object"}
  }
})"},
      {"certificate", R"({
  "type": "object",
  "required": ["k", "parts", "meta"],
  "properties": {
    "k": {"type": "integer"},
    "parts": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["tag", "vertices", "edges"],
        "properties": {
          "tag": {"enum": ["Kk", "Kt", "KtMinus"]},
          "vertices": {"type": "array", "items": {"type": "integer"}},
          "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
        }
      }
    },
    "meta": {
      "type": "object",
      "required": ["seed", "maxdeg_cap", "saturation_cap", "keep_near_kt", "above_cap",
                   "below_paper_threshold", "rejections"],
      "properties": {
        "seed": {"type": "integer"},
        "maxdeg_cap": {"type": "integer"},
        "saturation_cap": {"type": "integer"},
        "keep_near_kt": {"type": "boolean"},
        "above_cap": {"type": "boolean"},
        "below_paper_threshold": {"type": "boolean"},
        "rejections": {
          "type": "object",
          "required": ["a1", "a2", "a3", "a4", "a5"]
        }
      }
    }
  }
})"},
      {"decompose_failure", R"({
  "type": "object",
  "required": ["stage", "error"],
  "properties": {
    "stage": {"enum": ["preprocess", "design", "select", "assemble", "verify"]},
    "error": {"type": "string"}
  }
})"},
      {"extremal_report", R"({
  "type": "object",
  "required": ["n", "min_degree", "intra_edge_count", "structural_bound", "target",
               "deficiency", "premise_checked", "kk_copies", "lp_mode"],
  "properties": {
    "n": {"type": "integer"},
    "min_degree": {"type": "integer"},
    "intra_edge_count": {"type": "integer"},
    "structural_bound": {"type": "string"},
    "target": {"type": "string"},
    "deficiency": {"type": "string"},
    "premise_checked": {"type": "boolean"},
    "kk_copies": {"type": "integer"},
    "lp_mode": {"enum": ["none", "exact", "float"]},
    "lp_value": {"type": "string"},
    "lp_value_float": {"type": "number"}
  }
})"},
      {"bounds_formula", R"({
  "type": "object",
  "required": ["n_star", "deficit", "t", "bound", "vacuous"],
  "properties": {
    "n_star": {"type": "integer"},
    "deficit": {"type": "integer"},
    "t": {"type": "integer"},
    "bound": {"type": "string"},
    "vacuous": {"type": "boolean"}
  }
})"},
      {"bounds_cor27", R"({
  "type": "object",
  "required": ["gamma", "t", "bound", "clamped"],
  "properties": {
    "gamma": {"type": "string"},
    "t": {"type": "integer"},
    "bound": {"type": "string"},
    "clamped": {"type": "boolean"}
  }
})"},
      {"bounds_verify", R"({
  "type": "object",
  "required": ["t", "deficit", "bound", "vacuous", "min_count", "argmin_edge", "holds"],
  "properties": {
    "t": {"type": "integer"},
    "deficit": {"type": "integer"},
    "bound": {"type": "string"},
    "vacuous": {"type": "boolean"},
    "min_count": {"type": "integer"},
    "argmin_edge": {"type": "array", "items": {"type": "integer"}},
    "holds": {"type": "boolean"},
    "copies": {"type": "integer"}
  }
})"},
      {"verify_report", R"({
  "type": "object",
  "required": ["valid", "violations"],
  "properties": {
    "valid": {"type": "boolean"},
    "violations": {"type": "array", "items": {"type": "string"}}
  }
})"},
      {"manifest", R"({
  "type": "object",
  "required": ["tool", "version", "subcommand", "seed", "jobs", "options", "inputs",
               "timings_ms"],
  "properties": {
    "tool": {"type": "string"},
    "version": {"type": "string"},
    "subcommand": {"type": "string"},
    "seed": {"type": "integer"},
    "jobs": {"type": "integer"},
    "options": {"type": "object"},
    "inputs": {"type": "object"},
    "timings_ms": {"type": "object"}
  }
})"},
  };
  return table;
}

void check_schema(const json& schema, const json& doc, const std::string& path,
                  ValidityReport& rep) {
  if (schema.contains("type")) {
    const std::string ty = schema["type"].get<std::string>();
    bool ok = (ty == "object" && doc.is_object()) || (ty == "array" && doc.is_array()) ||
              (ty == "string" && doc.is_string()) ||
              (ty == "integer" && doc.is_number_integer()) ||
              (ty == "number" && doc.is_number()) || (ty == "boolean" && doc.is_boolean());
    if (!ok) {
      rep.fail(path + ": expected " + ty);
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"])
      if (v == doc) found = true;
    if (!found) rep.fail(path + ": value not in enum");
  }
  if (schema.contains("required"))
    for (const auto& key : schema["required"])
      if (!doc.contains(key.get<std::string>()))
        rep.fail(path + ": missing required key \"" + key.get<std::string>() + "\"");
  if (schema.contains("properties") && doc.is_object())
    for (const auto& [key, sub] : schema["properties"].items())
      if (doc.contains(key)) check_schema(sub, doc[key], path + "/" + key, rep);
  if (schema.contains("items") && doc.is_array()) {
    std::size_t i = 0;
    for (const auto& el : doc) check_schema(schema["items"], el, path + "[" + std::to_string(i++) + "]", rep);
  }
}

}  // namespace

const std::string& schema_source(const std::string& name) {
  const auto& table = schema_table();
  auto it = table.find(name);
  if (it == table.end()) throw ParamError("no schema named \"" + name + "\"");
  return it->second;
}

std::vector<std::string> schema_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : schema_table()) names.push_back(k);
  return names;
}

ValidityReport validate_schema(const json& schema, const json& doc) {
  ValidityReport rep;
  check_schema(schema, doc, "$", rep);
  return rep;
}

}  // namespace kpack
