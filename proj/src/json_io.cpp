// Copyright 2026 The dnfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dnfree/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dnfree/errors.hpp"

namespace dnfree {
namespace {

using InJson = nlohmann::json;

InJson parse_text(std::string_view text) {
  try {
    return InJson::parse(text);
  } catch (const InJson::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message);
}

const InJson& require(const InJson& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

void reject_unknown_keys(const InJson& obj, const std::set<std::string>& allowed, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

int read_positive_int(const InJson& value, const std::string& path, int max) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  const auto v = value.get<long long>();
  if (v < 1) fail(path, "must be >= 1");
  if (v > max) throw BoundError(path + ": " + std::to_string(v) + " exceeds limit " + std::to_string(max));
  return static_cast<int>(v);
}

Rational read_rational(const InJson& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a rational string such as \"1/2\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

std::vector<Rational> read_rational_array(const InJson& value, const std::string& path, int expected) {
  if (!value.is_array()) fail(path, "expected an array");
  if (static_cast<int>(value.size()) != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries (degrees 1.." +
                   std::to_string(expected) + "), got " + std::to_string(value.size()));
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(read_rational(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Model read_model(const InJson& value, const std::string& path) {
  if (!value.is_object() || value.size() != 1) {
    fail(path, "expected exactly one of semicircular, point_mass, free_poisson");
  }
  const auto& [name, params] = *value.items().begin();
  static const std::map<std::string, std::pair<Model::Kind, std::string>> kinds = {
      {"semicircular", {Model::Kind::semicircular, "variance"}},
      {"point_mass", {Model::Kind::point_mass, "value"}},
      {"free_poisson", {Model::Kind::free_poisson, "rate"}},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) fail(path + "." + name, "unknown model");
  const std::string param_path = path + "." + name;
  reject_unknown_keys(params, {it->second.second}, param_path);
  const auto& param = require(params, it->second.second, param_path);
  return Model{it->second.first, read_rational(param, param_path + "." + it->second.second)};
}

struct Header {
  std::size_t n;
  int order;
};

Header read_header(const InJson& doc) {
  if (!doc.is_object()) fail("$", "expected a JSON object");
  return Header{static_cast<std::size_t>(read_positive_int(require(doc, "N", ""), "N", 1 << 16)),
                read_positive_int(require(doc, "order", ""), "order", kMaxInputOrder)};
}

enum class SequenceKind { moments, cumulants };

// Each component becomes a one-component sequence of the requested kind.
DegreeSequence read_components(const InJson& doc, const Header& h, SequenceKind kind) {
  const char* key = kind == SequenceKind::moments ? "moments" : "cumulants";
  const auto& components = require(doc, "components", "");
  if (!components.is_array()) fail("components", "expected an array");
  if (components.size() != h.n) {
    fail("components", "expected N=" + std::to_string(h.n) + " components, got " +
                           std::to_string(components.size()));
  }
  std::vector<DegreeSequence> parts;
  for (std::size_t c = 0; c < h.n; ++c) {
    const std::string path = "components[" + std::to_string(c) + "]";
    const auto& comp = components[c];
    if (!comp.is_object()) fail(path, "expected an object");
    reject_unknown_keys(comp, {key, "model"}, path);
    const bool explicit_values = comp.contains(key);
    if (explicit_values == comp.contains("model")) {
      fail(path, std::string("expected exactly one of \"") + key + "\" or \"model\"");
    }
    std::vector<DiagonalScalar> values;
    if (explicit_values) {
      for (auto& q : read_rational_array(comp[key], path + "." + key, h.order)) {
        values.push_back(DiagonalScalar({q}));
      }
      parts.emplace_back(std::move(values));
      continue;
    }
    const Model model = read_model(comp["model"], path + ".model");
    for (auto& q : model_cumulants(model, h.order)) values.push_back(DiagonalScalar({q}));
    DegreeSequence k(std::move(values));
    if (kind == SequenceKind::moments) {
      parts.push_back(cumulants_to_moments(CumulantSequence{std::move(k)}).moments);
    } else {
      parts.push_back(std::move(k));
    }
  }
  std::vector<DiagonalScalar> zipped;
  for (int d = 1; d <= h.order; ++d) {
    std::vector<DiagonalScalar> column;
    for (const auto& p : parts) column.push_back(p[d]);
    zipped.push_back(zip_components(column));
  }
  return DegreeSequence(std::move(zipped));
}

Json rational_array(const DiagonalScalar& d) {
  Json arr = Json::array();
  for (const auto& q : d.entries()) arr.push_back(format_rational(q));
  return arr;
}

Json sequence_json(const DegreeSequence& seq, const char* key) {
  Json doc;
  doc["N"] = seq.n_components();
  doc["order"] = seq.order();
  Json comps = Json::array();
  for (std::size_t c = 0; c < seq.n_components(); ++c) {
    Json values = Json::array();
    for (int k = 1; k <= seq.order(); ++k) values.push_back(format_rational(seq[k][c]));
    Json comp;
    comp[key] = std::move(values);
    comps.push_back(std::move(comp));
  }
  doc["components"] = std::move(comps);
  return doc;
}

}  // namespace

DocumentKind detect_document(std::string_view text) {
  const InJson doc = parse_text(text);
  if (!doc.is_object()) fail("$", "expected a JSON object");
  if (doc.contains("vars")) return DocumentKind::joint;
  if (doc.contains("coeffs")) return DocumentKind::series;
  const auto it = doc.find("components");
  if (it != doc.end() && it->is_array()) {
    for (const auto& c : *it) {
      if (c.is_object() && c.contains("cumulants")) return DocumentKind::cumulants;
    }
  }
  return DocumentKind::distribution;
}

Distribution parse_distribution(std::string_view text) {
  const InJson doc = parse_text(text);
  const Header h = read_header(doc);
  reject_unknown_keys(doc, {"N", "order", "components"}, "");
  return Distribution{read_components(doc, h, SequenceKind::moments)};
}

CumulantSequence parse_cumulants(std::string_view text) {
  const InJson doc = parse_text(text);
  const Header h = read_header(doc);
  reject_unknown_keys(doc, {"N", "order", "components"}, "");
  return CumulantSequence{read_components(doc, h, SequenceKind::cumulants)};
}

JointDistribution parse_joint(std::string_view text) {
  const InJson doc = parse_text(text);
  if (!doc.is_object()) fail("$", "expected a JSON object");
  reject_unknown_keys(doc, {"N", "order", "vars", "star", "moments"}, "");
  const auto n = static_cast<std::size_t>(read_positive_int(require(doc, "N", ""), "N", 1 << 16));
  const int order = read_positive_int(require(doc, "order", ""), "order", kMaxJointOrder);
  const auto& vars_json = require(doc, "vars", "");
  if (!vars_json.is_array() || vars_json.empty()) fail("vars", "expected a nonempty array of names");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_json.size(); ++i) {
    const auto& v = vars_json[i];
    const std::string path = "vars[" + std::to_string(i) + "]";
    if (!v.is_string()) fail(path, "expected a string");
    const auto name = v.get<std::string>();
    if (name.empty() || name.find_first_of(" *\t") != std::string::npos) fail(path, "invalid variable name");
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) fail(path, "duplicate variable");
    vars.push_back(name);
  }
  if (static_cast<int>(vars.size()) > kMaxJointVars) {
    throw BoundError("vars: at most " + std::to_string(kMaxJointVars) + " variables supported");
  }
  bool star = false;
  if (doc.contains("star")) {
    if (!doc["star"].is_boolean()) fail("star", "expected a boolean");
    star = doc["star"].get<bool>();
  }
  const auto& table = require(doc, "moments", "");
  if (!table.is_object()) fail("moments", "expected an object keyed by words");
  std::map<StarWord, DiagonalScalar> moments;
  for (const auto& [key, value] : table.items()) {
    const std::string path = "moments[\"" + key + "\"]";
    StarWord w;
    try {
      w = parse_word(key, vars, star);
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
    auto entries = read_rational_array(value, path, static_cast<int>(n));
    if (!moments.emplace(w, DiagonalScalar(std::move(entries))).second) fail(path, "duplicate word");
  }
  try {
    return JointDistribution(n, order, std::move(vars), star, std::move(moments));
  } catch (const Error& e) {
    fail("moments", e.what());
  }
}

TruncatedSeries parse_series(std::string_view text) {
  const InJson doc = parse_text(text);
  const Header h = read_header(doc);
  reject_unknown_keys(doc, {"N", "order", "coeffs"}, "");
  const auto& coeffs = require(doc, "coeffs", "");
  if (!coeffs.is_object()) fail("coeffs", "expected an object keyed by degree");
  TruncatedSeries s(h.n, h.order);
  for (const auto& [key, value] : coeffs.items()) {
    const std::string path = "coeffs[\"" + key + "\"]";
    if (key.empty() || key.size() > 3 || key.find_first_not_of("0123456789") != std::string::npos ||
        (key.size() > 1 && key[0] == '0')) {
      fail(path, "degree keys must be base-10 integers");
    }
    const int degree = std::stoi(key);
    if (degree > h.order) fail(path, "degree exceeds order " + std::to_string(h.order));
    s[degree] = DiagonalScalar(read_rational_array(value, path, static_cast<int>(h.n)));
  }
  return s;
}

std::variant<Distribution, JointDistribution> parse_input(std::string_view text) {
  if (detect_document(text) == DocumentKind::joint) return parse_joint(text);
  return parse_distribution(text);
}

Json to_json(const DiagonalScalar& d) { return rational_array(d); }

Json to_json(const Distribution& d) { return sequence_json(d.moments, "moments"); }

Json to_json(const CumulantSequence& k) { return sequence_json(k.cumulants, "cumulants"); }

Json to_json(const TruncatedSeries& s) {
  Json doc;
  doc["N"] = s.n_components();
  doc["order"] = s.order();
  Json coeffs = Json::object();
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].is_zero()) coeffs[std::to_string(k)] = rational_array(s[k]);
  }
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

Json to_json(const JointDistribution& j) {
  Json doc;
  doc["N"] = j.n_components();
  doc["order"] = j.order();
  doc["vars"] = j.vars();
  doc["star"] = j.star();
  Json table = Json::object();
  for (const auto& w : all_words(static_cast<int>(j.vars().size()), j.star(), j.order())) {
    table[to_string(w, j.vars())] = rational_array(j.moment(w));
  }
  doc["moments"] = std::move(table);
  return doc;
}

Json to_json(const Classification& c) {
  Json doc;
  doc["result"] = to_string(c.verdict);
  Json comps = Json::array();
  for (auto v : c.components) comps.push_back(to_string(v));
  doc["components"] = std::move(comps);
  doc["notes"] = c.notes;
  return doc;
}

Json to_json(const FreenessReport& r, const std::vector<std::string>& vars) {
  Json doc;
  doc["free"] = r.free;
  if (r.witness) {
    doc["witness"] = to_string(*r.witness, vars);
    doc["witness_cumulant"] = rational_array(*r.witness_cumulant);
  }
  return doc;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace dnfree
