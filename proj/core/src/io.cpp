//  Copyright 2026 The qideal Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "qideal/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qideal {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw FormatError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

/// A nested structure: inline object, or a path relative to `dir`.
struct Resolved {
  json node;
  fs::path dir;
};

Resolved resolve(const json& ref, const fs::path& dir, const std::string& field) {
  if (ref.is_object()) return {ref, dir};
  if (ref.is_string()) {
    fs::path p = ref.get<std::string>();
    if (p.is_relative()) p = dir / p;
    return {parse_text(read_file(p), p.string()), p.parent_path()};
  }
  throw FormatError("'" + field + "' must be an object or a file path");
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string scalar_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v.get<double>();
    return ss.str();
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  throw FormatError("expected a scalar value");
}

Elem element(const FiniteQuantale& q, const json& v) {
  if (v.is_string()) {
    if (auto e = q.find(v.get<std::string>())) return *e;
    throw FormatError("quantale " + q.name() + " has no element '" + v.get<std::string>() + "'");
  }
  if (v.is_number()) {
    if (!q.has_values()) throw FormatError("numeric values need a chain quantale");
    const double d = v.get<double>();
    for (Elem e = 0; e < q.size(); ++e)
      if (std::fabs(q.value(e)->to_double() - d) <= 1e-9) return e;
    throw FormatError("no chain element equals " + scalar_string(v));
  }
  throw FormatError("element must be a label or a number");
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(scalar_string(v));
  return out;
}

TNorm tnorm_of(const json& v) {
  auto t = parse_tnorm(scalar_string(v));
  if (!t) throw FormatError("unknown t-norm '" + scalar_string(v) + "'");
  return *t;
}

AnyQuantale quantale_from(const json& j) {
  const std::string kind = scalar_string(field(j, "kind"));
  if (kind == "finite") {
    QuantaleSpec spec;
    spec.name = j.value("name", std::string("finite"));
    spec.elements = string_list(field(j, "elements"), "elements");
    for (const auto& row : field(j, "leq")) {
      std::vector<bool> r;
      for (const auto& v : row) {
        if (!v.is_boolean()) throw FormatError("leq entries must be booleans");
        r.push_back(v.get<bool>());
      }
      spec.leq.push_back(std::move(r));
    }
    for (const auto& row : field(j, "tensor")) spec.tensor.push_back(string_list(row, "tensor row"));
    spec.unit = scalar_string(field(j, "unit"));
    if (j.contains("values")) {
      for (const auto& s : string_list(j.at("values"), "values")) {
        auto r = Rational::parse(s);
        if (!r) throw FormatError("bad rational '" + s + "'");
        spec.values.push_back(*r);
      }
    }
    return build_finite_quantale(spec);
  }
  if (kind == "catalog") {
    CatalogRequest req;
    req.name = scalar_string(field(j, "name"));
    if (j.contains("params")) {
      if (!j.at("params").is_object()) throw FormatError("params must be an object");
      for (const auto& [k, v] : j.at("params").items()) req.params[k] = scalar_string(v);
    }
    if (j.contains("pieces")) {
      for (const auto& p : j.at("pieces")) {
        OrdinalPiece piece;
        if (p.is_array() && p.size() == 3) {
          piece = {p[0].get<double>(), p[1].get<double>(), tnorm_of(p[2])};
        } else if (p.is_object()) {
          piece = {field(p, "lo").get<double>(), field(p, "hi").get<double>(), tnorm_of(field(p, "kind"))};
        } else {
          throw FormatError("pieces must be [lo, hi, kind] or {lo, hi, kind}");
        }
        req.pieces.push_back(piece);
      }
    }
    return standard_quantale(req);
  }
  throw FormatError("unknown quantale kind '" + kind + "'");
}

FiniteQuantale finite_quantale_from(const json& j, const fs::path& dir) {
  auto r = resolve(field(j, "quantale"), dir, "quantale");
  auto any = quantale_from(r.node);
  if (auto* f = std::get_if<FiniteQuantale>(&any)) return *f;
  throw FormatError("Q-ordered set files need a finite quantale");
}

QOrder qorder_from(const json& j, const fs::path& dir) {
  auto q = finite_quantale_from(j, dir);
  QOrder out = [&]() {
    if (j.contains("standard")) {
      const std::string name = scalar_string(j.at("standard"));
      if (name == "dL") return left_order(q);
      if (name == "dR") return right_order(q);
      if (name == "discrete") return discrete_order(q, field(j, "n").get<std::size_t>());
      if (name == "power") return power_order(q, string_list(field(j, "x"), "x"));
      throw FormatError("unknown standard Q-order '" + name + "'");
    }
    auto labels = string_list(field(j, "elements"), "elements");
    const auto& rows = field(j, "hom");
    if (!rows.is_array() || rows.size() != labels.size()) throw FormatError("hom must have one row per element");
    std::vector<Elem> hom;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != labels.size()) throw FormatError("hom rows must have one entry per element");
      for (const auto& v : row) hom.push_back(element(q, v));
    }
    if (labels.empty()) throw EmptyCarrier();
    return QOrder(q, std::move(labels), std::move(hom));
  }();
  if (j.value("opposite", false)) out = opposite(out);
  return out;
}

FuzzySet values_from(const json& j, const QOrder& base) {
  const auto& vals = field(j, "values");
  FuzzySet phi(base.size());
  if (vals.is_array()) {
    if (vals.size() != base.size()) throw BaseMismatch("fuzzy set has the wrong number of values");
    for (std::size_t i = 0; i < base.size(); ++i) phi[i] = element(base.quantale(), vals[i]);
    return phi;
  }
  if (!vals.is_object()) throw FormatError("values must be an object keyed by label");
  std::vector<bool> seen(base.size(), false);
  for (const auto& [k, v] : vals.items()) {
    auto x = base.find(k);
    if (!x) throw BaseMismatch("base has no element '" + k + "'");
    phi[*x] = element(base.quantale(), v);
    seen[*x] = true;
  }
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!seen[i]) throw BaseMismatch("fuzzy set has no value for '" + base.label(i) + "'");
  return phi;
}

std::vector<std::size_t> points_from(const json& j, const QOrder& base, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& s : string_list(j, what)) {
    auto x = base.find(s);
    if (!x) throw BaseMismatch("base has no element '" + s + "'");
    out.push_back(*x);
  }
  return out;
}

ordered_json quantale_node(const FiniteQuantale& q) {
  ordered_json j;
  j["kind"] = "finite";
  j["name"] = q.name();
  j["elements"] = q.labels();
  ordered_json leq = ordered_json::array(), tensor = ordered_json::array();
  for (Elem a = 0; a < q.size(); ++a) {
    ordered_json lr = ordered_json::array(), tr = ordered_json::array();
    for (Elem b = 0; b < q.size(); ++b) {
      lr.push_back(q.leq(a, b));
      tr.push_back(q.label(q.tensor(a, b)));
    }
    leq.push_back(lr);
    tensor.push_back(tr);
  }
  j["leq"] = leq;
  j["tensor"] = tensor;
  j["unit"] = q.label(q.top());
  if (q.has_values()) {
    ordered_json v = ordered_json::array();
    for (Elem e = 0; e < q.size(); ++e) v.push_back(q.value(e)->to_string());
    j["values"] = v;
  }
  return j;
}

ordered_json qorder_node(const QOrder& a) {
  ordered_json j;
  j["quantale"] = quantale_node(a.quantale());
  j["elements"] = a.labels();
  ordered_json hom = ordered_json::array();
  for (std::size_t x = 0; x < a.size(); ++x) {
    ordered_json row = ordered_json::array();
    for (std::size_t y = 0; y < a.size(); ++y) row.push_back(a.quantale().label(a.hom(x, y)));
    hom.push_back(row);
  }
  j["hom"] = hom;
  return j;
}

}  // namespace

AnyQuantale parse_quantale(std::string_view text, const fs::path&) {
  return quantale_from(parse_text(text, "quantale"));
}

AnyQuantale load_quantale(const fs::path& file) { return quantale_from(parse_text(read_file(file), file.string())); }

QOrder parse_qorder(std::string_view text, const fs::path& base_dir) {
  return qorder_from(parse_text(text, "Q-order"), base_dir);
}

QOrder load_qorder(const fs::path& file) {
  return qorder_from(parse_text(read_file(file), file.string()), file.parent_path());
}

QMap parse_map(std::string_view text, const QOrder& source, const QOrder& target) {
  const auto j = parse_text(text, "map");
  const auto& m = field(j, "mapping");
  if (!m.is_object()) throw FormatError("mapping must be an object");
  QMap f(source.size(), 0);
  std::vector<bool> seen(source.size(), false);
  for (const auto& [k, v] : m.items()) {
    auto x = source.find(k);
    if (!x) throw BaseMismatch("source has no element '" + k + "'");
    auto y = target.find(scalar_string(v));
    if (!y) throw BaseMismatch("target has no element '" + scalar_string(v) + "'");
    f[*x] = *y;
    seen[*x] = true;
  }
  for (std::size_t i = 0; i < source.size(); ++i)
    if (!seen[i]) throw BaseMismatch("map is not total: '" + source.label(i) + "' has no image");
  return f;
}

QMap load_map(const fs::path& file, const QOrder& source, const QOrder& target) {
  return parse_map(read_file(file), source, target);
}

LoadedFuzzySet parse_fuzzy_set(std::string_view text, const fs::path& base_dir) {
  const auto j = parse_text(text, "fuzzy set");
  auto r = resolve(field(j, "base"), base_dir, "base");
  auto base = qorder_from(r.node, r.dir);
  auto values = values_from(j, base);
  return {std::move(base), std::move(values)};
}

LoadedFuzzySet load_fuzzy_set(const fs::path& file) { return parse_fuzzy_set(read_file(file), file.parent_path()); }

FuzzySet load_fuzzy_values(const fs::path& file, const QOrder& base) {
  return values_from(parse_text(read_file(file), file.string()), base);
}

LoadedSequence parse_sequence(std::string_view text, const fs::path& base_dir) {
  const auto j = parse_text(text, "sequence");
  auto r = resolve(field(j, "base"), base_dir, "base");
  auto base = qorder_from(r.node, r.dir);
  EventuallyPeriodicSequence s;
  if (j.contains("prefix")) s.prefix = points_from(j.at("prefix"), base, "prefix");
  s.cycle = points_from(field(j, "cycle"), base, "cycle");
  if (s.cycle.empty()) throw FormatError("cycle must be nonempty");
  return {std::move(base), std::move(s)};
}

LoadedSequence load_sequence(const fs::path& file) { return parse_sequence(read_file(file), file.parent_path()); }

std::string quantale_to_json(const FiniteQuantale& q) { return quantale_node(q).dump(2); }

std::string qorder_to_json(const QOrder& a) { return qorder_node(a).dump(2); }

std::string fuzzy_set_to_json(const QOrder& base, const FuzzySet& phi) {
  require_base(base, phi);
  ordered_json j;
  j["base"] = qorder_node(base);
  ordered_json values = ordered_json::object();
  for (std::size_t x = 0; x < base.size(); ++x) values[base.label(x)] = base.quantale().label(phi[x]);
  j["values"] = values;
  return j.dump(2);
}

std::string map_to_json(const QOrder& source, const QOrder& target, const QMap& f) {
  if (f.size() != source.size()) throw BaseMismatch("map must be total on its source");
  ordered_json m = ordered_json::object();
  for (std::size_t x = 0; x < source.size(); ++x) m[source.label(x)] = target.label(f.at(x));
  ordered_json j;
  j["mapping"] = m;
  return j.dump(2);
}

void write_text(const fs::path& file, const std::string& text) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw FormatError("cannot write " + file.string());
  out << text << '\n';
}

}  // namespace qideal
