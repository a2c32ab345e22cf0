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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "harness/suites.hpp"
#include "json.hpp"
#include "qideal/completion.hpp"
#include "qideal/ideal.hpp"
#include "qideal/io.hpp"
#include "qideal/scott.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qideal;
namespace h = qideal::harness;

constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  double tolerance = 1e-9;
  bool json_only = false;
};

void emit(const Globals& g, const std::string& summary, const ordered_json& report) {
  if (!g.json_only) std::cout << summary << "\n";
  std::cout << report.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json set_json(const QOrder& a, const FuzzySet& phi) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < a.size(); ++i) j[a.label(i)] = a.quantale().label(phi[i]);
  return j;
}

int cmd_validate(const Globals& g, const std::string& file, std::string kind) {
  const auto text = read_file(file);
  if (kind == "auto") {
    auto j = ordered_json::parse(text);
    if (j.contains("values")) kind = "fuzzy";
    else if (j.contains("cycle")) kind = "sequence";
    else if (j.contains("hom") || j.contains("standard")) kind = "qorder";
    else kind = "quantale";
  }
  ordered_json r{{"file", file}, {"kind", kind}, {"valid", true}};
  const std::filesystem::path dir = std::filesystem::path(file).parent_path();
  if (kind == "quantale") {
    auto q = parse_quantale(text, dir);
    if (auto* f = std::get_if<FiniteQuantale>(&q)) {
      r["name"] = f->name();
      r["elements"] = f->size();
      auto p = quantale_properties(*f);
      r["properties"] = {{"chain", f->is_chain()},
                         {"frame", f->is_frame()},
                         {"prelinear", p.is_prelinear},
                         {"divisible", p.is_divisible},
                         {"double_negation", p.has_double_negation}};
    } else {
      auto& iq = std::get<IntervalQuantale>(q);
      r["name"] = iq.name();
      r["continuous"] = iq.is_continuous();
    }
  } else if (kind == "qorder") {
    auto a = parse_qorder(text, dir);
    r["quantale"] = a.quantale().name();
    r["points"] = a.size();
    r["separated"] = is_separated(a);
    if (auto v = validate_qorder(a)) {
      const bool refl = v->kind == OrderViolation<Elem>::Kind::Reflexivity;
      r["valid"] = false;
      r["violation"] = {{"law", refl ? "reflexivity" : "transitivity"},
                        {"points", refl ? ordered_json::array({a.label(v->x)})
                                        : ordered_json::array({a.label(v->x), a.label(v->y), a.label(v->z)})}};
      emit(g, "invalid qorder: " + file, r);
      return 1;
    }
  } else if (kind == "fuzzy") {
    auto s = parse_fuzzy_set(text, dir);
    r["points"] = s.base.size();
    const auto c = classify_fuzzy_set(s.base, s.values);
    r["set"] = set_json(s.base, s.values);
    r["lower"] = c.lower;
    r["upper"] = c.upper;
    r["inhabited"] = c.inhabited;
  } else if (kind == "sequence") {
    auto s = parse_sequence(text, dir);
    auto phi = ideal_from_sequence(s.base, s.sequence);
    r["ideal"] = set_json(s.base, phi);
  } else {
    throw CLI::ValidationError("--kind", "unknown kind '" + kind + "'");
  }
  emit(g, "valid " + kind + ": " + file, r);
  return 0;
}

ordered_json classify_json(const QOrder& a, const IdealReport& r) {
  auto pair = [&](const std::optional<std::pair<FuzzySet, FuzzySet>>& w) -> ordered_json {
    if (!w) return nullptr;
    return ordered_json::array({set_json(a, w->first), set_json(a, w->second)});
  };
  ordered_json j{{"lower", r.lower},
                 {"inhabited", r.inhabited},
                 {"flat", {{"holds", r.flat.holds}, {"reason", r.flat.reason}, {"witness", pair(r.flat.witness)}}},
                 {"irreducible",
                  {{"holds", r.irreducible.holds},
                   {"reason", r.irreducible.reason},
                   {"witness", pair(r.irreducible.witness)}}},
                 {"forward_cauchy", {{"holds", r.forward_cauchy.holds}, {"reason", r.forward_cauchy.reason}}}};
  if (r.forward_cauchy.witness)
    j["forward_cauchy"]["witness"] = {a.label(r.forward_cauchy.witness->first),
                                      a.label(r.forward_cauchy.witness->second)};
  return j;
}

int cmd_classify(const Globals& g, const std::string& order_file, const std::string& set_file) {
  const auto a = load_qorder(order_file);
  const auto phi = load_fuzzy_values(set_file, a);
  const auto r = classify_ideal(a, phi, g.budget);
  std::ostringstream s;
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  s << fuzzy_label(a.quantale(), phi) << ": inhabited " << mark(r.inhabited) << ", flat " << mark(r.flat.holds)
    << ", irreducible " << mark(r.irreducible.holds) << ", forward Cauchy " << mark(r.forward_cauchy.holds);
  ordered_json j{{"set", set_json(a, phi)}, {"report", classify_json(a, r)}};
  emit(g, s.str(), j);
  return 0;
}

IdealClass class_of(const std::string& s) {
  auto c = parse_ideal_class(s);
  if (!c) throw CLI::ValidationError("--class", "expected fc, flat, irr or all");
  return *c;
}

int cmd_enumerate(const Globals& g, const std::string& order_file, const std::string& cls) {
  const auto a = load_qorder(order_file);
  const auto c = class_of(cls);
  const auto ideals = enumerate_ideals(a, c, g.budget);
  ordered_json list = ordered_json::array();
  for (const auto& phi : ideals) list.push_back(set_json(a, phi));
  emit(g, std::to_string(ideals.size()) + " " + std::string(to_string(c)) + " ideal(s)",
       {{"class", to_string(c)}, {"count", ideals.size()}, {"ideals", list}});
  return 0;
}

int cmd_scott(const Globals& g, const std::string& order_file, const std::string& cls, const std::string& mode_name,
              const std::string& dump) {
  const auto a = load_qorder(order_file);
  const auto c = class_of(cls);
  const auto mode = parse_scott_mode(mode_name);
  if (!mode) throw CLI::ValidationError("--mode", "expected top or cotop");
  const auto s = generate_scott_structure(a, c, *mode, g.budget);
  ordered_json members = ordered_json::array();
  for (const auto& m : s.members) members.push_back(set_json(a, m));
  ordered_json axioms = ordered_json::array();
  const char prefix = *mode == ScottMode::Topology ? 'O' : 'C';
  for (std::size_t i = 0; i < 5; ++i) {
    ordered_json ax{{"axiom", std::string(1, prefix) + std::to_string(i + 1)}, {"holds", s.axioms.axioms[i].holds}};
    if (!s.axioms.axioms[i].witness.empty()) {
      ordered_json w = ordered_json::array();
      for (const auto& m : s.axioms.axioms[i].witness) w.push_back(set_json(a, m));
      ax["witness"] = w;
    }
    axioms.push_back(ax);
  }
  ordered_json j{{"class", to_string(c)},
                 {"mode", to_string(*mode)},
                 {"count", s.members.size()},
                 {"stratified", s.axioms.stratified()},
                 {"strong", s.axioms.strong()},
                 {"axioms", axioms},
                 {"members", members}};
  if (!dump.empty()) write_text(dump, j.dump(2) + "\n");
  emit(g,
       std::to_string(s.members.size()) + " member(s), stratified " + (s.axioms.stratified() ? "yes" : "no") +
           ", strong " + (s.axioms.strong() ? "yes" : "no"),
       j);
  return 0;
}

h::SuiteOptions options_of(const Globals& g) {
  h::SuiteOptions o;
  o.seed = g.seed;
  o.budget = g.budget;
  o.tolerance = g.tolerance;
  return o;
}

int report(const Globals& g, const h::SuiteResult& r) {
  std::ostringstream s;
  s << r.suite << ": " << to_string(r.verdict) << " - " << r.summary;
  if (!r.witnesses.empty()) s << " (witnesses: " << r.witnesses.front() << ", ...)";
  emit(g, s.str(), h::to_json(r));
  return h::exit_code(r.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qideal: quantale-valued orders, ideals and Scott structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "64-bit seed for generated instances")->capture_default_str();
  app.add_option("--budget", g.budget, "work budget for exhaustive enumerations")->capture_default_str();
  app.add_option("--tolerance", g.tolerance, "interval comparison tolerance")->capture_default_str();
  app.add_flag("--json", g.json_only, "print only the JSON report");

  std::string file, order_file, set_file, cls = "flat", mode = "top", dump, kind = "auto", suite, shape;
  std::vector<std::string> params;
  std::string witness_dir = "qideal-witnesses";

  auto* validate = app.add_subcommand("validate", "load and check an instance file");
  validate->add_option("file", file)->required();
  validate->add_option("--kind", kind, "quantale, qorder, fuzzy, sequence or auto")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify a fuzzy set on a Q-order");
  classify->add_option("qorder", order_file)->required();
  classify->add_option("fuzzyset", set_file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list all ideals of a class");
  enumerate->add_option("qorder", order_file)->required();
  enumerate->add_option("--class", cls, "fc, flat, irr or all")->capture_default_str();

  auto* scott = app.add_subcommand("scott", "generate the Scott (co)topology");
  scott->add_option("qorder", order_file)->required();
  scott->add_option("--class", cls, "fc, flat or irr")->capture_default_str();
  scott->add_option("--mode", mode, "top or cotop")->capture_default_str();
  scott->add_option("--dump", dump, "write the structure to this file");

  auto* check = app.add_subcommand("check", "run a named theorem suite");
  check->add_option("suite", suite, "suite name, or 'list'")->required();
  check->add_option("--param", params, "k=v suite parameter")->take_all();
  check->add_option("--witness-dir", witness_dir)->capture_default_str();

  auto* search = app.add_subcommand("search-counterexample", "seeded search for ideal-class separations");
  search->add_option("--shape", shape, "quantale=NAME,n=N,points=P,count=C,exhaustive=0|1")->required();
  search->add_option("--witness-dir", witness_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) return cmd_validate(g, file, kind);
    if (*classify) return cmd_classify(g, order_file, set_file);
    if (*enumerate) return cmd_enumerate(g, order_file, cls);
    if (*scott) return cmd_scott(g, order_file, cls, mode, dump);
    if (*check) {
      if (suite == "list") {
        for (const auto& n : h::suite_names()) std::cout << n << "\n";
        return 0;
      }
      auto o = options_of(g);
      o.witness_dir = witness_dir;
      for (const auto& p : params) {
        auto kv = h::parse_key_values(p);
        o.params.insert(kv.begin(), kv.end());
      }
      return report(g, h::run_suite(suite, o));
    }
    if (*search) {
      auto o = options_of(g);
      o.witness_dir = witness_dir;
      return report(g, h::search_counterexample(h::parse_key_values(shape), o));
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
