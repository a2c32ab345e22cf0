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

#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qideal/completion.hpp"
#include "qideal/fuzzy.hpp"
#include "qideal/generate.hpp"
#include "qideal/ideal.hpp"
#include "qideal/io.hpp"
#include "qideal/scott.hpp"

namespace qideal::harness {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxRecorded = 10;

struct Instance {
  std::string name;
  QOrder order;
};

/// Collects instances and violations for one suite run.
class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& o) : o_(o) {
    r_.suite = std::move(suite);
    r_.seed = o.seed;
    r_.details["violations"] = ordered_json::array();
  }

  void instance(const std::string& name) { r_.instances.push_back(name); }

  /// A theorem check that should never fail.
  void fail(const std::string& where, const std::string& message, const QOrder& base,
            const std::optional<FuzzySet>& witness = std::nullopt) {
    record(Verdict::Fail, where, message, base, witness);
  }

  /// Expected-possible outcome worth reporting (separations, open questions).
  void finding(const std::string& where, const std::string& message, const QOrder& base,
               const std::optional<FuzzySet>& witness = std::nullopt) {
    record(Verdict::Finding, where, message, base, witness);
  }

  /// Failure without a finite witness (interval checks).
  void fail_plain(const std::string& where, const std::string& message) {
    ++count_;
    r_.verdict = Verdict::Fail;
    if (count_ <= kMaxRecorded) r_.details["violations"].push_back({{"instance", where}, {"message", message}});
  }

  ordered_json& details() { return r_.details; }
  std::size_t violations() const { return count_; }

  SuiteResult finish(const std::string& pass_summary) {
    r_.details["violation_count"] = count_;
    if (r_.verdict == Verdict::Pass) {
      r_.summary = pass_summary;
    } else {
      std::ostringstream ss;
      ss << count_ << (r_.verdict == Verdict::Fail ? " violation(s)" : " finding(s)") << " over "
         << r_.instances.size() << " instance(s)";
      r_.summary = ss.str();
    }
    return std::move(r_);
  }

 private:
  void record(Verdict v, const std::string& where, const std::string& message, const QOrder& base,
              const std::optional<FuzzySet>& witness) {
    ++count_;
    if (v == Verdict::Fail || r_.verdict == Verdict::Pass) r_.verdict = v;
    if (count_ > kMaxRecorded) return;
    ordered_json item{{"instance", where}, {"message", message}};
    const std::string stem = r_.suite + "_" + std::to_string(count_);
    const fs::path base_file = o_.witness_dir / (stem + "_base.json");
    write_text(base_file, qorder_to_json(base));
    item["base_file"] = base_file.string();
    r_.witnesses.push_back(base_file.string());
    if (witness) {
      const fs::path file = o_.witness_dir / (stem + ".json");
      write_text(file, fuzzy_set_to_json(base, *witness));
      item["witness_file"] = file.string();
      item["witness"] = fuzzy_label(base.quantale(), *witness);
      r_.witnesses.push_back(file.string());
    }
    r_.details["violations"].push_back(item);
  }

  const SuiteOptions& o_;
  SuiteResult r_;
  std::size_t count_ = 0;
};

std::string param(const SuiteOptions& o, const std::string& key, const std::string& fallback) {
  auto it = o.params.find(key);
  return it == o.params.end() ? fallback : it->second;
}

std::size_t param_size(const SuiteOptions& o, const std::string& key, std::size_t fallback) {
  auto it = o.params.find(key);
  if (it == o.params.end()) return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(it->second));
  } catch (const std::exception&) {
    throw std::invalid_argument("parameter '" + key + "' must be a non-negative integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string hom_tag(const QOrder& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.hom_matrix().size(); ++i) {
    if (i) s += ",";
    s += a.quantale().label(a.hom_matrix()[i]);
  }
  return s + "]";
}

std::string map_tag(const QMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

/// Exhaustive two-point orders and (Q, d_L) over boolean4, L3 and Goedel-4,
/// then `random` seeded three-point orders cycling through the same quantales.
std::vector<Instance> inclusion_instances(const SuiteOptions& o) {
  if (o.params.count("base")) return {{o.params.at("base"), load_qorder(o.params.at("base"))}};
  const std::vector<FiniteQuantale> qs{boolean4(), lukasiewicz_chain(3), godel_chain(4)};
  std::vector<Instance> out;
  for (const auto& q : qs) {
    for (auto& a : all_two_point_orders(q)) out.push_back({q.name() + "/2pt" + hom_tag(a), std::move(a)});
    out.push_back({q.name() + "/dL", left_order(q)});
  }
  std::mt19937_64 rng(o.seed);
  const std::size_t count = param_size(o, "random", 50);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& q = qs[i % qs.size()];
    auto a = random_qorder(q, 3, rng);
    out.push_back({q.name() + "/random3#" + std::to_string(i) + hom_tag(a), std::move(a)});
  }
  return out;
}

/// Two-point discrete and two-point chain bases over L2 and L3.
std::vector<Instance> saturation_instances(const SuiteOptions& o) {
  if (o.params.count("base")) return {{o.params.at("base"), load_qorder(o.params.at("base"))}};
  std::vector<Instance> out;
  for (int n : {2, 3}) {
    auto q = lukasiewicz_chain(n);
    out.push_back({q.name() + "/discrete2", discrete_order(q, 2)});
    out.push_back({q.name() + "/chain2", crisp_order(q, {"x", "y"}, {{true, true}, {false, true}})});
  }
  return out;
}

bool subset(const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b, std::optional<FuzzySet>& missing) {
  for (const auto& x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) {
      missing = x;
      return false;
    }
  return true;
}

enum class Inclusion { FcIrr, FcFlat, IrrFlatPrelinear, FlatIrrDoubleNeg, LinearIrrFc };

SuiteResult class_inclusion(const std::string& suite, Inclusion kind, const SuiteOptions& o) {
  Recorder rec(suite, o);
  std::size_t checked = 0, skipped = 0, ideals = 0;
  for (const auto& inst : inclusion_instances(o)) {
    const auto& q = inst.order.quantale();
    const auto props = quantale_properties(q);
    const bool applies = kind == Inclusion::IrrFlatPrelinear    ? props.is_prelinear
                         : kind == Inclusion::FlatIrrDoubleNeg ? props.has_double_negation
                         : kind == Inclusion::LinearIrrFc      ? q.is_chain()
                                                               : true;
    if (!applies) {
      ++skipped;
      continue;
    }
    rec.instance(inst.name);
    ++checked;
    IdealDecider d(inst.order, o.budget);
    auto fc = d.enumerate(IdealClass::ForwardCauchy);
    auto flat = d.enumerate(IdealClass::Flat);
    auto irr = d.enumerate(IdealClass::Irreducible);
    ideals += flat.size() + irr.size() + fc.size();
    std::optional<FuzzySet> miss;
    auto need = [&](const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b, const char* msg) {
      if (!subset(a, b, miss)) rec.fail(inst.name, msg, inst.order, miss);
    };
    switch (kind) {
      case Inclusion::FcIrr: need(fc, irr, "forward Cauchy ideal is not irreducible"); break;
      case Inclusion::FcFlat: need(fc, flat, "forward Cauchy ideal is not flat"); break;
      case Inclusion::IrrFlatPrelinear: need(irr, flat, "irreducible ideal is not flat"); break;
      case Inclusion::FlatIrrDoubleNeg:
        need(flat, irr, "flat ideal is not irreducible");
        need(irr, flat, "irreducible ideal is not flat");
        break;
      case Inclusion::LinearIrrFc:
        need(irr, fc, "irreducible ideal is not forward Cauchy");
        need(fc, irr, "forward Cauchy ideal is not irreducible");
        break;
    }
  }
  rec.details()["instances_checked"] = checked;
  rec.details()["instances_skipped"] = skipped;
  rec.details()["ideals_compared"] = ideals;
  return rec.finish("inclusion holds on " + std::to_string(checked) + " instance(s)");
}

ordered_json report_json(const QOrder& base, const IdealReport& r) {
  const auto& q = base.quantale();
  ordered_json j{{"lower", r.lower},
                 {"inhabited", r.inhabited},
                 {"flat", r.flat.holds},
                 {"irreducible", r.irreducible.holds},
                 {"forward_cauchy", r.forward_cauchy.holds}};
  if (r.flat.witness)
    j["flat_witness"] = {fuzzy_label(q, r.flat.witness->first), fuzzy_label(q, r.flat.witness->second)};
  if (r.irreducible.witness)
    j["irreducible_witness"] = {fuzzy_label(q, r.irreducible.witness->first),
                                fuzzy_label(q, r.irreducible.witness->second)};
  if (r.forward_cauchy.witness)
    j["forward_cauchy_witness"] = {base.label(r.forward_cauchy.witness->first),
                                   base.label(r.forward_cauchy.witness->second)};
  return j;
}

SuiteResult boolean4_counterexample(const SuiteOptions& o) {
  Recorder rec("BOOLEAN4_COUNTEREXAMPLE", o);
  const auto q = boolean4();
  const auto base = discrete_order(q, 2);
  rec.instance("boolean4/discrete2");
  const FuzzySet phi{q.at("a"), q.at("b")};
  const auto r = classify_ideal(base, phi, o.budget);
  rec.details()["report"] = report_json(base, r);
  if (!(r.inhabited && r.flat.holds && r.irreducible.holds && !r.forward_cauchy.holds))
    rec.fail("boolean4/discrete2", "expected inhabited, flat, irreducible and not forward Cauchy", base, phi);
  return rec.finish("(a,b) is inhabited, flat, irreducible and not forward Cauchy");
}

SuiteResult godel_flat_not_irr(const SuiteOptions& o) {
  Recorder rec("GODEL_FLAT_NOT_IRR", o);
  const int n = static_cast<int>(param_size(o, "n", 5));
  const auto q = godel_chain(n);
  const Elem b = q.at(param(o, "b", "1/2"));
  const Elem a = q.at(param(o, "a", "1/4"));
  const auto base = left_order(q);
  const std::string where = q.name() + "/dL";
  rec.instance(where);
  FuzzySet phi(base.size());
  for (std::size_t x = 0; x < base.size(); ++x) phi[x] = q.join(b, q.residuate(static_cast<Elem>(x), a));
  const auto r = classify_ideal(base, phi, o.budget);
  rec.details()["ideal"] = fuzzy_label(q, phi);
  rec.details()["report"] = report_json(base, r);
  if (!r.flat.holds) rec.fail(where, "ideal is not flat", base, phi);
  if (r.irreducible.holds) rec.fail(where, "ideal is irreducible", base, phi);
  if (r.forward_cauchy.holds) rec.fail(where, "ideal is forward Cauchy", base, phi);
  return rec.finish("b v (x -> a) is flat, not irreducible, not forward Cauchy");
}

// Closed forms of a -> x and of its right limit V_{b>a} (b -> x), written
// out per t-norm as an oracle independent of the library residua.
double principal_form(TNorm t, double a, double x) {
  switch (t) {
    case TNorm::Lukasiewicz: return std::min(1.0, 1.0 - a + x);
    case TNorm::Product: return a <= x ? 1.0 : x / a;
    case TNorm::Minimum: return a <= x ? 1.0 : x;
    default: throw std::invalid_argument("no closed form for this t-norm");
  }
}

double right_limit_form(TNorm t, double a, double x) {
  switch (t) {
    case TNorm::Lukasiewicz: return std::min(1.0, 1.0 - a + x);
    case TNorm::Product:
      if (x > a) return 1.0;
      if (x == a) return a > 0.0 ? 1.0 : 0.0;
      return x / a;
    case TNorm::Minimum: return x > a ? 1.0 : x;
    default: throw std::invalid_argument("no closed form for this t-norm");
  }
}

SuiteResult cor312_families(const SuiteOptions& o) {
  Recorder rec("COR312_FAMILIES", o);
  const auto tnorms = split(param(o, "tnorms", "product,lukasiewicz"), ',');
  const auto grid = param_size(o, "grid", 257);
  ordered_json rows = ordered_json::array();
  for (const auto& name : tnorms) {
    auto t = parse_tnorm(name);
    if (!t || *t == TNorm::OrdinalSum || *t == TNorm::NilpotentMinimum)
      throw std::invalid_argument("COR312_FAMILIES supports minimum, product and lukasiewicz");
    IntervalQuantale q(*t, o.tolerance);
    for (double a : {0.0, 0.25, 0.5, 1.0}) {
      for (auto fam : {LimitFamily::Principal, LimitFamily::RightLimit}) {
        if (fam == LimitFamily::RightLimit && a >= 1.0) continue;
        const bool principal = fam == LimitFamily::Principal;
        const std::string where =
            std::string(to_string(*t)) + (principal ? "/a->x" : "/lim b>a (b->x)") + " a=" + std::to_string(a);
        rec.instance(where);
        auto rep = check_sequence_ideal(
            q, family_sequence(fam, a),
            [&](double x) { return principal ? principal_form(*t, a, x) : right_limit_form(*t, a, x); }, grid);
        rows.push_back({{"instance", where},
                        {"forward_cauchy", rep.forward_cauchy},
                        {"lower", rep.lower},
                        {"max_deviation", rep.max_deviation}});
        if (!rep.forward_cauchy) rec.fail_plain(where, "generating sequence is not forward Cauchy");
        if (!rep.lower) rec.fail_plain(where, "generated fuzzy set is not a lower set on the grid");
        if (!rep.matches)
          rec.fail_plain(where, "generated ideal deviates from the closed form by " + std::to_string(rep.max_deviation));
      }
    }
  }
  rec.details()["members"] = rows;
  rec.details()["note"] = "checked on grid";
  return rec.finish("both families are generated by forward Cauchy sequences (checked on grid)");
}

SuiteResult saturation(const std::string& suite, IdealClass cls, const SuiteOptions& o) {
  Recorder rec(suite, o);
  ordered_json rows = ordered_json::array();
  for (const auto& inst : saturation_instances(o)) {
    rec.instance(inst.name);
    auto s = check_saturation(inst.order, cls, o.budget);
    rows.push_back({{"instance", inst.name},
                    {"ideals", s.ideal_count},
                    {"second_level", s.second_level_count},
                    {"saturated", s.saturated}});
    if (!s.saturated) {
      rec.fail(inst.name, "weighted join leaves the class", inst.order, s.violator_join);
    }
  }
  rec.details()["instances"] = rows;
  return rec.finish(std::string(to_string(cls)) + " class is saturated on every instance");
}

SuiteResult thm42_free(const SuiteOptions& o) {
  Recorder rec("THM42_FREE", o);
  const auto cls = parse_ideal_class(param(o, "class", "flat"));
  if (!cls || *cls == IdealClass::AllLower) throw std::invalid_argument("class must be fc, flat or irr");
  ordered_json rows = ordered_json::array();
  for (const auto& inst : saturation_instances(o)) {
    rec.instance(inst.name);
    auto f = check_free_continuity(inst.order, *cls, o.budget);
    rows.push_back({{"instance", inst.name},
                    {"ideals", f.ideal_count},
                    {"second_level", f.second_level_count},
                    {"complete", f.continuity.complete},
                    {"continuous", f.continuity.continuous},
                    {"adjoint_is_yoneda_image", f.adjoint_matches_yoneda_image},
                    {"sup_formula", f.sup_formula_holds}});
    if (!f.continuity.complete) rec.fail(inst.name, "ideal space is not complete", inst.order);
    else if (!f.continuity.continuous) rec.fail(inst.name, "sup has no left adjoint", inst.order);
    else if (!f.adjoint_matches_yoneda_image)
      rec.fail(inst.name, "left adjoint differs from the Yoneda image", inst.order, f.mismatch);
    if (f.continuity.complete && !f.sup_formula_holds)
      rec.fail(inst.name, "sup L differs from L o y", inst.order);
  }
  rec.details()["instances"] = rows;
  return rec.finish("Phi(A) is complete and continuous with left adjoint y-> on every instance");
}

SuiteResult scott_axioms(const SuiteOptions& o) {
  Recorder rec("SCOTT_AXIOMS", o);
  std::size_t opens = 0, closeds = 0;
  for (const auto& inst : inclusion_instances(o)) {
    rec.instance(inst.name);
    auto top = generate_scott_structure(inst.order, IdealClass::Flat, ScottMode::Topology, o.budget);
    auto cot = generate_scott_structure(inst.order, IdealClass::Irreducible, ScottMode::Cotopology, o.budget);
    opens += top.members.size();
    closeds += cot.members.size();
    for (int i = 0; i < 4; ++i) {
      if (!top.axioms.axioms[i].holds)
        rec.fail(inst.name, "topology fails O" + std::to_string(i + 1), inst.order,
                 top.axioms.axioms[i].witness.empty() ? std::nullopt : std::optional(top.axioms.axioms[i].witness[0]));
      if (!cot.axioms.axioms[i].holds)
        rec.fail(inst.name, "cotopology fails C" + std::to_string(i + 1), inst.order,
                 cot.axioms.axioms[i].witness.empty() ? std::nullopt : std::optional(cot.axioms.axioms[i].witness[0]));
    }
  }
  rec.details()["open_sets"] = opens;
  rec.details()["closed_sets"] = closeds;
  return rec.finish("O1-O4 (flat) and C1-C4 (irreducible) hold on every instance");
}

SuiteResult prop57_equiv(const SuiteOptions& o) {
  Recorder rec("PROP57_EQUIV", o);
  const auto q = lukasiewicz_chain(3);
  const std::vector<Instance> orders{{"L3/dL", left_order(q)}, {"L3/dR", right_order(q)}};
  std::size_t maps = 0, cocontinuous = 0;
  ordered_json rows = ordered_json::array();
  for (auto cls : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible}) {
    for (const auto& src : orders)
      for (const auto& tgt : orders) {
        const std::string where = std::string(to_string(cls)) + " " + src.name + " -> " + tgt.name;
        rec.instance(where);
        MapChecker checker(src.order, tgt.order, cls, o.budget);
        std::size_t local = 0;
        for (const auto& f : all_maps(src.order.size(), tgt.order.size(), o.budget)) {
          ++maps;
          auto rep = checker.cocontinuity(f);
          if (rep.cocontinuous) ++cocontinuous, ++local;
          if (!rep.agree())
            rec.fail(where, "cocontinuity and closed preimages disagree for map " + map_tag(f),
                     tgt.order, rep.closed_witness);
          if (cls == IdealClass::Flat && rep.cocontinuous && !checker.continuity(f).continuous)
            rec.fail(where, "cocontinuous map is not continuous for the generated topologies", tgt.order);
        }
        rows.push_back({{"sweep", where}, {"cocontinuous_maps", local}});
      }
  }
  rec.details()["sweeps"] = rows;
  rec.details()["maps"] = maps;
  rec.details()["cocontinuous"] = cocontinuous;
  return rec.finish("cocontinuity agrees with closed preimages on all " + std::to_string(maps) + " maps");
}

SuiteResult ex58_characterization(const SuiteOptions& o) {
  Recorder rec("EX58_CHARACTERIZATION", o);
  const auto grid = param_size(o, "grid", 257);
  ordered_json rows = ordered_json::array();
  for (const auto& name : split(param(o, "tnorms", "lukasiewicz,product,minimum"), ',')) {
    auto t = parse_tnorm(name);
    if (!t || *t == TNorm::OrdinalSum) throw std::invalid_argument("EX58_CHARACTERIZATION needs catalog t-norms");
    IntervalQuantale q(*t, o.tolerance);
    struct Case {
      std::string name;
      UnitFunction f;
      bool expected;
    };
    const std::vector<Case> cases{
        {"id", [](double x) { return x; }, true},
        {"min(1,x+1/4)", [](double x) { return std::min(1.0, x + 0.25); }, true},
        {"step(1/2 | 1 above 1/2)", [](double x) { return x <= 0.5 ? 0.5 : 1.0; }, false},
    };
    for (const auto& c : cases) {
      const std::string where = std::string(to_string(*t)) + " " + c.name;
      rec.instance(where);
      auto r = interval_dR_scott_closed(q, c.f, grid);
      rows.push_back({{"instance", where},
                      {"closed", r.closed},
                      {"order_preserving", r.order_preserving},
                      {"right_continuous", r.right_continuous}});
      if (r.closed != c.expected)
        rec.fail_plain(where, c.expected ? "expected Scott closed" : "expected not Scott closed");
      if (!c.expected && r.right_continuous) rec.fail_plain(where, "right-continuity probe missed the jump");
    }
  }
  rec.details()["cases"] = rows;
  rec.details()["note"] = "checked on grid";
  return rec.finish("accepts id and min(1,x+1/4), rejects the step (checked on grid)");
}

SuiteResult ex510_generation(const SuiteOptions& o) {
  Recorder rec("EX510_GENERATION", o);
  const auto grid = param_size(o, "grid", 257);
  struct Case {
    std::string name;
    IntervalQuantale q;
    UnitFunction f;
  };
  const std::vector<Case> cases{
      {"lukasiewicz min(1,x+1/4)", IntervalQuantale(TNorm::Lukasiewicz, o.tolerance),
       [](double x) { return std::min(1.0, x + 0.25); }},
      {"minimum id", IntervalQuantale(TNorm::Minimum, o.tolerance), [](double x) { return x; }},
      {"product id", IntervalQuantale(TNorm::Product, o.tolerance), [](double x) { return x; }},
      {"lukasiewicz const 1", IntervalQuantale(TNorm::Lukasiewicz, o.tolerance), [](double) { return 1.0; }},
      {"ordinal_sum[(0,1/2,L),(1/2,1,P)] min(1,x+1/8)",
       IntervalQuantale::ordinal_sum({{0.0, 0.5, TNorm::Lukasiewicz}, {0.5, 1.0, TNorm::Product}}, o.tolerance),
       [](double x) { return std::min(1.0, x + 0.125); }},
  };
  ordered_json rows = ordered_json::array();
  for (const auto& c : cases) {
    rec.instance(c.name);
    auto r = verify_ordinal_sum_generation(c.q, c.f, grid);
    rows.push_back({{"instance", c.name},
                    {"max_deviation", r.max_deviation},
                    {"worst_point", r.worst_point},
                    {"cases", {r.case_counts[0], r.case_counts[1], r.case_counts[2]}}});
    if (!r.within_tolerance)
      rec.fail_plain(c.name, "infimum of g_x deviates by " + std::to_string(r.max_deviation));
  }
  rec.details()["cases"] = rows;
  rec.details()["note"] = "checked on grid with right probes";
  return rec.finish("phi = inf g_x within tolerance on every case (checked on grid)");
}

SuiteResult classical_degeneration(const SuiteOptions& o) {
  Recorder rec("CLASSICAL_DEGENERATION", o);
  const auto q = boolean2();
  const auto max_points = param_size(o, "points", 4);
  std::size_t posets = 0;
  for (std::size_t n = 1; n <= max_points; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    for (const auto& rel : labeled_posets(n)) {
      ++posets;
      const auto a = crisp_order(q, labels, rel);
      const std::string where = std::to_string(n) + "pt" + hom_tag(a);
      rec.instance(where);
      // Classical ideals of a finite poset are the principal down-sets.
      std::vector<FuzzySet> classical;
      for (std::size_t x = 0; x < n; ++x) classical.push_back(principal(a, x));
      std::sort(classical.begin(), classical.end());
      classical.erase(std::unique(classical.begin(), classical.end()), classical.end());
      IdealDecider d(a, o.budget);
      for (auto cls : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible}) {
        auto got = d.enumerate(cls);
        if (got != classical) {
          std::optional<FuzzySet> w;
          if (!subset(got, classical, w)) subset(classical, got, w);
          rec.fail(where, std::string(to_string(cls)) + " ideals differ from the classical ideals", a, w);
        }
      }
      // Scott opens are the up-sets and Scott closed sets the down-sets.
      auto ups = enumerate_monotone_sets(a, SetKind::Upper, o.budget);
      auto downs = enumerate_monotone_sets(a, SetKind::Lower, o.budget);
      ScottContext ctx(a, IdealClass::Flat, o.budget);
      if (ctx.members(ScottMode::Topology) != ups) rec.fail(where, "Scott opens differ from the up-sets", a);
      ScottContext ctx_irr(a, IdealClass::Irreducible, o.budget);
      if (ctx_irr.members(ScottMode::Cotopology) != downs)
        rec.fail(where, "Scott closed sets differ from the down-sets", a);
    }
  }
  rec.details()["posets"] = posets;
  return rec.finish("all classes equal the classical ideals on " + std::to_string(posets) + " posets");
}

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"FC_SUBSET_IRR", [](const SuiteOptions& o) { return class_inclusion("FC_SUBSET_IRR", Inclusion::FcIrr, o); }},
      {"FC_SUBSET_FLAT", [](const SuiteOptions& o) { return class_inclusion("FC_SUBSET_FLAT", Inclusion::FcFlat, o); }},
      {"IRR_SUBSET_FLAT_PRELINEAR",
       [](const SuiteOptions& o) {
         return class_inclusion("IRR_SUBSET_FLAT_PRELINEAR", Inclusion::IrrFlatPrelinear, o);
       }},
      {"FLAT_EQ_IRR_DOUBLENEG",
       [](const SuiteOptions& o) { return class_inclusion("FLAT_EQ_IRR_DOUBLENEG", Inclusion::FlatIrrDoubleNeg, o); }},
      {"LINEAR_IRR_EQ_FC",
       [](const SuiteOptions& o) { return class_inclusion("LINEAR_IRR_EQ_FC", Inclusion::LinearIrrFc, o); }},
      {"BOOLEAN4_COUNTEREXAMPLE", boolean4_counterexample},
      {"GODEL_FLAT_NOT_IRR", godel_flat_not_irr},
      {"COR312_FAMILIES", cor312_families},
      {"SATURATION_FC", [](const SuiteOptions& o) { return saturation("SATURATION_FC", IdealClass::ForwardCauchy, o); }},
      {"SATURATION_FLAT", [](const SuiteOptions& o) { return saturation("SATURATION_FLAT", IdealClass::Flat, o); }},
      {"SATURATION_IRR", [](const SuiteOptions& o) { return saturation("SATURATION_IRR", IdealClass::Irreducible, o); }},
      {"THM42_FREE", thm42_free},
      {"SCOTT_AXIOMS", scott_axioms},
      {"PROP57_EQUIV", prop57_equiv},
      {"EX58_CHARACTERIZATION", ex58_characterization},
      {"EX510_GENERATION", ex510_generation},
      {"CLASSICAL_DEGENERATION", classical_degeneration},
  };
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Finding: return "finding";
    case Verdict::Budget: return "budget";
  }
  return "?";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail:
    case Verdict::Finding: return 1;
    case Verdict::Budget: return 2;
  }
  return 2;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) throw UnknownSuite(std::string(name));
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = it->second(options);
  } catch (const BudgetExceeded& e) {
    r.suite = std::string(name);
    r.seed = options.seed;
    r.verdict = Verdict::Budget;
    r.summary = e.what();
    r.details = {{"required", e.required()}, {"budget", e.budget()}};
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteResult search_counterexample(const std::map<std::string, std::string>& shape, const SuiteOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  auto get = [&](const std::string& k, const std::string& d) {
    auto it = shape.find(k);
    return it == shape.end() ? d : it->second;
  };
  CatalogRequest req;
  req.name = get("quantale", "godel_chain");
  if (req.name.find("chain") != std::string::npos) req.params["n"] = get("n", "4");
  auto any = standard_quantale(req);
  auto* qp = std::get_if<FiniteQuantale>(&any);
  if (!qp) throw std::invalid_argument("search needs a finite quantale");
  const FiniteQuantale q = *qp;
  const std::size_t points = std::stoul(get("points", "3"));
  const std::size_t count = std::stoul(get("count", "100"));
  const bool exhaustive = get("exhaustive", points <= 2 ? "1" : "0") == "1";

  Recorder rec("SEARCH", options);
  SuiteResult out;
  try {
    std::vector<Instance> instances;
    if (exhaustive && points == 2) {
      for (auto& a : all_two_point_orders(q)) instances.push_back({q.name() + "/2pt" + hom_tag(a), std::move(a)});
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < count; ++i) {
      auto a = random_qorder(q, points, rng);
      instances.push_back({q.name() + "/random" + std::to_string(points) + "#" + std::to_string(i) + hom_tag(a),
                           std::move(a)});
    }
    std::map<std::string, std::size_t> tally;
    for (const auto& inst : instances) {
      rec.instance(inst.name);
      IdealDecider d(inst.order, options.budget);
      auto fc = d.enumerate(IdealClass::ForwardCauchy);
      auto flat = d.enumerate(IdealClass::Flat);
      auto irr = d.enumerate(IdealClass::Irreducible);
      std::optional<FuzzySet> w;
      // Theorem violations are failures; separations are findings.
      if (!subset(fc, irr, w)) rec.fail(inst.name, "forward Cauchy but not irreducible", inst.order, w);
      if (!subset(fc, flat, w)) rec.fail(inst.name, "forward Cauchy but not flat", inst.order, w);
      const auto props = quantale_properties(q);
      if (props.is_prelinear && !subset(irr, flat, w))
        rec.fail(inst.name, "irreducible but not flat on a prelinear quantale", inst.order, w);
      auto separate = [&](const std::vector<FuzzySet>& a, const std::vector<FuzzySet>& b, const std::string& what) {
        std::optional<FuzzySet> s;
        if (!subset(a, b, s)) {
          ++tally[what];
          if (tally[what] == 1) rec.finding(inst.name, what, inst.order, s);
        }
      };
      separate(flat, irr, "flat but not irreducible");
      separate(irr, flat, "irreducible but not flat");
      separate(irr, fc, "irreducible but not forward Cauchy");
      separate(flat, fc, "flat but not forward Cauchy");
    }
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : tally) t[k] = v;
    rec.details()["separations"] = t;
    rec.details()["shape"] = shape;
    out = rec.finish("no separation or violation found");
  } catch (const BudgetExceeded& e) {
    out.suite = "SEARCH";
    out.seed = options.seed;
    out.verdict = Verdict::Budget;
    out.summary = e.what();
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(std::string(text), ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

ordered_json to_json(const SuiteResult& r) {
  return {{"suite", r.suite},     {"verdict", to_string(r.verdict)}, {"summary", r.summary},
          {"seed", r.seed},       {"instances", r.instances.size()}, {"witnesses", r.witnesses},
          {"details", r.details}};
}

}  // namespace qideal::harness
