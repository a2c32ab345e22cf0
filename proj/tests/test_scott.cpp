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

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qideal/generate.hpp"
#include "qideal/scott.hpp"

using namespace qideal;

namespace {

QOrder crisp_chain2() { return crisp_order(boolean2(), {"x", "y"}, {{true, true}, {false, true}}); }

// Membership straight from the defining equations, with suprema found by
// scanning the carrier.
bool open_oracle(const QOrder& a, const FuzzySet& psi, IdealClass cls) {
  const auto& q = a.quantale();
  if (!oracle::upper(a, psi)) return false;
  for (const auto& phi : enumerate_ideals(a, cls))
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool is_sup = true;
      for (std::size_t x = 0; x < a.size(); ++x) is_sup &= a.hom(s, x) == oracle::sub(q, phi, principal(a, x));
      if (is_sup && psi[s] != oracle::tensor(q, phi, psi)) return false;
    }
  return true;
}

bool closed_oracle(const QOrder& a, const FuzzySet& lam, IdealClass cls) {
  const auto& q = a.quantale();
  if (!oracle::lower(a, lam)) return false;
  for (const auto& phi : enumerate_ideals(a, cls))
    for (std::size_t s = 0; s < a.size(); ++s) {
      bool is_sup = true;
      for (std::size_t x = 0; x < a.size(); ++x) is_sup &= a.hom(s, x) == oracle::sub(q, phi, principal(a, x));
      if (is_sup && lam[s] != oracle::sub(q, phi, lam)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("constants are open and closed") {
  const auto a = left_order(lukasiewicz_chain(4));
  for (Elem p : a.quantale().elements()) {
    const auto c = constant_set(a, p);
    for (auto cls : {IdealClass::Flat, IdealClass::Irreducible}) {
      CHECK(is_scott_member(a, c, cls, ScottMode::Topology).member);
      CHECK(is_scott_member(a, c, cls, ScottMode::Cotopology).member);
    }
  }
}

TEST_CASE("identity on (L4, d_L) is open") {
  const auto q = lukasiewicz_chain(4);
  const auto a = left_order(q);
  FuzzySet id(q.size());
  for (Elem p : q.elements()) id[p] = p;
  CHECK(is_scott_member(a, id, IdealClass::Flat, ScottMode::Topology).member);
}

TEST_CASE("membership agrees with the defining equations") {
  std::mt19937_64 rng(3);
  std::vector<QOrder> bases{left_order(lukasiewicz_chain(3)), right_order(godel_chain(3)),
                            discrete_order(boolean4(), 2)};
  for (int i = 0; i < 8; ++i) bases.push_back(random_qorder(i % 2 ? boolean4() : lukasiewicz_chain(3), 3, rng));
  for (const auto& a : bases)
    for (auto cls : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible}) {
      ScottContext ctx(a, cls);
      for (const auto& psi : enumerate_all_sets(a)) {
        CHECK(ctx.member(psi, ScottMode::Topology).member == open_oracle(a, psi, cls));
        CHECK(ctx.member(psi, ScottMode::Cotopology).member == closed_oracle(a, psi, cls));
      }
    }
}

TEST_CASE("classical Scott structures on a crisp two-chain") {
  const auto a = crisp_chain2();
  const auto& q = a.quantale();
  const auto top = generate_scott_structure(a, IdealClass::Flat, ScottMode::Topology);
  const Elem B = q.bottom(), T = q.top();
  CHECK(top.members == std::vector<FuzzySet>{{B, B}, {B, T}, {T, T}});
  const auto cot = generate_scott_structure(a, IdealClass::Irreducible, ScottMode::Cotopology);
  CHECK(cot.members == enumerate_monotone_sets(a, SetKind::Lower));
}

TEST_CASE("cotopology axioms on the discrete L3 base") {
  const auto s = generate_scott_structure(discrete_order(lukasiewicz_chain(3), 2), IdealClass::Irreducible,
                                          ScottMode::Cotopology);
  for (int i = 0; i < 4; ++i) CHECK(s.axioms.axioms[i].holds);
  CHECK(s.axioms.stratified());
}

TEST_CASE("lukasiewicz chain cotopologies are strong") {
  for (int n = 2; n <= 5; ++n) {
    const auto s = generate_scott_structure(left_order(lukasiewicz_chain(n)), IdealClass::Irreducible,
                                            ScottMode::Cotopology);
    CHECK(s.axioms.strong());
  }
}

TEST_CASE("axiom checker detects missing constants and joins") {
  const auto a = discrete_order(boolean2(), 2);
  const auto& q = a.quantale();
  const Elem B = q.bottom(), T = q.top();
  const std::vector<FuzzySet> members{{B, B}, {T, B}, {B, T}, {T, T}};
  CHECK(check_structure_axioms(a, ScottMode::Topology, members).stratified());
  const std::vector<FuzzySet> chain_only{{B, B}, {T, T}, {T, B}};
  const std::vector<FuzzySet> no_join{{B, B}, {T, B}, {B, T}};
  const auto r = check_structure_axioms(a, ScottMode::Topology, no_join);
  CHECK_FALSE(r.axioms[0].holds);
  CHECK_FALSE(r.axioms[2].holds);
  CHECK(check_structure_axioms(a, ScottMode::Topology, chain_only).axioms[1].holds);
}

TEST_CASE("negation duality under double negation") {
  const auto d = check_negation_duality(left_order(boolean4()), IdealClass::Flat, IdealClass::Irreducible);
  CHECK(d.holds);
  CHECK(d.open_count == d.closed_count);
  for (int n = 2; n <= 5; ++n) {
    const auto q = nilpotent_minimum_chain(n);
    CHECK(check_negation_duality(left_order(q), IdealClass::Flat, IdealClass::Irreducible).holds);
    CHECK(check_negation_duality(discrete_order(q, 2), IdealClass::Flat, IdealClass::Irreducible).holds);
  }
}

TEST_CASE("identity and constant maps are cocontinuous") {
  const auto q = lukasiewicz_chain(3);
  const auto a = left_order(q);
  auto id = cocontinuity_equivalence(a, a, {0, 1, 2}, IdealClass::Flat);
  CHECK(id.cocontinuous);
  CHECK(id.closed_preimage);
  auto c = cocontinuity_equivalence(a, a, {2, 2, 2}, IdealClass::Irreducible);
  CHECK(c.agree());
}

TEST_CASE("all maps between 3-point orders over L3") {
  const auto q = lukasiewicz_chain(3);
  const auto maps = all_maps(3, 3);
  CHECK(maps.size() == 27);
  for (const auto& src : {left_order(q), right_order(q)})
    for (const auto& tgt : {left_order(q), right_order(q)}) {
      MapChecker m(src, tgt, IdealClass::Irreducible);
      for (const auto& f : maps) CHECK(m.cocontinuity(f).agree());
    }
  CHECK_THROWS_AS(all_maps(10, 10, 1000), BudgetExceeded);
}

TEST_CASE("interval closed-set characterization") {
  for (auto t : {TNorm::Lukasiewicz, TNorm::Product, TNorm::Minimum}) {
    const IntervalQuantale q(t);
    CHECK(interval_dR_scott_closed(q, [](double x) { return x; }).closed);
    const auto step = interval_dR_scott_closed(q, [](double x) { return x <= 0.5 ? 0.5 : 1.0; });
    CHECK_FALSE(step.closed);
    CHECK_FALSE(step.right_continuous);
    REQUIRE(step.continuity_witness.has_value());
    CHECK(*step.continuity_witness == doctest::Approx(0.5));
  }
  const IntervalQuantale luk(TNorm::Lukasiewicz);
  CHECK(interval_dR_scott_closed(luk, [](double x) { return std::min(1.0, x + 0.25); }).closed);
  CHECK_THROWS_AS(interval_dR_scott_closed(luk, [](double x) { return x; }, 9), GridTooCoarse);
}

TEST_CASE("generation from the ordinal decomposition") {
  const IntervalQuantale luk(TNorm::Lukasiewicz);
  const auto r = verify_ordinal_sum_generation(luk, [](double x) { return std::min(1.0, x + 0.25); });
  CHECK(r.within_tolerance);
  CHECK(r.max_deviation <= 1e-9);
  CHECK(r.grid_points == 257);

  const IntervalQuantale mn(TNorm::Minimum);
  const auto id = verify_ordinal_sum_generation(mn, [](double x) { return x; });
  CHECK(id.within_tolerance);
  CHECK(id.case_counts[0] + id.case_counts[1] == 0);
  for (double x : {0.0, 0.3, 0.7})
    for (double y : {0.1, 0.5, 0.9}) {
      int c = -1;
      CHECK(generator_value(mn, {}, [](double v) { return v; }, x, y, &c) == doctest::Approx(x <= y ? 1.0 : x));
      CHECK(c == 2);
    }

  const auto one = verify_ordinal_sum_generation(luk, [](double) { return 1.0; });
  CHECK(one.max_deviation == 0.0);
  CHECK_THROWS_AS(verify_ordinal_sum_generation(luk, [](double x) { return x * x; }), std::invalid_argument);
}

TEST_CASE("sequence ideals on the unit interval") {
  const IntervalQuantale luk(TNorm::Lukasiewicz);
  const auto r = check_sequence_ideal(luk, family_sequence(LimitFamily::Principal, 0.25),
                                      [](double x) { return std::min(1.0, 0.75 + x); });
  CHECK(r.forward_cauchy);
  CHECK(r.lower);
  CHECK(r.matches);
  // An increasing sequence is not forward Cauchy in d_R.
  const auto up = check_sequence_ideal(luk, {0.1, 0.2, 0.3, 0.4}, [](double) { return 1.0; });
  CHECK_FALSE(up.forward_cauchy);
}

TEST_CASE("mode names") {
  CHECK(parse_scott_mode("top") == ScottMode::Topology);
  CHECK(parse_scott_mode("cotopology") == ScottMode::Cotopology);
  CHECK_FALSE(parse_scott_mode("open").has_value());
}
