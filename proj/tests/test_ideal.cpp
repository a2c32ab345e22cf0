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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qideal/generate.hpp"
#include "qideal/ideal.hpp"

using namespace qideal;

namespace {

std::vector<QOrder> small_bases() {
  std::vector<QOrder> out;
  for (const auto& q : {boolean4(), lukasiewicz_chain(3), godel_chain(3), nilpotent_minimum_chain(3)})
    for (auto& a : all_two_point_orders(q)) out.push_back(std::move(a));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 12; ++i) out.push_back(random_qorder(i % 2 ? lukasiewicz_chain(3) : boolean4(), 3, rng));
  return out;
}

FuzzySet godel_phi(const FiniteQuantale& q) {
  FuzzySet phi(q.size());
  for (Elem x : q.elements()) phi[x] = q.join(q.at("1/2"), q.residuate(x, q.at("1/4")));
  return phi;
}

}  // namespace

TEST_CASE("class names round trip") {
  for (auto c : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible, IdealClass::AllLower})
    CHECK(parse_ideal_class(to_string(c)) == c);
  CHECK_FALSE(parse_ideal_class("directed").has_value());
}

TEST_CASE("principal ideals belong to every class") {
  for (const auto& a : small_bases()) {
    IdealDecider d(a);
    for (std::size_t x = 0; x < a.size(); ++x) {
      const auto r = d.classify(principal(a, x));
      CHECK(r.lower);
      CHECK(r.inhabited);
      CHECK(r.flat.holds);
      CHECK(r.irreducible.holds);
      CHECK(r.forward_cauchy.holds);
    }
  }
}

TEST_CASE("crisp two-point antichain is not flat") {
  const auto q = boolean2();
  const auto a = discrete_order(q, 2);
  const FuzzySet both{q.top(), q.top()};
  const auto v = is_flat(a, both);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  const auto& [u1, u2] = *v.witness;
  CHECK(oracle::tensor(q, both, u1) == q.top());
  CHECK(oracle::tensor(q, both, u2) == q.top());
  CHECK(oracle::tensor(q, both, pointwise_meet(q, u1, u2)) == q.bottom());
  CHECK(u1 == FuzzySet{q.bottom(), q.top()});
  CHECK(u2 == FuzzySet{q.top(), q.bottom()});
}

TEST_CASE("boolean4 (a,b) on the discrete base") {
  const auto q = boolean4();
  const auto a = discrete_order(q, 2);
  const FuzzySet phi{q.at("a"), q.at("b")};
  const auto r = classify_ideal(a, phi);
  CHECK(r.inhabited);
  CHECK(r.flat.holds);
  CHECK(r.irreducible.holds);
  CHECK_FALSE(r.forward_cauchy.holds);
  CHECK(oracle::flat(a, phi));
  CHECK(oracle::irreducible(a, phi));
  const auto fc = oracle::fc_by_sequences(a);
  CHECK(std::find(fc.begin(), fc.end(), phi) == fc.end());
}

TEST_CASE("goedel-5 b v (x -> a) is flat but not irreducible") {
  const auto q = godel_chain(5);
  const auto a = left_order(q);
  const auto phi = godel_phi(q);
  CHECK(phi == FuzzySet{q.top(), q.top(), q.at("1/2"), q.at("1/2"), q.at("1/2")});
  const auto r = classify_ideal(a, phi);
  CHECK(r.flat.holds);
  CHECK_FALSE(r.irreducible.holds);
  CHECK_FALSE(r.forward_cauchy.holds);
  CHECK(oracle::flat(a, phi));
  CHECK_FALSE(oracle::irreducible(a, phi));

  // The canonical witness breaks the join law.
  REQUIRE(r.irreducible.witness.has_value());
  const auto& [l1, l2] = *r.irreducible.witness;
  CHECK(oracle::sub(q, phi, pointwise_join(q, l1, l2)) != q.join(oracle::sub(q, phi, l1), oracle::sub(q, phi, l2)));

  // So does the pair const b, (- -> a).
  const auto cb = constant_set(a, q.at("1/2"));
  FuzzySet to_a(q.size());
  for (Elem x : q.elements()) to_a[x] = q.residuate(x, q.at("1/4"));
  CHECK(pointwise_join(q, cb, to_a) == phi);
  CHECK(oracle::sub(q, phi, phi) == q.top());
  CHECK(oracle::sub(q, phi, cb) != q.top());
  CHECK(oracle::sub(q, phi, to_a) != q.top());
}

TEST_CASE("sequence ideals") {
  const auto q = lukasiewicz_chain(3);
  const auto a = left_order(q);
  const std::size_t z = q.at("0"), h = q.at("1/2"), t = q.at("1");
  for (std::size_t x = 0; x < a.size(); ++x)
    CHECK(ideal_from_sequence(a, {{}, {x}}) == principal(a, x));
  CHECK(ideal_from_sequence(a, {{z, h}, {t}}) == FuzzySet(3, q.top()));
  CHECK(ideal_from_sequence(a, {{z, h}, {t}}) == principal(a, t));
  try {
    ideal_from_sequence(a, {{}, {h, t}});
    FAIL("expected NotForwardCauchy");
  } catch (const NotForwardCauchy& e) {
    CHECK(a.hom(t, h) == q.at("1/2"));
    CHECK(e.positions.first <= e.positions.second);
  }
  CHECK_THROWS_AS(ideal_from_sequence(a, {{}, {}}), std::invalid_argument);
}

TEST_CASE("deciders agree with the definitional oracles") {
  for (const auto& a : small_bases()) {
    IdealDecider d(a);
    const auto& q = a.quantale();
    for (const auto& phi : d.lower_sets()) {
      const bool inh = oracle::inhabited(q, phi);
      CHECK(d.is_flat(phi).holds == (inh && oracle::flat(a, phi)));
      CHECK(d.is_flat_brute_force(phi).holds == (inh && oracle::flat(a, phi)));
      CHECK(d.is_irreducible(phi).holds == (inh && oracle::irreducible(a, phi)));
    }
  }
}

TEST_CASE("forward Cauchy ideals are exactly those generated by sequences") {
  for (const auto& a : small_bases()) {
    const auto fc = enumerate_ideals(a, IdealClass::ForwardCauchy);
    CHECK(fc == oracle::fc_by_sequences(a));
  }
  const auto dl = left_order(lukasiewicz_chain(3));
  CHECK(enumerate_ideals(dl, IdealClass::ForwardCauchy).size() == 3);
}

TEST_CASE("frame shortcut agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto q = i % 2 ? godel_chain(4) : boolean4();
    const auto a = random_qorder(q, 3, rng);
    IdealDecider d(a);
    for (const auto& phi : d.lower_sets()) {
      if (!oracle::inhabited(q, phi)) continue;
      CHECK(d.flat_frame_shortcut(phi) == d.is_flat_brute_force(phi).holds);
    }
  }
}

TEST_CASE("non-lower and empty inputs are rejected with a reason") {
  const auto q = boolean2();
  const auto a = crisp_order(q, {"x", "y"}, {{true, true}, {false, true}});
  const auto v = is_flat(a, FuzzySet{q.bottom(), q.top()});
  CHECK_FALSE(v.holds);
  CHECK(v.reason.find("lower") != std::string::npos);
  const auto w = is_irreducible(a, FuzzySet{q.bottom(), q.bottom()});
  CHECK_FALSE(w.holds);
  CHECK(w.reason == "not inhabited");
}

TEST_CASE("ideals on small fixed bases") {
  const auto l3 = lukasiewicz_chain(3);
  const QOrder one(l3, {"*"}, {l3.top()});
  for (auto c : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible})
    CHECK(enumerate_ideals(one, c) == std::vector<FuzzySet>{{l3.top()}});

  const auto b2 = boolean2();
  const auto chain = crisp_order(b2, {"x", "y"}, {{true, true}, {false, true}});
  const std::vector<FuzzySet> classical{{b2.top(), b2.bottom()}, {b2.top(), b2.top()}};
  for (auto c : {IdealClass::ForwardCauchy, IdealClass::Flat, IdealClass::Irreducible})
    CHECK(enumerate_ideals(chain, c) == classical);

  const auto dl = left_order(l3);
  CHECK(enumerate_ideals(dl, IdealClass::ForwardCauchy) == enumerate_ideals(dl, IdealClass::Irreducible));
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(enumerate_ideals(discrete_order(lukasiewicz_chain(6), 6), IdealClass::Flat, 100), BudgetExceeded);
  CHECK_THROWS_AS(sequence_generated_ideals(left_order(lukasiewicz_chain(5)), 6, 100), BudgetExceeded);
}
