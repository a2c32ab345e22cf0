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
#include "qideal/fuzzy.hpp"
#include "qideal/generate.hpp"
#include "qideal/scott.hpp"

using namespace qideal;

namespace {

std::vector<QOrder> desk_bases() {
  std::vector<QOrder> out;
  for (const auto& q : {lukasiewicz_chain(3), boolean4()})
    for (auto& a : all_two_point_orders(q)) out.push_back(std::move(a));
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 100; ++i) {
    const auto q = i % 3 == 0 ? boolean4() : i % 3 == 1 ? lukasiewicz_chain(3) : godel_chain(4);
    out.push_back(random_qorder(q, 1 + i % 3, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("principal and constant sets") {
  const auto a = left_order(lukasiewicz_chain(4));
  const auto& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto y = principal(a, x);
    CHECK(is_lower(a, y));
    CHECK(is_inhabited(q, y));
    CHECK(y[x] == q.top());
    CHECK(is_upper(a, principal_upper(a, x)));
  }
  for (Elem p : q.elements()) {
    const auto c = constant_set(a, p);
    CHECK(is_lower(a, c));
    CHECK(is_upper(a, c));
  }
}

TEST_CASE("identity squared on sampled product d_L is not upper") {
  const IntervalQuantale q(TNorm::Product);
  const auto pts = unit_grid(17);
  const auto a = sampled_left_order(q, pts);
  BasicFuzzySet<IntervalQuantale> id(pts.size()), sq(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    id[i] = pts[i];
    sq[i] = q.tensor(pts[i], pts[i]);
  }
  CHECK(is_upper(a, id));
  CHECK_FALSE(is_upper(a, sq));
}

TEST_CASE("inclusion and tensor degrees") {
  const auto q = lukasiewicz_chain(3);
  const auto a = left_order(q);
  const auto y_half = principal(a, q.at("1/2"));
  CHECK(y_half == FuzzySet{q.top(), q.top(), q.at("1/2")});
  CHECK(sub_degree(a, y_half, constant_set(a, q.at("1/2"))) == q.at("1/2"));
  CHECK(tensor_degree(a, y_half, principal_upper(a, q.at("1/2"))) == q.top());

  const QOrder one(q, {"*"}, {q.top()});
  for (Elem p : q.elements())
    for (Elem r : q.elements()) CHECK(tensor_degree(one, FuzzySet{p}, FuzzySet{r}) == q.tensor(p, r));
}

TEST_CASE("lower and upper violations raise") {
  const auto q = boolean2();
  const auto a = crisp_order(q, {"x", "y"}, {{true, true}, {false, true}});
  const FuzzySet not_lower{q.bottom(), q.top()};
  CHECK_FALSE(is_lower(a, not_lower));
  CHECK(sub_degree(a, not_lower, not_lower) == q.top());
  CHECK_THROWS_AS(tensor_degree(a, not_lower, not_lower), NotLower);
  CHECK_THROWS_AS(sub_degree(a, FuzzySet{q.top()}, FuzzySet{q.top()}), BaseMismatch);
}

TEST_CASE("sub and tensor agree with the oracle on every desk pair") {
  for (const auto& a : desk_bases()) {
    const auto& q = a.quantale();
    const auto lows = enumerate_monotone_sets(a, SetKind::Lower);
    const auto ups = enumerate_monotone_sets(a, SetKind::Upper);
    CHECK(lows == oracle::sorted_filter(a, [&](const FuzzySet& s) { return oracle::lower(a, s); }));
    CHECK(ups == oracle::sorted_filter(a, [&](const FuzzySet& s) { return oracle::upper(a, s); }));
    for (const auto& p : lows) {
      CHECK(sub_degree(a, p, p) == q.top());
      for (const auto& r : lows) CHECK(sub_degree(a, p, r) == oracle::sub(q, p, r));
      for (const auto& u : ups) CHECK(tensor_degree(a, p, u) == oracle::tensor(q, p, u));
      for (std::size_t x = 0; x < a.size(); ++x) CHECK(sub_degree(a, principal(a, x), p) == p[x]);
    }
  }
}

TEST_CASE("tensor and inclusion degrees determine each other") {
  for (const auto& a : desk_bases()) {
    const auto& q = a.quantale();
    const auto lows = enumerate_monotone_sets(a, SetKind::Lower);
    const auto ups = enumerate_monotone_sets(a, SetKind::Upper);
    for (const auto& phi : lows) {
      for (const auto& psi : ups) {
        Elem rhs = q.top();
        for (Elem p : q.elements()) rhs = q.meet(rhs, q.residuate(sub_unchecked(q, phi, implies_to(q, psi, p)), p));
        CHECK(tensor_unchecked(q, phi, psi) == rhs);
      }
      for (const auto& phi2 : lows) {
        Elem rhs = q.top();
        for (Elem p : q.elements())
          rhs = q.meet(rhs, q.residuate(tensor_unchecked(q, phi, implies_to(q, phi2, p)), p));
        CHECK(sub_unchecked(q, phi, phi2) == rhs);
      }
    }
  }
}

TEST_CASE("actions on lower sets") {
  for (const auto& a : desk_bases()) {
    const auto& q = a.quantale();
    for (const auto& phi : enumerate_monotone_sets(a, SetKind::Lower)) {
      FuzzySet dd(phi.size(), q.top());
      for (Elem p : q.elements()) {
        CHECK(oracle::lower(a, scale(q, p, phi)));
        CHECK(oracle::lower(a, implies_from(q, p, phi)));
        const auto up = implies_to(q, phi, p);
        CHECK(oracle::upper(a, up));
        dd = pointwise_meet(q, dd, implies_to(q, up, p));
      }
      CHECK(dd == phi);
    }
  }
}

TEST_CASE("forward and backward images are adjoint") {
  // A fixed 2 -> 3 map over boolean4, then random maps between random orders.
  const auto q = boolean4();
  const auto a = discrete_order(q, 2);
  const auto b = left_order(boolean4());
  const QMap f{q.at("a"), q.at("1")};
  REQUIRE(check_map_and_adjunction(a, QOrder(b), f).order_preserving);
  for (const auto& phi : enumerate_monotone_sets(a, SetKind::Lower))
    for (const auto& psi : enumerate_monotone_sets(b, SetKind::Lower))
      CHECK(oracle::sub(q, transport(a, b, f, phi, Direction::Forward), psi) ==
            oracle::sub(q, phi, transport(a, b, f, psi, Direction::Backward)));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto qq = i % 2 ? lukasiewicz_chain(3) : godel_chain(3);
    const auto s = random_qorder(qq, 2, rng), t = random_qorder(qq, 3, rng);
    for (const auto& g : all_maps(2, 3)) {
      if (!check_map_and_adjunction(s, t, g).order_preserving) continue;
      for (std::size_t x = 0; x < s.size(); ++x)
        CHECK(transport(s, t, g, principal(s, x), Direction::Forward) == principal(t, g[x]));
      for (const auto& phi : enumerate_monotone_sets(s, SetKind::Lower))
        for (const auto& psi : enumerate_monotone_sets(t, SetKind::Lower))
          CHECK(sub_degree(t, transport(s, t, g, phi, Direction::Forward), psi) ==
                sub_degree(s, phi, transport(s, t, g, psi, Direction::Backward)));
    }
  }
  const auto id = QMap{0, 1};
  for (const auto& phi : enumerate_monotone_sets(a, SetKind::Lower))
    CHECK(transport(a, a, id, phi, Direction::Forward) == phi);
}

TEST_CASE("suprema") {
  for (const auto& q : {lukasiewicz_chain(4), godel_chain(4), boolean4()}) {
    const auto dl = left_order(q), dr = right_order(q);
    for (std::size_t x = 0; x < dl.size(); ++x) {
      const auto s = suprema(dl, principal(dl, x));
      CHECK(std::find(s.begin(), s.end(), x) != s.end());
    }
    for (const auto& phi : enumerate_monotone_sets(dl, SetKind::Lower)) {
      Elem expect = q.bottom();
      for (Elem p : q.elements()) expect = q.join(expect, q.tensor(p, phi[p]));
      CHECK(suprema(dl, phi) == std::vector<std::size_t>{expect});
    }
    for (const auto& phi : enumerate_monotone_sets(dr, SetKind::Lower)) {
      Elem expect = q.top();
      for (Elem p : q.elements()) expect = q.meet(expect, q.residuate(phi[p], p));
      CHECK(suprema(dr, phi) == std::vector<std::size_t>{expect});
    }
  }
}

TEST_CASE("enumeration counts") {
  const auto b2 = boolean2();
  CHECK(enumerate_monotone_sets(discrete_order(b2, 2), SetKind::Lower).size() == 4);
  CHECK(enumerate_monotone_sets(discrete_order(lukasiewicz_chain(3), 2), SetKind::Lower).size() == 9);
  const auto chain = crisp_order(b2, {"x", "y"}, {{true, true}, {false, true}});
  const auto lows = enumerate_monotone_sets(chain, SetKind::Lower);
  const Elem B = b2.bottom(), T = b2.top();
  CHECK(lows == std::vector<FuzzySet>{{B, B}, {T, B}, {T, T}});
  CHECK_THROWS_AS(enumerate_monotone_sets(discrete_order(lukasiewicz_chain(5), 8), SetKind::Lower, 1000),
                  BudgetExceeded);
}
