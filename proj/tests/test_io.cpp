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

#include <filesystem>
#include <random>

#include "doctest.h"
#include "qideal/generate.hpp"
#include "qideal/io.hpp"

using namespace qideal;
namespace fs = std::filesystem;

namespace {

const fs::path kInstances = QIDEAL_INSTANCE_DIR;

}  // namespace

TEST_CASE("shipped instances load") {
  const auto b4 = load_quantale(kInstances / "boolean4.json");
  REQUIRE(std::holds_alternative<FiniteQuantale>(b4));
  CHECK(std::get<FiniteQuantale>(b4) == boolean4());

  const auto base = load_qorder(kInstances / "boolean4_discrete2.json");
  CHECK(base == discrete_order(boolean4(), 2));

  const auto ab = load_fuzzy_set(kInstances / "boolean4_ab.json");
  CHECK(ab.values == FuzzySet{boolean4().at("a"), boolean4().at("b")});

  const auto g = load_fuzzy_set(kInstances / "godel5_flat_not_irr.json");
  CHECK(g.base == left_order(godel_chain(5)));
  CHECK(g.values[4] == godel_chain(5).at("1/2"));

  const auto chain = load_qorder(kInstances / "lukasiewicz3_chain2.json");
  CHECK_FALSE(validate_qorder(chain).has_value());
  CHECK(chain.hom(1, 0) == lukasiewicz_chain(3).at("1/2"));

  const auto seq = load_sequence(kInstances / "lukasiewicz3_sequence.json");
  CHECK(seq.sequence.prefix.size() == 2);
  CHECK(seq.sequence.cycle == std::vector<std::size_t>{2});

  const auto os = load_quantale(kInstances / "interval_ordinal_sum.json");
  REQUIRE(std::holds_alternative<IntervalQuantale>(os));
  CHECK(std::get<IntervalQuantale>(os).pieces().size() == 2);
}

TEST_CASE("quantale round trip") {
  for (const auto& q : {boolean4(), lukasiewicz_chain(4), godel_chain(3), nilpotent_minimum_chain(5)}) {
    const auto back = parse_quantale(quantale_to_json(q));
    REQUIRE(std::holds_alternative<FiniteQuantale>(back));
    CHECK(std::get<FiniteQuantale>(back) == q);
  }
}

TEST_CASE("qorder, fuzzy set and map round trips") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    const auto q = i % 2 ? boolean4() : lukasiewicz_chain(3);
    const auto a = random_qorder(q, 3, rng);
    CHECK(parse_qorder(qorder_to_json(a)) == a);
    for (const auto& phi : enumerate_monotone_sets(a, SetKind::Lower)) {
      const auto back = parse_fuzzy_set(fuzzy_set_to_json(a, phi));
      CHECK(back.base == a);
      CHECK(back.values == phi);
    }
    const QMap f{2, 0, 1};
    CHECK(parse_map(map_to_json(a, a, f), a, a) == f);
  }
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(parse_quantale("{"), FormatError);
  CHECK_THROWS_AS(parse_quantale(R"({"kind":"weird"})"), FormatError);
  CHECK_THROWS_AS(parse_quantale(R"({"kind":"finite","elements":["0"]})"), FormatError);
  CHECK_THROWS_AS(parse_qorder(R"({"quantale":{"kind":"catalog","name":"interval","params":{"tnorm":"product"}},
                                   "standard":"dL"})"),
                  FormatError);
  const auto a = left_order(lukasiewicz_chain(3));
  const auto text = qorder_to_json(a);
  CHECK_THROWS_AS(parse_map(R"({"mapping":{"0":"1"}})", a, a), BaseMismatch);
  CHECK_THROWS_AS(parse_fuzzy_set(R"({"base":)" + text + R"(,"values":{"0":"1"}})"), BaseMismatch);
  CHECK_THROWS_AS(parse_fuzzy_set(R"({"base":)" + text + R"(,"values":[1, 0.3, 0]})"), FormatError);
  CHECK(parse_fuzzy_set(R"({"base":)" + text + R"(,"values":[1, 0.5, "0"]})").values == FuzzySet{2, 1, 0});
}

TEST_CASE("bad quantale tables surface the law") {
  const std::string noncomm = R"({"kind":"finite","elements":["0","m","1"],
    "leq":[[true,true,true],[false,true,true],[false,false,true]],
    "tensor":[["0","0","0"],["m","m","m"],["0","m","1"]],"unit":"1"})";
  CHECK_THROWS_AS(parse_quantale(noncomm), QuantaleError);
}
