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

#include "doctest.h"
#include "harness/suites.hpp"
#include "qideal/completion.hpp"
#include "qideal/ideal.hpp"
#include "qideal/io.hpp"

using namespace qideal;
using namespace qideal::harness;
namespace fs = std::filesystem;

namespace {

SuiteOptions temp_options(const std::string& tag) {
  SuiteOptions o;
  o.witness_dir = fs::temp_directory_path() / ("qideal-test-" + tag);
  fs::remove_all(o.witness_dir);
  return o;
}

}  // namespace

TEST_CASE("every registered suite passes with defaults") {
  const auto o = temp_options("all");
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, o);
    CHECK_MESSAGE(r.verdict == Verdict::Pass, name << ": " << r.summary);
    CHECK(r.witnesses.empty());
    CHECK_FALSE(r.instances.empty());
  }
  CHECK(suite_names().size() == 17);
}

TEST_CASE("suite reports are deterministic") {
  const auto o = temp_options("det");
  for (const auto& name : {"FC_SUBSET_IRR", "SCOTT_AXIOMS", "PROP57_EQUIV", "COR312_FAMILIES"})
    CHECK(to_json(run_suite(name, o)).dump() == to_json(run_suite(name, o)).dump());
}

TEST_CASE("seed changes the random instances") {
  auto o = temp_options("seed");
  o.params["random"] = "5";
  const auto a = run_suite("FC_SUBSET_FLAT", o);
  o.seed = 2;
  const auto b = run_suite("FC_SUBSET_FLAT", o);
  CHECK(a.instances != b.instances);
  CHECK(b.seed == 2);
}

TEST_CASE("unknown suite and bad parameters") {
  const auto o = temp_options("bad");
  CHECK_THROWS_AS(run_suite("NOPE", o), UnknownSuite);
  auto p = o;
  p.params["random"] = "many";
  CHECK_THROWS_AS(run_suite("FC_SUBSET_IRR", p), std::invalid_argument);
  CHECK_THROWS_AS(parse_key_values("a=1,b"), std::invalid_argument);
  CHECK(parse_key_values("n=5,b=1/2") == std::map<std::string, std::string>{{"n", "5"}, {"b", "1/2"}});
}

TEST_CASE("budget verdict") {
  auto o = temp_options("budget");
  o.budget = 10;
  const auto r = run_suite("GODEL_FLAT_NOT_IRR", o);
  CHECK(r.verdict == Verdict::Budget);
  CHECK(exit_code(r.verdict) == 2);
}

TEST_CASE("changed suite parameters flip the verdict and leave witnesses") {
  // With b = 1, phi = 1 everywhere, which is principal and hence irreducible.
  auto o = temp_options("godel");
  o.params = {{"n", "5"}, {"b", "1"}, {"a", "1/4"}};
  const auto r = run_suite("GODEL_FLAT_NOT_IRR", o);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(exit_code(r.verdict) == 1);
  REQUIRE_FALSE(r.witnesses.empty());
  const auto& item = r.details["violations"][0];
  const auto base = load_qorder(item["base_file"].get<std::string>());
  const auto phi = load_fuzzy_values(item["witness_file"].get<std::string>(), base);
  CHECK(is_irreducible(base, phi).holds);
}

TEST_CASE("search finds separations and its witnesses reproduce") {
  const auto o = temp_options("search");
  const auto r = search_counterexample({{"quantale", "godel_chain"}, {"n", "5"}, {"points", "3"}, {"count", "30"}}, o);
  CHECK(r.verdict == Verdict::Finding);
  REQUIRE_FALSE(r.details["violations"].empty());
  for (const auto& item : r.details["violations"]) {
    const auto base = load_qorder(item["base_file"].get<std::string>());
    const auto phi = load_fuzzy_values(item["witness_file"].get<std::string>(), base);
    const auto rep = classify_ideal(base, phi);
    const std::string msg = item["message"];
    if (msg == "flat but not irreducible") {
      CHECK(rep.flat.holds);
      CHECK_FALSE(rep.irreducible.holds);
    } else if (msg == "flat but not forward Cauchy") {
      CHECK(rep.flat.holds);
      CHECK_FALSE(rep.forward_cauchy.holds);
    }
  }
  // Boolean4 on two points: no theorem violation, only separations.
  const auto b = search_counterexample({{"quantale", "boolean4"}, {"points", "2"}, {"count", "0"}}, o);
  CHECK(b.verdict != Verdict::Fail);
}
