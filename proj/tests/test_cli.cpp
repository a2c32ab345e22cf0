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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QIDEAL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string inst(const std::string& name) { return (fs::path(QIDEAL_INSTANCE_DIR) / name).string(); }

nlohmann::json last_json(const std::string& out) { return nlohmann::json::parse(out.substr(out.find('{'))); }

}  // namespace

TEST_CASE("cli classify") {
  auto r = run("--json classify " + inst("boolean4_discrete2.json") + " " + inst("boolean4_ab.json"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["flat"]["holds"] == true);
  CHECK(j["report"]["irreducible"]["holds"] == true);
  CHECK(j["report"]["forward_cauchy"]["holds"] == false);
}

TEST_CASE("cli enumerate and scott") {
  auto r = run("--json enumerate " + inst("lukasiewicz3_dL.json") + " --class fc");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 3);
  const auto dump = fs::temp_directory_path() / "qideal-cli-scott.json";
  r = run("scott " + inst("lukasiewicz3_chain2.json") + " --class irr --mode cotop --dump " + dump.string());
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dump));
  CHECK(last_json(r.out)["mode"] == "cotop");
}

TEST_CASE("cli check and exit codes") {
  const auto dir = fs::temp_directory_path() / "qideal-cli-w";
  auto r = run("check BOOLEAN4_COUNTEREXAMPLE --witness-dir " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("BOOLEAN4_COUNTEREXAMPLE: pass", 0) == 0);
  r = run("check GODEL_FLAT_NOT_IRR --param n=5,b=1,a=1/4 --witness-dir " + dir.string());
  CHECK(r.code == 1);
  r = run("check GODEL_FLAT_NOT_IRR --budget 10");
  CHECK(r.code == 2);
  CHECK(run("check NOPE").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("validate /nonexistent.json").code == 2);
}

TEST_CASE("cli search is seeded") {
  const auto dir = fs::temp_directory_path() / "qideal-cli-s";
  const std::string args = "--json search-counterexample --shape quantale=godel_chain,n=4,points=3,count=10 --witness-dir " +
                           dir.string();
  auto a = run("--seed 9 " + args), b = run("--seed 9 " + args);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["seed"] == 9);
}

TEST_CASE("cli validate") {
  auto r = run("--json validate " + inst("godel5.json"));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["properties"]["prelinear"] == true);
  CHECK(j["elements"] == 5);
  CHECK(run("validate " + inst("lukasiewicz3_sequence.json")).code == 0);
}
