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

#ifndef QIDEAL_HARNESS_SUITES_HPP_
#define QIDEAL_HARNESS_SUITES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qideal/error.hpp"

namespace qideal::harness {

enum class Verdict { Pass, Fail, Finding, Budget };

std::string_view to_string(Verdict v);
/// 0 pass, 1 fail or finding, 2 budget.
int exit_code(Verdict v);

struct SuiteOptions {
  std::map<std::string, std::string> params;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  double tolerance = 1e-9;
  /// Witness files for fail/finding verdicts go here.
  std::filesystem::path witness_dir = "qideal-witnesses";
};

struct SuiteResult {
  std::string suite;
  std::vector<std::string> instances;
  Verdict verdict = Verdict::Pass;
  std::string summary;
  std::vector<std::string> witnesses;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

const std::vector<std::string>& suite_names();

/// Runs a registered suite. BudgetExceeded is caught and reported as the
/// budget verdict; UnknownSuite and bad parameters propagate.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

/// Random and exhaustive search for ideal-class separations. Shape keys:
/// quantale (catalog name), n (chain size), points, count, exhaustive (0/1).
SuiteResult search_counterexample(const std::map<std::string, std::string>& shape, const SuiteOptions& options);

/// "k=v,k=v" into a map; throws std::invalid_argument on a malformed item.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// Report without timing, so reruns compare equal.
nlohmann::ordered_json to_json(const SuiteResult& r);

}  // namespace qideal::harness

#endif  // QIDEAL_HARNESS_SUITES_HPP_
