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

#ifndef QIDEAL_ERROR_HPP_
#define QIDEAL_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qideal {

/// Default cap on elementary checks (pairs, candidates) for one decider call.
inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Raised instead of silently sampling when an exhaustive enumeration would
/// exceed its budget. `required` is the computed size (saturated at UINT64_MAX).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + ": needs " + std::to_string(required) + " > budget " +
                           std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Fuzzy set, map or distributor does not fit the Q-ordered set it is used with.
class BaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two structures built over different quantales were combined.
class QuantaleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Saturating a^b, used for |Q|^|A| style budget estimates.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace qideal

#endif  // QIDEAL_ERROR_HPP_
