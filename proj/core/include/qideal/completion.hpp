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

#ifndef QIDEAL_COMPLETION_HPP_
#define QIDEAL_COMPLETION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qideal/fuzzy.hpp"
#include "qideal/ideal.hpp"
#include "qideal/qorder.hpp"

namespace qideal {

/// Largest ideal space for which the second-level enumeration is attempted.
inline constexpr std::size_t kIdealSpaceCap = 512;

/// Phi(A): the class members of A ordered by fuzzy inclusion.
struct IdealSpace {
  QOrder base;
  IdealClass cls = IdealClass::Flat;
  std::vector<FuzzySet> carrier;
  /// Carrier ordered by sub; labels are the value tuples, e.g. "(1,1/2)".
  QOrder order;
  /// yoneda[a] is the carrier index of y(a).
  std::vector<std::size_t> yoneda;
};

/// Tuple label of a fuzzy set, e.g. "(1,1/2)".
std::string fuzzy_label(const FiniteQuantale& q, const FuzzySet& phi);

/// Enumerates the class and records the Yoneda map. Throws std::logic_error
/// if some y(a) is missing or sub(y a, y b) != A(a,b).
IdealSpace ideal_space(const QOrder& a, IdealClass cls, std::uint64_t budget = kDefaultBudget);

/// x |-> V_i L(i) & phi_i(x) for a lower set L on the ideal space. Throws NotLower.
FuzzySet weighted_join(const IdealSpace& space, const FuzzySet& lambda);

struct SaturationReport {
  IdealClass cls = IdealClass::Flat;
  std::size_t ideal_count = 0;
  /// Number of class members of Phi(Phi(A)) that were joined.
  std::size_t second_level_count = 0;
  bool saturated = true;
  /// First L in Phi(Phi(A)) whose weighted join leaves the class.
  std::optional<FuzzySet> violator;
  std::optional<FuzzySet> violator_join;
};

/// Throws BudgetExceeded when |Phi(A)| > kIdealSpaceCap or an enumeration
/// exceeds the budget.
SaturationReport check_saturation(const QOrder& a, IdealClass cls, std::uint64_t budget = kDefaultBudget);

struct ContinuityReport {
  bool complete = true;
  /// First class member without a supremum.
  std::optional<FuzzySet> unbounded_ideal;
  /// sup_map[i] = first supremum of carrier[i]; empty when not complete.
  std::vector<std::size_t> sup_map;
  bool continuous = false;
  /// Point a for which no d(a) satisfies Phi(A)(d a, phi) = A(a, sup phi).
  std::optional<std::size_t> no_adjoint_at;
  /// left_adjoint[a] = carrier index of d(a).
  std::optional<QMap> left_adjoint;
};

/// Completeness and continuity of A for the class. The left adjoint is
/// searched over all maps A -> Phi(A); the adjunction identity separates
/// by point, so each d(a) is chosen independently and the result is then
/// re-checked as a whole with check_map_and_adjunction.
ContinuityReport check_completeness_continuity(const QOrder& a, IdealClass cls,
                                               std::uint64_t budget = kDefaultBudget);
ContinuityReport check_completeness_continuity(const IdealSpace& space);

struct FreeContinuityReport {
  std::size_t ideal_count = 0;
  std::size_t second_level_count = 0;
  ContinuityReport continuity;
  /// The left adjoint of sup on Phi(Phi(A)) is the restriction of y_A->.
  bool adjoint_matches_yoneda_image = false;
  /// Ideal phi of A where d(phi) != y_A->(phi).
  std::optional<FuzzySet> mismatch;
  /// sup of every L in Phi(Phi(A)) equals L o y_A.
  bool sup_formula_holds = false;
  std::optional<FuzzySet> sup_formula_violator;
};

/// Phi(A) is complete and continuous for the class, with the left adjoint
/// of sup equal to y_A-> on ideals.
FreeContinuityReport check_free_continuity(const QOrder& a, IdealClass cls, std::uint64_t budget = kDefaultBudget);

}  // namespace qideal

#endif  // QIDEAL_COMPLETION_HPP_
