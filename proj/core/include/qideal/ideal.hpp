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

#ifndef QIDEAL_IDEAL_HPP_
#define QIDEAL_IDEAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qideal/error.hpp"
#include "qideal/fuzzy.hpp"
#include "qideal/qorder.hpp"

namespace qideal {

enum class IdealClass { ForwardCauchy, Flat, Irreducible, AllLower };

std::string_view to_string(IdealClass c);
/// Accepts fc, flat, irr/irreducible, all/lower (case-sensitive).
std::optional<IdealClass> parse_ideal_class(std::string_view name);

/// Outcome of one decider. `reason` is empty when the property holds.
struct FlatVerdict {
  bool holds = false;
  std::string reason;
  /// Upper sets psi1, psi2 with phi (x) (psi1 /\ psi2) != (phi (x) psi1) /\ (phi (x) psi2).
  std::optional<std::pair<FuzzySet, FuzzySet>> witness;
};

struct IrreducibleVerdict {
  bool holds = false;
  std::string reason;
  /// Lower sets phi1, phi2 with sub(phi, phi1 v phi2) != sub(phi,phi1) v sub(phi,phi2).
  std::optional<std::pair<FuzzySet, FuzzySet>> witness;
};

struct ForwardCauchyVerdict {
  bool holds = false;
  std::string reason;
  /// (x,y) admitting no z with phi(z) = 1, phi(x) <= A(x,z), phi(y) <= A(y,z).
  std::optional<PointPair> witness;
};

struct IdealReport {
  bool lower = false;
  bool inhabited = false;
  FlatVerdict flat;
  IrreducibleVerdict irreducible;
  ForwardCauchyVerdict forward_cauchy;
};

/// prefix . cycle^omega over a base order; entries are carrier indices.
struct EventuallyPeriodicSequence {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> cycle;
};

class NotForwardCauchy : public std::invalid_argument {
 public:
  NotForwardCauchy(std::size_t j, std::size_t k)
      : std::invalid_argument("sequence is not forward Cauchy at positions (" + std::to_string(j) + "," +
                              std::to_string(k) + ")"),
        positions{j, k} {}
  /// Sequence positions j <= k recurring in every tail with A(x_j, x_k) < 1.
  PointPair positions;
};

/// phi = V_i /\_{j>=i} A(-, x_j). Throws NotForwardCauchy with the first
/// recurring pair, std::invalid_argument for an empty cycle or bad index.
FuzzySet ideal_from_sequence(const QOrder& a, const EventuallyPeriodicSequence& s);

/// Ideals generated by every eventually periodic sequence with
/// |prefix| + |cycle| <= max_length that is forward Cauchy; sorted, unique.
std::vector<FuzzySet> sequence_generated_ideals(const QOrder& a, std::size_t max_length,
                                                std::uint64_t budget = kDefaultBudget);

/// Caches the lower and upper sets of a finite Q-ordered set so that many
/// fuzzy sets can be classified against the same base. Budget applies to
/// each enumeration and to the pair loop of each decider call.
class IdealDecider {
 public:
  explicit IdealDecider(QOrder base, std::uint64_t budget = kDefaultBudget);

  const QOrder& base() const { return base_; }
  std::uint64_t budget() const { return budget_; }
  const std::vector<FuzzySet>& lower_sets() const;
  const std::vector<FuzzySet>& upper_sets() const;

  /// Uses the frame shortcut when & = meet, brute force otherwise; a false
  /// answer always comes with the canonical brute-force witness.
  FlatVerdict is_flat(const FuzzySet& phi) const;
  FlatVerdict is_flat_brute_force(const FuzzySet& phi) const;
  /// phi(x) /\ phi(y) <= V_z phi(z) /\ A(x,z) /\ A(y,z); frames only.
  bool flat_frame_shortcut(const FuzzySet& phi) const;

  IrreducibleVerdict is_irreducible(const FuzzySet& phi) const;
  /// Finite quantales are continuous lattices with way-below = <=, so the
  /// approximation criterion collapses to the binding instance
  /// r = phi(x), s = phi(y), t = 1.
  ForwardCauchyVerdict is_forward_cauchy(const FuzzySet& phi) const;

  IdealReport classify(const FuzzySet& phi) const;
  bool belongs(const FuzzySet& phi, IdealClass c) const;
  /// Lower sets in canonical order filtered by the class decider.
  std::vector<FuzzySet> enumerate(IdealClass c) const;

 private:
  void require_pairs(std::size_t n, const char* what) const;
  std::optional<std::string> precondition(const FuzzySet& phi) const;

  QOrder base_;
  std::uint64_t budget_;
  mutable std::optional<std::vector<FuzzySet>> lower_;
  mutable std::optional<std::vector<FuzzySet>> upper_;
};

FlatVerdict is_flat(const QOrder& a, const FuzzySet& phi, std::uint64_t budget = kDefaultBudget);
IrreducibleVerdict is_irreducible(const QOrder& a, const FuzzySet& phi, std::uint64_t budget = kDefaultBudget);
ForwardCauchyVerdict is_forward_cauchy(const QOrder& a, const FuzzySet& phi);
IdealReport classify_ideal(const QOrder& a, const FuzzySet& phi, std::uint64_t budget = kDefaultBudget);
std::vector<FuzzySet> enumerate_ideals(const QOrder& a, IdealClass c, std::uint64_t budget = kDefaultBudget);

}  // namespace qideal

#endif  // QIDEAL_IDEAL_HPP_
