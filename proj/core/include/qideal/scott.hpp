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

#ifndef QIDEAL_SCOTT_HPP_
#define QIDEAL_SCOTT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qideal/fuzzy.hpp"
#include "qideal/ideal.hpp"
#include "qideal/qorder.hpp"

namespace qideal {

enum class ScottMode { Topology, Cotopology };

std::string_view to_string(ScottMode m);
/// Accepts top/topology and cotop/cotopology.
std::optional<ScottMode> parse_scott_mode(std::string_view name);

struct ScottVerdict {
  bool member = false;
  std::string reason;
  /// Failing (x,y) of the upper/lower set condition.
  std::optional<PointPair> order_witness;
  /// Class ideal and one of its suprema where the defining equation fails.
  std::optional<FuzzySet> ideal;
  std::optional<std::size_t> supremum;
};

/// Class ideals of a base together with all their suprema, shared by the
/// membership tests of one base.
class ScottContext {
 public:
  ScottContext(QOrder base, IdealClass cls, std::uint64_t budget = kDefaultBudget);

  const QOrder& base() const { return base_; }
  IdealClass cls() const { return cls_; }
  std::uint64_t budget() const { return budget_; }
  const std::vector<FuzzySet>& ideals() const { return ideals_; }
  /// suprema()[i] lists every supremum of ideals()[i] (possibly none).
  const std::vector<std::vector<std::size_t>>& suprema() const { return suprema_; }

  /// Topology: psi upper and psi(s) = phi (x) psi. Cotopology: psi lower and
  /// sub(phi, psi) = psi(s). Both for every class ideal phi and supremum s.
  ScottVerdict member(const FuzzySet& psi, ScottMode mode) const;
  /// All members in canonical order.
  std::vector<FuzzySet> members(ScottMode mode) const;

 private:
  QOrder base_;
  IdealClass cls_;
  std::uint64_t budget_;
  std::vector<FuzzySet> ideals_;
  std::vector<std::vector<std::size_t>> suprema_;
};

ScottVerdict is_scott_member(const QOrder& a, const FuzzySet& psi, IdealClass cls, ScottMode mode,
                             std::uint64_t budget = kDefaultBudget);

/// One axiom of a (co)topology, with the members that break it.
struct AxiomCheck {
  bool holds = true;
  /// Offending members (one or two), or the missing constant/result.
  std::vector<FuzzySet> witness;
  /// Scalar p for the constant and p&/p-> axioms.
  std::optional<Elem> scalar;
};

/// O1..O5 for a topology or C1..C5 for a cotopology, index 0 = axiom 1.
struct StructureAxioms {
  std::array<AxiomCheck, 5> axioms;
  /// Axioms 1-4.
  bool stratified() const;
  bool co_stratified() const { return axioms[4].holds; }
  /// Stratified and co-stratified.
  bool strong() const { return stratified() && co_stratified(); }
};

struct ScottStructure {
  QOrder base;
  ScottMode mode = ScottMode::Topology;
  IdealClass cls = IdealClass::Flat;
  std::vector<FuzzySet> members;
  StructureAxioms axioms;
};

/// Closure checks over the member set: constants, pairwise meets and joins,
/// the meet and join of all members, and the p& / p-> actions.
StructureAxioms check_structure_axioms(const QOrder& base, ScottMode mode, const std::vector<FuzzySet>& members);

ScottStructure generate_scott_structure(const QOrder& a, IdealClass cls, ScottMode mode,
                                        std::uint64_t budget = kDefaultBudget);
ScottStructure generate_scott_structure(const ScottContext& ctx, ScottMode mode);

struct CocontinuityReport {
  bool order_preserving = false;
  std::optional<PointPair> order_witness;
  /// Order preserving and sending each supremum of a class ideal to a
  /// supremum of its forward image.
  bool cocontinuous = false;
  std::optional<FuzzySet> ideal_witness;
  /// lambda o f closed for every closed lambda on the target.
  bool closed_preimage = false;
  std::optional<FuzzySet> closed_witness;
  bool agree() const { return cocontinuous == closed_preimage; }
};

struct ContinuityCheck {
  bool continuous = true;
  /// Open set of the target whose preimage is not open.
  std::optional<FuzzySet> open_witness;
};

/// Precomputes the ideals, the closed sets and the open sets of both ends so
/// that many maps A -> B can be swept.
class MapChecker {
 public:
  MapChecker(QOrder source, QOrder target, IdealClass cls, std::uint64_t budget = kDefaultBudget);

  const ScottContext& source() const { return source_; }
  const ScottContext& target() const { return target_; }

  CocontinuityReport cocontinuity(const QMap& f) const;
  /// Preimages of target opens are source opens.
  ContinuityCheck continuity(const QMap& f) const;

 private:
  ScottContext source_;
  ScottContext target_;
  std::vector<FuzzySet> target_closed_;
  std::vector<FuzzySet> target_open_;
  std::vector<FuzzySet> source_closed_;
  std::vector<FuzzySet> source_open_;
};

CocontinuityReport cocontinuity_equivalence(const QOrder& a, const QOrder& b, const QMap& f, IdealClass cls,
                                            std::uint64_t budget = kDefaultBudget);

/// Every map from an m-point carrier to an n-point carrier in lexicographic
/// order. Throws BudgetExceeded when n^m exceeds the budget.
std::vector<QMap> all_maps(std::size_t m, std::size_t n, std::uint64_t budget = kDefaultBudget);

struct NegationDuality {
  bool holds = true;
  /// Member of one side whose negation is missing on the other side.
  std::optional<FuzzySet> witness;
  ScottMode witness_side = ScottMode::Topology;
  std::size_t open_count = 0;
  std::size_t closed_count = 0;
};

/// Compares the cotopology for `closed_cls` with the negations of the
/// topology for `open_cls`, member by member.
NegationDuality check_negation_duality(const QOrder& a, IdealClass open_cls, IdealClass closed_cls,
                                       std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Unit-interval checks on a grid

class GridTooCoarse : public std::invalid_argument {
 public:
  explicit GridTooCoarse(std::size_t points)
      : std::invalid_argument("grid has " + std::to_string(points) + " points, need at least " +
                              std::to_string(kMinPoints)),
        points_(points) {}
  static constexpr std::size_t kMinPoints = 17;
  std::size_t points() const { return points_; }

 private:
  std::size_t points_;
};

class DecompositionMismatch : public std::invalid_argument {
 public:
  DecompositionMismatch(double endpoint, const std::string& what)
      : std::invalid_argument(what), endpoint_(endpoint) {}
  double endpoint() const { return endpoint_; }

 private:
  double endpoint_;
};

using UnitFunction = std::function<double(double)>;

/// i/(n-1) for i = 0..n-1.
std::vector<double> unit_grid(std::size_t points);

struct IntervalClosedReport {
  bool closed = false;
  bool order_preserving = true;
  /// Grid pair (x,y) with x->y > phi(x)->phi(y).
  std::optional<std::pair<double, double>> order_witness;
  bool right_continuous = true;
  std::optional<double> continuity_witness;
  std::size_t grid_points = 0;
};

/// Grid check of: phi is order preserving ([0,1],d_L) -> ([0,1],d_L) and right
/// continuous. Right continuity compares phi(x) with phi(x + 2^-40). Throws
/// GridTooCoarse below 17 points.
IntervalClosedReport interval_dR_scott_closed(const IntervalQuantale& q, const UnitFunction& phi,
                                              std::size_t grid_points = 257);

struct GenerationReport {
  double max_deviation = 0.0;
  double worst_point = 0.0;
  bool within_tolerance = false;
  /// How many g_x fell in each case (in-piece above, in-piece fixed, outside).
  std::array<std::size_t, 3> case_counts{};
  std::size_t grid_points = 0;
};

/// g_x(y) for the three-case family built from phi and the decomposition.
double generator_value(const IntervalQuantale& q, const std::vector<OrdinalPiece>& pieces, const UnitFunction& phi,
                       double x, double y, int* case_index = nullptr);

/// max over the grid of |phi(y) - /\_x g_x(y)|, the infimum over grid points
/// and right probes y + 2^-k (k = 30..40). Requires phi >= id and phi closed
/// on the grid (std::invalid_argument otherwise); throws DecompositionMismatch
/// when a piece endpoint is not idempotent.
GenerationReport verify_ordinal_sum_generation(const IntervalQuantale& q, const UnitFunction& phi,
                                               std::size_t grid_points = 257);

enum class LimitFamily { Principal, RightLimit };

/// Sequences generating the two irreducible-ideal families of ([0,1], d_R):
/// constant at a, or a + 2^-k (k = 1..depth, a < 1).
std::vector<double> family_sequence(LimitFamily family, double a, int depth = 50);

struct SequenceIdealReport {
  /// Every pair j <= k of the sampled sequence has d_R(x_j, x_k) = 1.
  bool forward_cauchy = false;
  /// Lower set of ([0,1], d_R) on the grid.
  bool lower = false;
  double max_deviation = 0.0;
  double worst_point = 0.0;
  bool matches = false;
  std::vector<double> values;
};

/// The lower set V_i /\_{j>=i} (x_j -> x) of ([0,1], d_R) generated by a
/// sampled sequence, compared on the grid with an expected closed form.
SequenceIdealReport check_sequence_ideal(const IntervalQuantale& q, const std::vector<double>& sequence,
                                         const UnitFunction& expected, std::size_t grid_points = 257);

}  // namespace qideal

#endif  // QIDEAL_SCOTT_HPP_
