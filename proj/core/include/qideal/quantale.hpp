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

#ifndef QIDEAL_QUANTALE_HPP_
#define QIDEAL_QUANTALE_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qideal/rational.hpp"

namespace qideal {

/// Index of an element of a finite quantale.
using Elem = std::uint16_t;

/// Truth-value algebra interface shared by the exact finite backend and the
/// unit-interval backend. Quantales here are commutative and integral.
template <class Q>
concept Quantale = requires(const Q& q, typename Q::value_type a, typename Q::value_type b) {
  { q.top() } -> std::same_as<typename Q::value_type>;
  { q.bottom() } -> std::same_as<typename Q::value_type>;
  { q.leq(a, b) } -> std::same_as<bool>;
  { q.eq(a, b) } -> std::same_as<bool>;
  { q.join(a, b) } -> std::same_as<typename Q::value_type>;
  { q.meet(a, b) } -> std::same_as<typename Q::value_type>;
  { q.tensor(a, b) } -> std::same_as<typename Q::value_type>;
  { q.residuate(a, b) } -> std::same_as<typename Q::value_type>;
};

// ---------------------------------------------------------------------------
// Finite backend

/// Input tables for build_finite_quantale; elements are referenced by label.
struct QuantaleSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::string>> tensor;
  std::string unit;
  /// Optional exact values (chains); same length as elements when present.
  std::vector<Rational> values;
};

enum class QuantaleLaw {
  MalformedTables,
  NotALattice,
  NotAssociative,
  NotCommutative,
  NotIntegral,
  NotDistributive,
  ChainNotClosed,
};

std::string_view to_string(QuantaleLaw law);

/// A rejected quantale input. The witness lists the labels of the offending
/// elements (one to three of them, depending on the law).
class QuantaleError : public std::invalid_argument {
 public:
  QuantaleError(QuantaleLaw law, std::vector<std::string> witness, const std::string& detail);

  QuantaleLaw law() const { return law_; }
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  QuantaleLaw law_;
  std::vector<std::string> witness_;
};

/// Exact finite commutative integral quantale. All operations are table
/// lookups; join/meet/residuation tables are derived at construction.
class FiniteQuantale {
 public:
  using value_type = Elem;

  /// Validates every law and derives r(p,q) = V{s : p&s <= q}.
  /// Throws QuantaleError with the first violated law and a witness.
  static FiniteQuantale build(const QuantaleSpec& spec);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(Elem e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  /// Like find() but throws std::out_of_range.
  Elem at(std::string_view label) const;
  /// Exact value of a chain element, when the quantale was built from one.
  std::optional<Rational> value(Elem e) const;
  bool has_values() const { return !values_.empty(); }
  /// Element carrying this exact value, if any.
  std::optional<Elem> find_value(const Rational& v) const;

  Elem top() const { return top_; }
  Elem bottom() const { return bottom_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)]; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[idx(a, b)]; }
  Elem residuate(Elem a, Elem b) const { return residuum_[idx(a, b)]; }
  Elem negate(Elem a) const { return residuum_[idx(a, bottom_)]; }

  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;

  /// Elements in index order; handy for range-for over the carrier.
  std::vector<Elem> elements() const;

  bool is_chain() const;
  /// & coincides with binary meet.
  bool is_frame() const;

  friend bool operator==(const FiniteQuantale& a, const FiniteQuantale& b);

 private:
  FiniteQuantale() = default;
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * labels_.size() + b; }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Rational> values_;
  std::vector<bool> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> tensor_;
  std::vector<Elem> residuum_;
  Elem top_ = 0;
  Elem bottom_ = 0;
};

/// Same as FiniteQuantale::build.
FiniteQuantale build_finite_quantale(const QuantaleSpec& spec);

/// Four-element Boolean algebra {0,a,b,1} with & = meet.
FiniteQuantale boolean4();
/// Two-element Boolean algebra {0,1}; identical to lukasiewicz_chain(2).
FiniteQuantale boolean2();
/// Chains on {0, 1/(n-1), ..., 1} with exact rational arithmetic. Each
/// throws QuantaleError(ChainNotClosed) if the grid is not closed under the
/// tensor or its closed-form residuum.
FiniteQuantale lukasiewicz_chain(int n);
FiniteQuantale godel_chain(int n);
FiniteQuantale nilpotent_minimum_chain(int n);
FiniteQuantale product_chain(int n);

// ---------------------------------------------------------------------------
// Unit-interval backend

enum class TNorm { Minimum, Product, Lukasiewicz, NilpotentMinimum, OrdinalSum };

std::string_view to_string(TNorm t);
std::optional<TNorm> parse_tnorm(std::string_view name);

/// One summand of an ordinal sum: on [lo,hi]^2 the t-norm is `kind`
/// (Lukasiewicz or Product) rescaled; elsewhere it is min.
struct OrdinalPiece {
  double lo = 0.0;
  double hi = 1.0;
  TNorm kind = TNorm::Lukasiewicz;

  friend bool operator==(const OrdinalPiece&, const OrdinalPiece&) = default;
};

/// ([0,1], &) for a catalog t-norm. Residuation comes from closed forms only.
class IntervalQuantale {
 public:
  using value_type = double;
  static constexpr double kDefaultTolerance = 1e-9;

  explicit IntervalQuantale(TNorm t, double tolerance = kDefaultTolerance);
  /// Pieces must lie in [0,1], have lo < hi, disjoint interiors, and kind
  /// Lukasiewicz or Product. Throws std::invalid_argument otherwise.
  static IntervalQuantale ordinal_sum(std::vector<OrdinalPiece> pieces,
                                      double tolerance = kDefaultTolerance);

  TNorm tnorm() const { return tnorm_; }
  double tolerance() const { return tolerance_; }
  const std::vector<OrdinalPiece>& pieces() const { return pieces_; }
  std::string name() const;

  double top() const { return 1.0; }
  double bottom() const { return 0.0; }
  bool leq(double a, double b) const { return a <= b + tolerance_; }
  bool eq(double a, double b) const { return a - b <= tolerance_ && b - a <= tolerance_; }
  double join(double a, double b) const { return a < b ? b : a; }
  double meet(double a, double b) const { return a < b ? a : b; }
  double tensor(double a, double b) const;
  double residuate(double a, double b) const;
  double negate(double a) const { return residuate(a, 0.0); }

  /// True for every catalog t-norm except the nilpotent minimum.
  bool is_continuous() const;
  /// Ordinal-sum decomposition of a continuous catalog t-norm (min has no
  /// pieces; product and Lukasiewicz are a single piece over [0,1]).
  std::vector<OrdinalPiece> decomposition() const;

  friend bool operator==(const IntervalQuantale&, const IntervalQuantale&) = default;

 private:
  IntervalQuantale() = default;

  TNorm tnorm_ = TNorm::Minimum;
  double tolerance_ = kDefaultTolerance;
  std::vector<OrdinalPiece> pieces_;
};

static_assert(Quantale<FiniteQuantale>);
static_assert(Quantale<IntervalQuantale>);

/// Catalog request: boolean4, boolean2, lukasiewicz_chain, godel_chain,
/// nilpotent_minimum_chain, product_chain (param "n"), interval (param
/// "tnorm"), ordinal_sum (pieces).
struct CatalogRequest {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<OrdinalPiece> pieces;
};

using AnyQuantale = std::variant<FiniteQuantale, IntervalQuantale>;

/// Throws std::invalid_argument for unknown names or bad params and
/// QuantaleError(ChainNotClosed) for non-closed grids.
AnyQuantale standard_quantale(const CatalogRequest& request);

// ---------------------------------------------------------------------------
// Structural predicates

template <class V>
struct QuantaleProps {
  bool is_integral = true;
  bool is_commutative = true;
  bool is_prelinear = false;
  bool is_divisible = false;
  bool has_double_negation = false;
  /// Only decided on the interval backend.
  std::optional<bool> is_archimedean;
  /// All idempotents (finite) or the idempotents on the 1/64 grid (interval).
  std::vector<V> idempotents;
  bool is_meet_continuous = true;
  bool is_dually_meet_continuous = true;
};

/// Exhaustive checks of the defining identities.
QuantaleProps<Elem> quantale_properties(const FiniteQuantale& q);
/// Catalog facts; idempotents sampled on the 1/64 grid.
QuantaleProps<double> quantale_properties(const IntervalQuantale& q);

/// On finite lattices way-below is <=; on [0,1] it is p = 0 or p < r.
bool way_below(const FiniteQuantale& q, Elem p, Elem r);
bool way_below(const IntervalQuantale& q, double p, double r);

}  // namespace qideal

#endif  // QIDEAL_QUANTALE_HPP_
