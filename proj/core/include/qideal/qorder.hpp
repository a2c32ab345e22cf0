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

#ifndef QIDEAL_QORDER_HPP_
#define QIDEAL_QORDER_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qideal/error.hpp"
#include "qideal/quantale.hpp"

namespace qideal {

class EmptyCarrier : public std::invalid_argument {
 public:
  EmptyCarrier() : std::invalid_argument("Q-ordered set must have a nonempty carrier") {}
};

/// Finite carrier with an explicit hom matrix A(x,y) into the quantale.
/// Construction does not validate; see validate_qorder().
template <Quantale Q>
class BasicQOrder {
 public:
  using value_type = typename Q::value_type;

  BasicQOrder(Q quantale, std::vector<std::string> labels, std::vector<value_type> hom)
      : quantale_(std::move(quantale)), labels_(std::move(labels)), hom_(std::move(hom)) {
    if (hom_.size() != labels_.size() * labels_.size())
      throw BaseMismatch("hom matrix must be |A| x |A|");
  }

  const Q& quantale() const { return quantale_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }
  std::size_t at(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw std::out_of_range("Q-ordered set has no element '" + std::string(label) + "'");
  }

  value_type hom(std::size_t x, std::size_t y) const { return hom_[x * labels_.size() + y]; }
  const std::vector<value_type>& hom_matrix() const { return hom_; }

  friend bool operator==(const BasicQOrder& a, const BasicQOrder& b) {
    return a.labels_ == b.labels_ && a.hom_ == b.hom_ && a.quantale_ == b.quantale_;
  }

 private:
  Q quantale_;
  std::vector<std::string> labels_;
  std::vector<value_type> hom_;
};

using QOrder = BasicQOrder<FiniteQuantale>;
using SampledQOrder = BasicQOrder<IntervalQuantale>;

/// First failing reflexivity point or transitivity triple.
template <class V>
struct OrderViolation {
  enum class Kind { Reflexivity, Transitivity };
  Kind kind;
  std::size_t x = 0, y = 0, z = 0;
  /// Reflexivity: lhs = A(x,x). Transitivity: lhs = A(y,z)&A(x,y), rhs = A(x,z).
  V lhs{};
  V rhs{};
};

template <Quantale Q>
std::optional<OrderViolation<typename Q::value_type>> validate_qorder(const BasicQOrder<Q>& a) {
  using V = typename Q::value_type;
  if (a.size() == 0) throw EmptyCarrier();
  const Q& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!q.eq(a.hom(x, x), q.top()))
      return OrderViolation<V>{OrderViolation<V>::Kind::Reflexivity, x, x, x, a.hom(x, x), q.top()};
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      for (std::size_t z = 0; z < a.size(); ++z) {
        const V lhs = q.tensor(a.hom(y, z), a.hom(x, y));
        if (!q.leq(lhs, a.hom(x, z)))
          return OrderViolation<V>{OrderViolation<V>::Kind::Transitivity, x, y, z, lhs, a.hom(x, z)};
      }
  return std::nullopt;
}

/// Isomorphic points (A(x,y) = A(y,x) = 1) are equal.
template <Quantale Q>
bool is_separated(const BasicQOrder<Q>& a) {
  const Q& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (q.eq(a.hom(x, y), q.top()) && q.eq(a.hom(y, x), q.top())) return false;
  return true;
}

/// A^op: hom flipped.
template <Quantale Q>
BasicQOrder<Q> opposite(const BasicQOrder<Q>& a) {
  std::vector<typename Q::value_type> hom(a.size() * a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) hom[x * a.size() + y] = a.hom(y, x);
  return BasicQOrder<Q>(a.quantale(), a.labels(), std::move(hom));
}

// ---------------------------------------------------------------------------
// Standard constructions over a finite quantale

/// (Q, d_L) with d_L(p,q) = p -> q.
QOrder left_order(const FiniteQuantale& q);
/// (Q, d_R) with d_R(p,q) = q -> p.
QOrder right_order(const FiniteQuantale& q);
/// n points, A(x,y) = 1 iff x = y else 0. Labels x0, x1, ...
QOrder discrete_order(const FiniteQuantale& q, std::size_t n);
/// Crisp order from a boolean relation (true entries map to top, others to bottom).
QOrder crisp_order(const FiniteQuantale& q, std::vector<std::string> labels,
                   const std::vector<std::vector<bool>>& leq);
/// Q^X with the fuzzy inclusion order sub_X. Carrier enumerated
/// lexicographically; throws BudgetExceeded when |Q|^|X| > budget.
QOrder power_order(const FiniteQuantale& q, const std::vector<std::string>& x_labels,
                   std::uint64_t budget = kDefaultBudget);

/// Sub-Q-order of ([0,1], d_L) or ([0,1], d_R) on the given sample points.
SampledQOrder sampled_left_order(const IntervalQuantale& q, const std::vector<double>& points);
SampledQOrder sampled_right_order(const IntervalQuantale& q, const std::vector<double>& points);

// ---------------------------------------------------------------------------
// Maps, adjunctions, distributors

/// Total function on carrier indices.
using QMap = std::vector<std::size_t>;

struct MapReport {
  bool order_preserving = true;
  /// (x1,x2) with A(x1,x2) not <= B(f x1, f x2).
  std::optional<std::pair<std::size_t, std::size_t>> order_witness;
  /// Present only when a candidate right adjoint was supplied.
  std::optional<bool> adjoint;
  /// (x,y) with A(x, g y) != B(f x, y).
  std::optional<std::pair<std::size_t, std::size_t>> adjoint_witness;
};

/// Checks that f: A -> B preserves order and, if g: B -> A is given, that
/// A(x, g(y)) = B(f(x), y) for all x, y (then f is left adjoint to g).
template <Quantale Q>
MapReport check_map_and_adjunction(const BasicQOrder<Q>& a, const BasicQOrder<Q>& b, const QMap& f,
                                   const std::optional<QMap>& g = std::nullopt) {
  if (!(a.quantale() == b.quantale())) throw QuantaleMismatch("maps must stay within one quantale");
  if (f.size() != a.size()) throw BaseMismatch("map f must be total on its source");
  for (auto v : f)
    if (v >= b.size()) throw BaseMismatch("map f leaves its target");
  const Q& q = a.quantale();
  MapReport r;
  for (std::size_t x1 = 0; x1 < a.size() && r.order_preserving; ++x1)
    for (std::size_t x2 = 0; x2 < a.size(); ++x2)
      if (!q.leq(a.hom(x1, x2), b.hom(f[x1], f[x2]))) {
        r.order_preserving = false;
        r.order_witness = std::pair{x1, x2};
        break;
      }
  if (g) {
    if (g->size() != b.size()) throw BaseMismatch("map g must be total on its source");
    for (auto v : *g)
      if (v >= a.size()) throw BaseMismatch("map g leaves its target");
    r.adjoint = true;
    for (std::size_t x = 0; x < a.size() && *r.adjoint; ++x)
      for (std::size_t y = 0; y < b.size(); ++y)
        if (!q.eq(a.hom(x, (*g)[y]), b.hom(f[x], y))) {
          r.adjoint = false;
          r.adjoint_witness = std::pair{x, y};
          break;
        }
  }
  return r;
}

/// phi: A -/-> B as a |A| x |B| matrix phi(a,b).
template <class V>
struct QDistributor {
  std::size_t rows = 0;  // |A|
  std::size_t cols = 0;  // |B|
  std::vector<V> m;

  V operator()(std::size_t a, std::size_t b) const { return m[a * cols + b]; }
  friend bool operator==(const QDistributor&, const QDistributor&) = default;
};

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// B(b,b') & phi(a,b) & A(a',a) <= phi(a',b') for all a, a', b, b'.
template <Quantale Q>
bool is_distributor(const BasicQOrder<Q>& a, const BasicQOrder<Q>& b,
                    const QDistributor<typename Q::value_type>& phi) {
  if (phi.rows != a.size() || phi.cols != b.size()) return false;
  const Q& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t x2 = 0; x2 < a.size(); ++x2)
      for (std::size_t y = 0; y < b.size(); ++y)
        for (std::size_t y2 = 0; y2 < b.size(); ++y2)
          if (!q.leq(q.tensor(q.tensor(b.hom(y, y2), phi(x, y)), a.hom(x2, x)), phi(x2, y2))) return false;
  return true;
}

/// The hom distributor A(-,-): A -/-> A, the identity for composition.
template <Quantale Q>
QDistributor<typename Q::value_type> hom_distributor(const BasicQOrder<Q>& a) {
  return {a.size(), a.size(), a.hom_matrix()};
}

/// (psi o phi)(a,c) = V_b psi(b,c) & phi(a,b) for phi: A -/-> B, psi: B -/-> C.
template <Quantale Q>
QDistributor<typename Q::value_type> compose_distributors(const Q& q,
                                                          const QDistributor<typename Q::value_type>& psi,
                                                          const QDistributor<typename Q::value_type>& phi) {
  if (phi.cols != psi.rows) throw ShapeMismatch("distributor composition needs a shared middle object");
  QDistributor<typename Q::value_type> out{phi.rows, psi.cols, {}};
  out.m.assign(out.rows * out.cols, q.bottom());
  for (std::size_t a = 0; a < phi.rows; ++a)
    for (std::size_t c = 0; c < psi.cols; ++c) {
      auto acc = q.bottom();
      for (std::size_t b = 0; b < phi.cols; ++b) acc = q.join(acc, q.tensor(psi(b, c), phi(a, b)));
      out.m[a * out.cols + c] = acc;
    }
  return out;
}

}  // namespace qideal

#endif  // QIDEAL_QORDER_HPP_
