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

#ifndef QIDEAL_FUZZY_HPP_
#define QIDEAL_FUZZY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qideal/error.hpp"
#include "qideal/qorder.hpp"
#include "qideal/quantale.hpp"

namespace qideal {

/// A fuzzy set is a value per carrier point, indexed like the base order.
template <Quantale Q>
using BasicFuzzySet = std::vector<typename Q::value_type>;
using FuzzySet = BasicFuzzySet<FiniteQuantale>;

using PointPair = std::pair<std::size_t, std::size_t>;

struct FuzzyClassification {
  bool lower = true;
  bool upper = true;
  bool inhabited = true;
  /// (x,y) with phi(y) & A(x,y) not <= phi(x).
  std::optional<PointPair> lower_witness;
  /// (x,y) with A(x,y) & phi(x) not <= phi(y).
  std::optional<PointPair> upper_witness;
};

class NotLower : public std::invalid_argument {
 public:
  NotLower(std::size_t x, std::size_t y)
      : std::invalid_argument("fuzzy set is not a lower set"), witness{x, y} {}
  PointPair witness;
};

class NotUpper : public std::invalid_argument {
 public:
  NotUpper(std::size_t x, std::size_t y)
      : std::invalid_argument("fuzzy set is not an upper set"), witness{x, y} {}
  PointPair witness;
};

template <Quantale Q>
void require_base(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  if (phi.size() != a.size()) throw BaseMismatch("fuzzy set size does not match its base");
}

template <Quantale Q>
std::optional<PointPair> lower_violation(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  const Q& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!q.leq(q.tensor(phi[y], a.hom(x, y)), phi[x])) return PointPair{x, y};
  return std::nullopt;
}

template <Quantale Q>
std::optional<PointPair> upper_violation(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  const Q& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!q.leq(q.tensor(a.hom(x, y), phi[x]), phi[y])) return PointPair{x, y};
  return std::nullopt;
}

template <Quantale Q>
bool is_lower(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  return !lower_violation(a, phi);
}

template <Quantale Q>
bool is_upper(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  return !upper_violation(a, phi);
}

/// V_x phi(x) = 1.
template <Quantale Q>
bool is_inhabited(const Q& q, const BasicFuzzySet<Q>& phi) {
  auto acc = q.bottom();
  for (const auto& v : phi) acc = q.join(acc, v);
  return q.eq(acc, q.top());
}

template <Quantale Q>
FuzzyClassification classify_fuzzy_set(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  require_base(a, phi);
  FuzzyClassification c;
  c.lower_witness = lower_violation(a, phi);
  c.upper_witness = upper_violation(a, phi);
  c.lower = !c.lower_witness;
  c.upper = !c.upper_witness;
  c.inhabited = is_inhabited(a.quantale(), phi);
  return c;
}

/// sub(phi1, phi2) = /\_x phi1(x) -> phi2(x). No base check.
template <Quantale Q>
typename Q::value_type sub_unchecked(const Q& q, const BasicFuzzySet<Q>& phi1, const BasicFuzzySet<Q>& phi2) {
  auto acc = q.top();
  for (std::size_t x = 0; x < phi1.size(); ++x) acc = q.meet(acc, q.residuate(phi1[x], phi2[x]));
  return acc;
}

/// Fuzzy inclusion degree.
template <Quantale Q>
typename Q::value_type sub_degree(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi1,
                                  const BasicFuzzySet<Q>& phi2) {
  require_base(a, phi1);
  require_base(a, phi2);
  return sub_unchecked(a.quantale(), phi1, phi2);
}

/// V_x phi(x) & psi(x). No lower/upper check.
template <Quantale Q>
typename Q::value_type tensor_unchecked(const Q& q, const BasicFuzzySet<Q>& phi, const BasicFuzzySet<Q>& psi) {
  auto acc = q.bottom();
  for (std::size_t x = 0; x < phi.size(); ++x) acc = q.join(acc, q.tensor(phi[x], psi[x]));
  return acc;
}

/// Degree to which a lower set meets an upper set. Throws NotLower/NotUpper.
template <Quantale Q>
typename Q::value_type tensor_degree(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi,
                                     const BasicFuzzySet<Q>& psi) {
  require_base(a, phi);
  require_base(a, psi);
  if (auto w = lower_violation(a, phi)) throw NotLower(w->first, w->second);
  if (auto w = upper_violation(a, psi)) throw NotUpper(w->first, w->second);
  return tensor_unchecked(a.quantale(), phi, psi);
}

/// y(a) = A(-, a).
template <Quantale Q>
BasicFuzzySet<Q> principal(const BasicQOrder<Q>& a, std::size_t point) {
  BasicFuzzySet<Q> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a.hom(x, point);
  return out;
}

/// A(a, -), the principal upper set.
template <Quantale Q>
BasicFuzzySet<Q> principal_upper(const BasicQOrder<Q>& a, std::size_t point) {
  BasicFuzzySet<Q> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a.hom(point, x);
  return out;
}

template <Quantale Q>
BasicFuzzySet<Q> constant_set(const BasicQOrder<Q>& a, typename Q::value_type p) {
  return BasicFuzzySet<Q>(a.size(), p);
}

// Pointwise operations.

template <Quantale Q>
BasicFuzzySet<Q> pointwise_join(const Q& q, const BasicFuzzySet<Q>& a, const BasicFuzzySet<Q>& b) {
  BasicFuzzySet<Q> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = q.join(a[i], b[i]);
  return out;
}

template <Quantale Q>
BasicFuzzySet<Q> pointwise_meet(const Q& q, const BasicFuzzySet<Q>& a, const BasicFuzzySet<Q>& b) {
  BasicFuzzySet<Q> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = q.meet(a[i], b[i]);
  return out;
}

/// p & phi.
template <Quantale Q>
BasicFuzzySet<Q> scale(const Q& q, typename Q::value_type p, const BasicFuzzySet<Q>& phi) {
  BasicFuzzySet<Q> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = q.tensor(p, phi[i]);
  return out;
}

/// p -> phi.
template <Quantale Q>
BasicFuzzySet<Q> implies_from(const Q& q, typename Q::value_type p, const BasicFuzzySet<Q>& phi) {
  BasicFuzzySet<Q> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = q.residuate(p, phi[i]);
  return out;
}

/// phi -> p.
template <Quantale Q>
BasicFuzzySet<Q> implies_to(const Q& q, const BasicFuzzySet<Q>& phi, typename Q::value_type p) {
  BasicFuzzySet<Q> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = q.residuate(phi[i], p);
  return out;
}

/// Pointwise negation (x -> 0).
template <Quantale Q>
BasicFuzzySet<Q> negation(const Q& q, const BasicFuzzySet<Q>& phi) {
  return implies_to(q, phi, q.bottom());
}

template <Quantale Q>
bool same_values(const Q& q, const BasicFuzzySet<Q>& a, const BasicFuzzySet<Q>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!q.eq(a[i], b[i])) return false;
  return true;
}

enum class Direction { Forward, Backward };

/// f->(phi)(y) = V_x phi(x) & B(y, f x) (phi on A) or f<-(psi) = psi o f
/// (psi on B). The pair satisfies sub_B(f->phi, psi) = sub_A(phi, f<-psi).
template <Quantale Q>
BasicFuzzySet<Q> transport(const BasicQOrder<Q>& a, const BasicQOrder<Q>& b, const QMap& f,
                           const BasicFuzzySet<Q>& phi, Direction dir) {
  if (f.size() != a.size()) throw BaseMismatch("map must be total on its source");
  for (auto v : f)
    if (v >= b.size()) throw BaseMismatch("map leaves its target");
  const Q& q = a.quantale();
  if (dir == Direction::Forward) {
    require_base(a, phi);
    BasicFuzzySet<Q> out(b.size(), q.bottom());
    for (std::size_t y = 0; y < b.size(); ++y)
      for (std::size_t x = 0; x < a.size(); ++x) out[y] = q.join(out[y], q.tensor(phi[x], b.hom(y, f[x])));
    return out;
  }
  require_base(b, phi);
  BasicFuzzySet<Q> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = phi[f[x]];
  return out;
}

/// Suprema of a lower set: every s with A(s,x) = sub(phi, y(x)) for all x.
/// Empty means no supremum; more than one happens only in non-separated bases.
/// Throws NotLower.
template <Quantale Q>
std::vector<std::size_t> suprema(const BasicQOrder<Q>& a, const BasicFuzzySet<Q>& phi) {
  require_base(a, phi);
  if (auto w = lower_violation(a, phi)) throw NotLower(w->first, w->second);
  const Q& q = a.quantale();
  std::vector<typename Q::value_type> target(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) target[x] = sub_unchecked(q, phi, principal(a, x));
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (std::size_t x = 0; x < a.size() && ok; ++x) ok = q.eq(a.hom(s, x), target[x]);
    if (ok) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration (finite backend)

enum class SetKind { Lower, Upper };

/// All lower (or upper) sets of A in lexicographic order of the value
/// vectors (first point most significant, then element index). Throws
/// BudgetExceeded when |Q|^|A| exceeds the budget.
std::vector<FuzzySet> enumerate_monotone_sets(const QOrder& a, SetKind kind,
                                              std::uint64_t budget = kDefaultBudget);

/// All |Q|^|A| fuzzy sets in lexicographic order.
std::vector<FuzzySet> enumerate_all_sets(const QOrder& a, std::uint64_t budget = kDefaultBudget);

}  // namespace qideal

#endif  // QIDEAL_FUZZY_HPP_
