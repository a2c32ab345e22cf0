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

// Reference computations that avoid the library's derived tables and fast
// paths: closed forms on exact rationals, residua by adjunction search, and
// ideal classes straight from their definitions over every fuzzy set.

#ifndef QIDEAL_TESTS_ORACLES_HPP_
#define QIDEAL_TESTS_ORACLES_HPP_

#include <algorithm>
#include <vector>

#include "qideal/fuzzy.hpp"
#include "qideal/ideal.hpp"
#include "qideal/qorder.hpp"
#include "qideal/quantale.hpp"
#include "qideal/rational.hpp"

namespace oracle {

using qideal::Elem;
using qideal::FiniteQuantale;
using qideal::FuzzySet;
using qideal::QOrder;
using qideal::Rational;

inline Rational one() { return Rational(1); }
inline Rational zero() { return Rational(0); }

inline Rational luk_tensor(Rational a, Rational b) { return qideal::max(zero(), a + b - one()); }
inline Rational luk_res(Rational a, Rational b) { return qideal::min(one(), one() - a + b); }
inline Rational godel_tensor(Rational a, Rational b) { return qideal::min(a, b); }
inline Rational godel_res(Rational a, Rational b) { return a <= b ? one() : b; }
inline Rational nm_tensor(Rational a, Rational b) { return a + b > one() ? qideal::min(a, b) : zero(); }
inline Rational nm_res(Rational a, Rational b) { return a <= b ? one() : qideal::max(one() - a, b); }

/// p -> r as the largest s with p & s <= r, found by scanning the carrier.
inline Elem residuum_by_search(const FiniteQuantale& q, Elem p, Elem r) {
  Elem best = q.bottom();
  for (Elem s : q.elements())
    if (q.leq(q.tensor(p, s), r)) best = q.join(best, s);
  return best;
}

inline bool lower(const QOrder& a, const FuzzySet& phi) {
  const auto& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!q.leq(q.tensor(phi[y], a.hom(x, y)), phi[x])) return false;
  return true;
}

inline bool upper(const QOrder& a, const FuzzySet& phi) {
  const auto& q = a.quantale();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!q.leq(q.tensor(a.hom(x, y), phi[x]), phi[y])) return false;
  return true;
}

inline Elem sub(const FiniteQuantale& q, const FuzzySet& a, const FuzzySet& b) {
  Elem r = q.top();
  for (std::size_t i = 0; i < a.size(); ++i) r = q.meet(r, residuum_by_search(q, a[i], b[i]));
  return r;
}

inline Elem tensor(const FiniteQuantale& q, const FuzzySet& a, const FuzzySet& b) {
  Elem r = q.bottom();
  for (std::size_t i = 0; i < a.size(); ++i) r = q.join(r, q.tensor(a[i], b[i]));
  return r;
}

inline bool inhabited(const FiniteQuantale& q, const FuzzySet& phi) {
  Elem r = q.bottom();
  for (auto v : phi) r = q.join(r, v);
  return r == q.top();
}

/// Every fuzzy set satisfying `keep`, from the raw |Q|^|A| product.
template <class Pred>
std::vector<FuzzySet> all_sets(const QOrder& a, Pred keep) {
  std::vector<FuzzySet> out;
  for (auto& s : qideal::enumerate_all_sets(a))
    if (keep(s)) out.push_back(s);
  return out;
}

/// Flatness from the definition, over all ordered pairs of upper sets.
inline bool flat(const QOrder& a, const FuzzySet& phi) {
  const auto& q = a.quantale();
  if (!lower(a, phi) || !inhabited(q, phi)) return false;
  auto ups = all_sets(a, [&](const FuzzySet& s) { return upper(a, s); });
  for (const auto& u : ups)
    for (const auto& v : ups) {
      FuzzySet m(u.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = q.meet(u[i], v[i]);
      if (tensor(q, phi, m) != q.meet(tensor(q, phi, u), tensor(q, phi, v))) return false;
    }
  return true;
}

/// Irreducibility from the definition, over all ordered pairs of lower sets.
inline bool irreducible(const QOrder& a, const FuzzySet& phi) {
  const auto& q = a.quantale();
  if (!lower(a, phi) || !inhabited(q, phi)) return false;
  auto lows = all_sets(a, [&](const FuzzySet& s) { return lower(a, s); });
  for (const auto& u : lows)
    for (const auto& v : lows) {
      FuzzySet j(u.size());
      for (std::size_t i = 0; i < j.size(); ++i) j[i] = q.join(u[i], v[i]);
      if (sub(q, phi, j) != q.join(sub(q, phi, u), sub(q, phi, v))) return false;
    }
  return true;
}

/// Forward Cauchy ideals as the lower sets generated by eventually periodic
/// sequences (tails of bounded length).
inline std::vector<FuzzySet> fc_by_sequences(const QOrder& a, std::size_t max_length = 4) {
  return qideal::sequence_generated_ideals(a, max_length);
}

template <class Pred>
std::vector<FuzzySet> sorted_filter(const QOrder& a, Pred keep) {
  auto v = all_sets(a, keep);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracle

#endif  // QIDEAL_TESTS_ORACLES_HPP_
