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

#include "qideal/completion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qideal {

namespace {

std::optional<std::size_t> index_of(const std::vector<FuzzySet>& sorted, const FuzzySet& phi) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), phi);
  if (it == sorted.end() || *it != phi) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::string fuzzy_label(const FiniteQuantale& q, const FuzzySet& phi) {
  std::string s = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ",";
    s += q.label(phi[i]);
  }
  return s + ")";
}

IdealSpace ideal_space(const QOrder& a, IdealClass cls, std::uint64_t budget) {
  IdealDecider decider(a, budget);
  auto carrier = decider.enumerate(cls);
  const auto& q = a.quantale();
  const std::size_t n = carrier.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& phi : carrier) labels.push_back(fuzzy_label(q, phi));
  std::vector<Elem> hom(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = sub_unchecked(q, carrier[i], carrier[j]);

  std::vector<std::size_t> yoneda(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto idx = index_of(carrier, principal(a, x));
    if (!idx) throw std::logic_error("ideal space misses the principal ideal of " + a.label(x));
    yoneda[x] = *idx;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (hom[yoneda[x] * n + yoneda[y]] != a.hom(x, y))
        throw std::logic_error("Yoneda embedding is not fully faithful");

  QOrder order(q, std::move(labels), std::move(hom));
  return IdealSpace{a, cls, std::move(carrier), std::move(order), std::move(yoneda)};
}

FuzzySet weighted_join(const IdealSpace& space, const FuzzySet& lambda) {
  require_base(space.order, lambda);
  if (auto w = lower_violation(space.order, lambda)) throw NotLower(w->first, w->second);
  const auto& q = space.base.quantale();
  FuzzySet out(space.base.size(), q.bottom());
  for (std::size_t i = 0; i < space.carrier.size(); ++i)
    for (std::size_t x = 0; x < out.size(); ++x)
      out[x] = q.join(out[x], q.tensor(lambda[i], space.carrier[i][x]));
  return out;
}

SaturationReport check_saturation(const QOrder& a, IdealClass cls, std::uint64_t budget) {
  auto space = ideal_space(a, cls, budget);
  SaturationReport r;
  r.cls = cls;
  r.ideal_count = space.carrier.size();
  if (r.ideal_count > kIdealSpaceCap) throw BudgetExceeded("ideal space size", r.ideal_count, kIdealSpaceCap);
  IdealDecider outer(space.order, budget);
  IdealDecider inner(a, budget);
  const auto second = outer.enumerate(cls);
  r.second_level_count = second.size();
  for (const auto& lambda : second) {
    auto joined = weighted_join(space, lambda);
    if (!inner.belongs(joined, cls)) {
      r.saturated = false;
      r.violator = lambda;
      r.violator_join = std::move(joined);
      break;
    }
  }
  return r;
}

ContinuityReport check_completeness_continuity(const IdealSpace& space) {
  const QOrder& a = space.base;
  const std::size_t n = space.carrier.size();
  ContinuityReport r;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = suprema(a, space.carrier[i]);
    if (s.empty()) {
      r.complete = false;
      r.unbounded_ideal = space.carrier[i];
      r.sup_map.clear();
      return r;
    }
    r.sup_map.push_back(s.front());
  }
  QMap d(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < n && !found; ++c) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = space.order.hom(c, i) == a.hom(x, r.sup_map[i]);
      if (ok) found = c;
    }
    if (!found) {
      r.no_adjoint_at = x;
      return r;
    }
    d[x] = *found;
  }
  auto check = check_map_and_adjunction(a, space.order, d, std::optional<QMap>(r.sup_map));
  if (!check.order_preserving || !check.adjoint.value_or(false))
    throw std::logic_error("pointwise left adjoint failed the global adjunction check");
  r.continuous = true;
  r.left_adjoint = std::move(d);
  return r;
}

ContinuityReport check_completeness_continuity(const QOrder& a, IdealClass cls, std::uint64_t budget) {
  return check_completeness_continuity(ideal_space(a, cls, budget));
}

FreeContinuityReport check_free_continuity(const QOrder& a, IdealClass cls, std::uint64_t budget) {
  FreeContinuityReport r;
  auto first = ideal_space(a, cls, budget);
  r.ideal_count = first.carrier.size();
  if (r.ideal_count > kIdealSpaceCap) throw BudgetExceeded("ideal space size", r.ideal_count, kIdealSpaceCap);
  auto second = ideal_space(first.order, cls, budget);
  r.second_level_count = second.carrier.size();
  r.continuity = check_completeness_continuity(second);
  const auto& q = a.quantale();

  // sup L = L o y_A for every L in Phi(Phi(A)).
  r.sup_formula_holds = r.continuity.complete;
  for (std::size_t k = 0; k < second.carrier.size() && r.sup_formula_holds; ++k) {
    const auto& lambda = second.carrier[k];
    FuzzySet composite(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) composite[x] = lambda[first.yoneda[x]];
    if (first.carrier[r.continuity.sup_map[k]] != composite) {
      r.sup_formula_holds = false;
      r.sup_formula_violator = lambda;
    }
  }

  // d(phi) = y_A->(phi), where y_A->(phi)(psi) = V_x phi(x) & sub(psi, y(x)).
  if (r.continuity.continuous) {
    r.adjoint_matches_yoneda_image = true;
    const auto& d = *r.continuity.left_adjoint;
    for (std::size_t i = 0; i < first.carrier.size() && r.adjoint_matches_yoneda_image; ++i) {
      const auto& phi = first.carrier[i];
      FuzzySet image(first.carrier.size(), q.bottom());
      for (std::size_t j = 0; j < first.carrier.size(); ++j)
        for (std::size_t x = 0; x < a.size(); ++x)
          image[j] = q.join(image[j], q.tensor(phi[x], first.order.hom(j, first.yoneda[x])));
      if (second.carrier[d[i]] != image) {
        r.adjoint_matches_yoneda_image = false;
        r.mismatch = phi;
      }
    }
  }
  return r;
}

}  // namespace qideal
