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

#include "qideal/ideal.hpp"

#include <algorithm>

namespace qideal {

std::string_view to_string(IdealClass c) {
  switch (c) {
    case IdealClass::ForwardCauchy: return "fc";
    case IdealClass::Flat: return "flat";
    case IdealClass::Irreducible: return "irr";
    case IdealClass::AllLower: return "all";
  }
  return "?";
}

std::optional<IdealClass> parse_ideal_class(std::string_view name) {
  if (name == "fc" || name == "forward_cauchy") return IdealClass::ForwardCauchy;
  if (name == "flat") return IdealClass::Flat;
  if (name == "irr" || name == "irreducible") return IdealClass::Irreducible;
  if (name == "all" || name == "lower") return IdealClass::AllLower;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sequences

FuzzySet ideal_from_sequence(const QOrder& a, const EventuallyPeriodicSequence& s) {
  if (s.cycle.empty()) throw std::invalid_argument("sequence cycle must be nonempty");
  for (auto v : s.prefix)
    if (v >= a.size()) throw std::invalid_argument("sequence entry outside the carrier");
  for (auto v : s.cycle)
    if (v >= a.size()) throw std::invalid_argument("sequence entry outside the carrier");
  const auto& q = a.quantale();
  // Every tail past the prefix sees each ordered pair of cycle entries at
  // positions j <= k (reversed pairs via the next period), and earlier tails
  // only add constraints, so the Cauchy degree is the meet over cycle pairs.
  const std::size_t p = s.prefix.size();
  const std::size_t c = s.cycle.size();
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (a.hom(s.cycle[i], s.cycle[j]) != q.top()) throw NotForwardCauchy(p + i, j >= i ? p + j : p + c + j);
  // Tails past the prefix all have the same meet; earlier tails are smaller.
  FuzzySet out(a.size(), q.top());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (auto v : s.cycle) out[x] = q.meet(out[x], a.hom(x, v));
  return out;
}

std::vector<FuzzySet> sequence_generated_ideals(const QOrder& a, std::size_t max_length, std::uint64_t budget) {
  std::uint64_t total = 0;
  for (std::size_t len = 1; len <= max_length; ++len)
    total += saturating_mul(len, saturating_pow(a.size(), len));
  if (total > budget) throw BudgetExceeded("sequence_generated_ideals", total, budget);

  std::vector<FuzzySet> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::size_t> word(len, 0);
    const std::uint64_t words = saturating_pow(a.size(), len);
    for (std::uint64_t w = 0; w < words; ++w) {
      for (std::size_t cyc = 1; cyc <= len; ++cyc) {
        EventuallyPeriodicSequence s;
        s.prefix.assign(word.begin(), word.end() - static_cast<std::ptrdiff_t>(cyc));
        s.cycle.assign(word.end() - static_cast<std::ptrdiff_t>(cyc), word.end());
        try {
          out.push_back(ideal_from_sequence(a, s));
        } catch (const NotForwardCauchy&) {
        }
      }
      for (std::size_t pos = len; pos-- > 0;) {
        if (++word[pos] < a.size()) break;
        word[pos] = 0;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Deciders

IdealDecider::IdealDecider(QOrder base, std::uint64_t budget) : base_(std::move(base)), budget_(budget) {}

const std::vector<FuzzySet>& IdealDecider::lower_sets() const {
  if (!lower_) lower_ = enumerate_monotone_sets(base_, SetKind::Lower, budget_);
  return *lower_;
}

const std::vector<FuzzySet>& IdealDecider::upper_sets() const {
  if (!upper_) upper_ = enumerate_monotone_sets(base_, SetKind::Upper, budget_);
  return *upper_;
}

void IdealDecider::require_pairs(std::size_t n, const char* what) const {
  const std::uint64_t pairs = saturating_mul(n, n > 0 ? n - 1 : 0) / 2;
  if (pairs > budget_) throw BudgetExceeded(what, pairs, budget_);
}

std::optional<std::string> IdealDecider::precondition(const FuzzySet& phi) const {
  require_base(base_, phi);
  if (auto w = lower_violation(base_, phi))
    return "not a lower set at (" + base_.label(w->first) + "," + base_.label(w->second) + ")";
  if (!is_inhabited(base_.quantale(), phi)) return "not inhabited";
  return std::nullopt;
}

FlatVerdict IdealDecider::is_flat_brute_force(const FuzzySet& phi) const {
  FlatVerdict v;
  if (auto r = precondition(phi)) {
    v.reason = *r;
    return v;
  }
  const auto& q = base_.quantale();
  const auto& ups = upper_sets();
  require_pairs(ups.size(), "is_flat");
  std::vector<Elem> t(ups.size());
  for (std::size_t i = 0; i < ups.size(); ++i) t[i] = tensor_unchecked(q, phi, ups[i]);
  FuzzySet m(base_.size());
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = i + 1; j < ups.size(); ++j) {
      Elem lhs = q.bottom();
      for (std::size_t x = 0; x < m.size(); ++x)
        lhs = q.join(lhs, q.tensor(phi[x], q.meet(ups[i][x], ups[j][x])));
      if (lhs != q.meet(t[i], t[j])) {
        v.reason = "tensor does not preserve the meet of two upper sets";
        v.witness = std::pair{ups[i], ups[j]};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

bool IdealDecider::flat_frame_shortcut(const FuzzySet& phi) const {
  const auto& q = base_.quantale();
  const std::size_t n = base_.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      Elem rhs = q.bottom();
      for (std::size_t z = 0; z < n; ++z)
        rhs = q.join(rhs, q.meet(phi[z], q.meet(base_.hom(x, z), base_.hom(y, z))));
      if (!q.leq(q.meet(phi[x], phi[y]), rhs)) return false;
    }
  return true;
}

FlatVerdict IdealDecider::is_flat(const FuzzySet& phi) const {
  if (base_.quantale().is_frame()) {
    if (auto r = precondition(phi)) return FlatVerdict{false, *r, std::nullopt};
    if (flat_frame_shortcut(phi)) return FlatVerdict{true, {}, std::nullopt};
  }
  return is_flat_brute_force(phi);
}

IrreducibleVerdict IdealDecider::is_irreducible(const FuzzySet& phi) const {
  IrreducibleVerdict v;
  if (auto r = precondition(phi)) {
    v.reason = *r;
    return v;
  }
  const auto& q = base_.quantale();
  const auto& lows = lower_sets();
  require_pairs(lows.size(), "is_irreducible");
  std::vector<Elem> s(lows.size());
  for (std::size_t i = 0; i < lows.size(); ++i) s[i] = sub_unchecked(q, phi, lows[i]);
  for (std::size_t i = 0; i < lows.size(); ++i) {
    for (std::size_t j = i + 1; j < lows.size(); ++j) {
      Elem lhs = q.top();
      for (std::size_t x = 0; x < phi.size(); ++x)
        lhs = q.meet(lhs, q.residuate(phi[x], q.join(lows[i][x], lows[j][x])));
      if (lhs != q.join(s[i], s[j])) {
        v.reason = "inclusion degree does not preserve the join of two lower sets";
        v.witness = std::pair{lows[i], lows[j]};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

ForwardCauchyVerdict IdealDecider::is_forward_cauchy(const FuzzySet& phi) const {
  ForwardCauchyVerdict v;
  if (auto r = precondition(phi)) {
    v.reason = *r;
    return v;
  }
  const auto& q = base_.quantale();
  const std::size_t n = base_.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      bool found = false;
      for (std::size_t z = 0; z < n && !found; ++z)
        found = phi[z] == q.top() && q.leq(phi[x], base_.hom(x, z)) && q.leq(phi[y], base_.hom(y, z));
      if (!found) {
        v.reason = "no common approximating point with full membership";
        v.witness = PointPair{x, y};
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

IdealReport IdealDecider::classify(const FuzzySet& phi) const {
  require_base(base_, phi);
  IdealReport r;
  r.lower = is_lower(base_, phi);
  r.inhabited = is_inhabited(base_.quantale(), phi);
  r.flat = is_flat(phi);
  r.irreducible = is_irreducible(phi);
  r.forward_cauchy = is_forward_cauchy(phi);
  return r;
}

bool IdealDecider::belongs(const FuzzySet& phi, IdealClass c) const {
  switch (c) {
    case IdealClass::ForwardCauchy: return is_forward_cauchy(phi).holds;
    case IdealClass::Flat: return is_flat(phi).holds;
    case IdealClass::Irreducible: return is_irreducible(phi).holds;
    case IdealClass::AllLower: return is_lower(base_, phi);
  }
  return false;
}

std::vector<FuzzySet> IdealDecider::enumerate(IdealClass c) const {
  std::vector<FuzzySet> out;
  for (const auto& phi : lower_sets())
    if (belongs(phi, c)) out.push_back(phi);
  return out;
}

FlatVerdict is_flat(const QOrder& a, const FuzzySet& phi, std::uint64_t budget) {
  return IdealDecider(a, budget).is_flat(phi);
}

IrreducibleVerdict is_irreducible(const QOrder& a, const FuzzySet& phi, std::uint64_t budget) {
  return IdealDecider(a, budget).is_irreducible(phi);
}

ForwardCauchyVerdict is_forward_cauchy(const QOrder& a, const FuzzySet& phi) {
  return IdealDecider(a).is_forward_cauchy(phi);
}

IdealReport classify_ideal(const QOrder& a, const FuzzySet& phi, std::uint64_t budget) {
  return IdealDecider(a, budget).classify(phi);
}

std::vector<FuzzySet> enumerate_ideals(const QOrder& a, IdealClass c, std::uint64_t budget) {
  return IdealDecider(a, budget).enumerate(c);
}

}  // namespace qideal
