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

#include "qideal/scott.hpp"

#include <algorithm>
#include <cmath>

namespace qideal {

namespace {

bool contains(const std::vector<FuzzySet>& sorted, const FuzzySet& phi) {
  return std::binary_search(sorted.begin(), sorted.end(), phi);
}

std::vector<FuzzySet> sorted_copy(std::vector<FuzzySet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FuzzySet compose(const FuzzySet& lambda, const QMap& f) {
  FuzzySet out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = lambda[f[x]];
  return out;
}

void require_map(const QOrder& a, const QOrder& b, const QMap& f) {
  if (!(a.quantale() == b.quantale())) throw QuantaleMismatch("maps must stay within one quantale");
  if (f.size() != a.size()) throw BaseMismatch("map must be total on its source");
  for (auto v : f)
    if (v >= b.size()) throw BaseMismatch("map leaves its target");
}

}  // namespace

std::string_view to_string(ScottMode m) { return m == ScottMode::Topology ? "top" : "cotop"; }

std::optional<ScottMode> parse_scott_mode(std::string_view name) {
  if (name == "top" || name == "topology") return ScottMode::Topology;
  if (name == "cotop" || name == "cotopology") return ScottMode::Cotopology;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Membership

ScottContext::ScottContext(QOrder base, IdealClass cls, std::uint64_t budget)
    : base_(std::move(base)), cls_(cls), budget_(budget) {
  ideals_ = IdealDecider(base_, budget_).enumerate(cls_);
  suprema_.reserve(ideals_.size());
  for (const auto& phi : ideals_) suprema_.push_back(qideal::suprema(base_, phi));
}

ScottVerdict ScottContext::member(const FuzzySet& psi, ScottMode mode) const {
  require_base(base_, psi);
  const auto& q = base_.quantale();
  ScottVerdict v;
  const bool top = mode == ScottMode::Topology;
  if (auto w = top ? upper_violation(base_, psi) : lower_violation(base_, psi)) {
    v.reason = top ? "not an upper set" : "not a lower set";
    v.order_witness = w;
    return v;
  }
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (suprema_[i].empty()) continue;
    const Elem degree = top ? tensor_unchecked(q, ideals_[i], psi) : sub_unchecked(q, ideals_[i], psi);
    for (auto s : suprema_[i]) {
      if (psi[s] != degree) {
        v.reason = top ? "value at a supremum exceeds the tensor degree" : "inclusion degree exceeds the value at a supremum";
        v.ideal = ideals_[i];
        v.supremum = s;
        return v;
      }
    }
  }
  v.member = true;
  return v;
}

std::vector<FuzzySet> ScottContext::members(ScottMode mode) const {
  auto candidates = enumerate_monotone_sets(base_, mode == ScottMode::Topology ? SetKind::Upper : SetKind::Lower, budget_);
  std::vector<FuzzySet> out;
  for (auto& psi : candidates)
    if (member(psi, mode).member) out.push_back(std::move(psi));
  return out;
}

ScottVerdict is_scott_member(const QOrder& a, const FuzzySet& psi, IdealClass cls, ScottMode mode,
                             std::uint64_t budget) {
  return ScottContext(a, cls, budget).member(psi, mode);
}

// ---------------------------------------------------------------------------
// Axioms

bool StructureAxioms::stratified() const {
  return axioms[0].holds && axioms[1].holds && axioms[2].holds && axioms[3].holds;
}

StructureAxioms check_structure_axioms(const QOrder& base, ScottMode mode, const std::vector<FuzzySet>& members) {
  const auto& q = base.quantale();
  const auto set = sorted_copy(members);
  const bool top = mode == ScottMode::Topology;
  StructureAxioms r;
  auto fail = [](AxiomCheck& c, std::vector<FuzzySet> w, std::optional<Elem> p = std::nullopt) {
    if (!c.holds) return;
    c.holds = false;
    c.witness = std::move(w);
    c.scalar = p;
  };

  for (Elem p = 0; p < q.size(); ++p) {
    auto c = constant_set(base, p);
    if (!contains(set, c)) fail(r.axioms[0], {c}, p);
  }

  // Axiom 2 is the binary operation of the finite side, axiom 3 the
  // arbitrary one (pairwise closure plus the whole set).
  AxiomCheck& binary = r.axioms[1];
  AxiomCheck& arbitrary = r.axioms[2];
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      auto meet = pointwise_meet(q, set[i], set[j]);
      auto join = pointwise_join(q, set[i], set[j]);
      const auto& fin = top ? meet : join;
      const auto& arb = top ? join : meet;
      if (!contains(set, fin)) fail(binary, {set[i], set[j]});
      if (!contains(set, arb)) fail(arbitrary, {set[i], set[j]});
    }
  FuzzySet whole(base.size(), top ? q.bottom() : q.top());
  for (const auto& m : set) whole = top ? pointwise_join(q, whole, m) : pointwise_meet(q, whole, m);
  if (!contains(set, whole)) fail(arbitrary, {whole});

  AxiomCheck& tensor_ax = top ? r.axioms[3] : r.axioms[4];
  AxiomCheck& implies_ax = top ? r.axioms[4] : r.axioms[3];
  for (const auto& m : set)
    for (Elem p = 0; p < q.size(); ++p) {
      if (!contains(set, scale(q, p, m))) fail(tensor_ax, {m}, p);
      if (!contains(set, implies_from(q, p, m))) fail(implies_ax, {m}, p);
    }
  return r;
}

ScottStructure generate_scott_structure(const ScottContext& ctx, ScottMode mode) {
  ScottStructure s{ctx.base(), mode, ctx.cls(), ctx.members(mode), {}};
  s.axioms = check_structure_axioms(s.base, mode, s.members);
  return s;
}

ScottStructure generate_scott_structure(const QOrder& a, IdealClass cls, ScottMode mode, std::uint64_t budget) {
  return generate_scott_structure(ScottContext(a, cls, budget), mode);
}

// ---------------------------------------------------------------------------
// Maps

MapChecker::MapChecker(QOrder source, QOrder target, IdealClass cls, std::uint64_t budget)
    : source_(std::move(source), cls, budget), target_(std::move(target), cls, budget) {
  if (!(source_.base().quantale() == target_.base().quantale()))
    throw QuantaleMismatch("maps must stay within one quantale");
  target_closed_ = target_.members(ScottMode::Cotopology);
  target_open_ = target_.members(ScottMode::Topology);
  source_closed_ = sorted_copy(source_.members(ScottMode::Cotopology));
  source_open_ = sorted_copy(source_.members(ScottMode::Topology));
}

CocontinuityReport MapChecker::cocontinuity(const QMap& f) const {
  const QOrder& a = source_.base();
  const QOrder& b = target_.base();
  require_map(a, b, f);
  const auto& q = a.quantale();
  CocontinuityReport r;
  auto op = check_map_and_adjunction(a, b, f);
  r.order_preserving = op.order_preserving;
  r.order_witness = op.order_witness;

  r.cocontinuous = r.order_preserving;
  for (std::size_t i = 0; i < source_.ideals().size() && r.cocontinuous; ++i) {
    if (source_.suprema()[i].empty()) continue;
    auto image = transport(a, b, f, source_.ideals()[i], Direction::Forward);
    for (auto s : source_.suprema()[i]) {
      bool ok = true;
      for (std::size_t y = 0; y < b.size() && ok; ++y)
        ok = b.hom(f[s], y) == sub_unchecked(q, image, principal(b, y));
      if (!ok) {
        r.cocontinuous = false;
        r.ideal_witness = source_.ideals()[i];
        break;
      }
    }
  }

  r.closed_preimage = true;
  for (const auto& lambda : target_closed_) {
    if (!contains(source_closed_, compose(lambda, f))) {
      r.closed_preimage = false;
      r.closed_witness = lambda;
      break;
    }
  }
  return r;
}

ContinuityCheck MapChecker::continuity(const QMap& f) const {
  require_map(source_.base(), target_.base(), f);
  ContinuityCheck r;
  for (const auto& psi : target_open_) {
    if (!contains(source_open_, compose(psi, f))) {
      r.continuous = false;
      r.open_witness = psi;
      break;
    }
  }
  return r;
}

CocontinuityReport cocontinuity_equivalence(const QOrder& a, const QOrder& b, const QMap& f, IdealClass cls,
                                            std::uint64_t budget) {
  return MapChecker(a, b, cls, budget).cocontinuity(f);
}

std::vector<QMap> all_maps(std::size_t m, std::size_t n, std::uint64_t budget) {
  const std::uint64_t count = saturating_pow(n, m);
  if (count > budget) throw BudgetExceeded("all_maps", count, budget);
  std::vector<QMap> out;
  if (n == 0 && m > 0) return out;
  QMap cur(m, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    for (std::size_t pos = m; pos-- > 0;) {
      if (++cur[pos] < n) break;
      cur[pos] = 0;
    }
  }
  return out;
}

NegationDuality check_negation_duality(const QOrder& a, IdealClass open_cls, IdealClass closed_cls,
                                       std::uint64_t budget) {
  const auto& q = a.quantale();
  ScottContext open_ctx(a, open_cls, budget);
  const auto opens = open_ctx.members(ScottMode::Topology);
  const auto closed = closed_cls == open_cls ? open_ctx.members(ScottMode::Cotopology)
                                             : ScottContext(a, closed_cls, budget).members(ScottMode::Cotopology);
  NegationDuality r;
  r.open_count = opens.size();
  r.closed_count = closed.size();
  std::vector<FuzzySet> negated;
  negated.reserve(opens.size());
  for (const auto& psi : opens) negated.push_back(negation(q, psi));
  std::sort(negated.begin(), negated.end());
  negated.erase(std::unique(negated.begin(), negated.end()), negated.end());
  const auto closed_set = sorted_copy(closed);
  for (const auto& psi : opens) {
    if (!contains(closed_set, negation(q, psi))) {
      r.holds = false;
      r.witness = psi;
      r.witness_side = ScottMode::Topology;
      return r;
    }
  }
  for (const auto& lambda : closed) {
    if (!contains(negated, lambda)) {
      r.holds = false;
      r.witness = lambda;
      r.witness_side = ScottMode::Cotopology;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Unit interval

std::vector<double> unit_grid(std::size_t points) {
  if (points < 2) throw std::invalid_argument("a grid needs at least two points");
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  g.back() = 1.0;
  return g;
}

IntervalClosedReport interval_dR_scott_closed(const IntervalQuantale& q, const UnitFunction& phi,
                                              std::size_t grid_points) {
  if (grid_points < GridTooCoarse::kMinPoints) throw GridTooCoarse(grid_points);
  const auto grid = unit_grid(grid_points);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = phi(grid[i]);
  IntervalClosedReport r;
  r.grid_points = grid_points;
  for (std::size_t i = 0; i < grid.size() && r.order_preserving; ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (!q.leq(q.residuate(grid[i], grid[j]), q.residuate(v[i], v[j]))) {
        r.order_preserving = false;
        r.order_witness = std::pair{grid[i], grid[j]};
        break;
      }
  const double h = std::ldexp(1.0, -40);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!q.eq(phi(grid[i] + h), v[i])) {
      r.right_continuous = false;
      r.continuity_witness = grid[i];
      break;
    }
  r.closed = r.order_preserving && r.right_continuous;
  return r;
}

double generator_value(const IntervalQuantale& q, const std::vector<OrdinalPiece>& pieces, const UnitFunction& phi,
                       double x, double y, int* case_index) {
  const double px = phi(x);
  for (const auto& p : pieces) {
    const bool inside = p.lo < x && x < p.hi && p.lo < px && px < p.hi;
    if (!inside) continue;
    if (px > x + q.tolerance()) {
      if (case_index) *case_index = 0;
      return q.join(px, q.residuate(q.residuate(px, x), y));
    }
    if (case_index) *case_index = 1;
    return q.join(px, q.residuate(p.hi, y));
  }
  if (case_index) *case_index = 2;
  return q.join(px, q.residuate(x, y));
}

GenerationReport verify_ordinal_sum_generation(const IntervalQuantale& q, const UnitFunction& phi,
                                               std::size_t grid_points) {
  const auto pieces = q.decomposition();
  for (const auto& p : pieces)
    for (double e : {p.lo, p.hi})
      if (!q.eq(q.tensor(e, e), e)) throw DecompositionMismatch(e, "piece endpoint is not idempotent");
  const auto closed = interval_dR_scott_closed(q, phi, grid_points);
  if (!closed.closed) throw std::invalid_argument("function is not Scott closed on the grid");
  const auto grid = unit_grid(grid_points);
  for (double y : grid)
    if (!q.leq(y, phi(y))) throw std::invalid_argument("function is not above the identity");

  GenerationReport r;
  r.grid_points = grid_points;
  for (double x : grid) {
    int c = 0;
    generator_value(q, pieces, phi, x, 0.0, &c);
    ++r.case_counts[static_cast<std::size_t>(c)];
  }
  for (double y : grid) {
    double inf = 1.0;
    for (double x : grid) inf = std::min(inf, generator_value(q, pieces, phi, x, y));
    for (int k = 30; k <= 40; ++k) {
      const double x = y + std::ldexp(1.0, -k);
      if (x <= 1.0) inf = std::min(inf, generator_value(q, pieces, phi, x, y));
    }
    const double dev = std::fabs(phi(y) - inf);
    if (dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_point = y;
    }
  }
  r.within_tolerance = r.max_deviation <= q.tolerance();
  return r;
}

std::vector<double> family_sequence(LimitFamily family, double a, int depth) {
  if (a < 0.0 || a > 1.0) throw std::invalid_argument("family parameter must lie in [0,1]");
  if (depth < 1) throw std::invalid_argument("sequence depth must be positive");
  if (family == LimitFamily::Principal) return std::vector<double>(static_cast<std::size_t>(depth), a);
  if (a >= 1.0) throw std::invalid_argument("right-limit family needs a < 1");
  std::vector<double> s;
  for (int k = 1; k <= depth; ++k) {
    const double x = a + std::ldexp(1.0, -k);
    if (x <= 1.0) s.push_back(x);
  }
  return s;
}

SequenceIdealReport check_sequence_ideal(const IntervalQuantale& q, const std::vector<double>& sequence,
                                         const UnitFunction& expected, std::size_t grid_points) {
  if (sequence.empty()) throw std::invalid_argument("sequence must be nonempty");
  SequenceIdealReport r;
  r.forward_cauchy = true;
  for (std::size_t j = 0; j < sequence.size() && r.forward_cauchy; ++j)
    for (std::size_t k = j; k < sequence.size(); ++k)
      if (!q.eq(q.residuate(sequence[k], sequence[j]), 1.0)) {
        r.forward_cauchy = false;
        break;
      }
  const auto grid = unit_grid(grid_points);
  r.values.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double best = 0.0;
    double tail = 1.0;
    for (std::size_t i = sequence.size(); i-- > 0;) {
      tail = std::min(tail, q.residuate(sequence[i], grid[g]));
      best = std::max(best, tail);
    }
    r.values[g] = best;
    const double dev = std::fabs(best - expected(grid[g]));
    if (dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_point = grid[g];
    }
  }
  r.lower = true;
  for (std::size_t i = 0; i < grid.size() && r.lower; ++i)
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (!q.leq(q.tensor(r.values[j], q.residuate(grid[j], grid[i])), r.values[i])) {
        r.lower = false;
        break;
      }
  r.matches = r.max_deviation <= q.tolerance();
  return r;
}

}  // namespace qideal
