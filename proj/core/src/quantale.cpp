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

#include "qideal/quantale.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace qideal {

std::string_view to_string(QuantaleLaw law) {
  switch (law) {
    case QuantaleLaw::MalformedTables: return "MalformedTables";
    case QuantaleLaw::NotALattice: return "NotALattice";
    case QuantaleLaw::NotAssociative: return "NotAssociative";
    case QuantaleLaw::NotCommutative: return "NotCommutative";
    case QuantaleLaw::NotIntegral: return "NotIntegral";
    case QuantaleLaw::NotDistributive: return "NotDistributive";
    case QuantaleLaw::ChainNotClosed: return "ChainNotClosed";
  }
  return "?";
}

namespace {

std::string describe(QuantaleLaw law, const std::vector<std::string>& witness,
                     const std::string& detail) {
  std::string s(to_string(law));
  s += ": " + detail;
  if (!witness.empty()) {
    s += " (witness:";
    for (const auto& w : witness) s += " " + w;
    s += ")";
  }
  return s;
}

}  // namespace

QuantaleError::QuantaleError(QuantaleLaw law, std::vector<std::string> witness,
                             const std::string& detail)
    : std::invalid_argument(describe(law, witness, detail)), law_(law), witness_(std::move(witness)) {}

// ---------------------------------------------------------------------------

FiniteQuantale FiniteQuantale::build(const QuantaleSpec& spec) {
  const std::size_t n = spec.elements.size();
  auto fail = [](QuantaleLaw law, std::vector<std::string> w, const std::string& detail) {
    throw QuantaleError(law, std::move(w), detail);
  };

  if (n == 0) fail(QuantaleLaw::MalformedTables, {}, "empty carrier");
  if (n > 4096) fail(QuantaleLaw::MalformedTables, {}, "carrier too large");
  std::unordered_map<std::string, Elem> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(spec.elements[i], static_cast<Elem>(i)).second)
      fail(QuantaleLaw::MalformedTables, {spec.elements[i]}, "duplicate label");
  }
  if (spec.leq.size() != n || spec.tensor.size() != n)
    fail(QuantaleLaw::MalformedTables, {}, "tables must be square over the element list");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.leq[i].size() != n || spec.tensor[i].size() != n)
      fail(QuantaleLaw::MalformedTables, {spec.elements[i]}, "ragged table row");
  }
  if (!spec.values.empty() && spec.values.size() != n)
    fail(QuantaleLaw::MalformedTables, {}, "values must match elements");

  FiniteQuantale q;
  q.name_ = spec.name;
  q.labels_ = spec.elements;
  q.values_ = spec.values;
  q.leq_.assign(n * n, false);
  q.tensor_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q.leq_[i * n + j] = spec.leq[i][j];
      auto it = index.find(spec.tensor[i][j]);
      if (it == index.end())
        fail(QuantaleLaw::MalformedTables, {spec.elements[i], spec.elements[j], spec.tensor[i][j]},
             "tensor entry is not an element");
      q.tensor_[i * n + j] = it->second;
    }
  }
  const auto unit_it = index.find(spec.unit);
  if (unit_it == index.end()) fail(QuantaleLaw::MalformedTables, {spec.unit}, "unit is not an element");
  const Elem unit = unit_it->second;
  const auto& L = q.labels_;
  auto le = [&](std::size_t a, std::size_t b) { return q.leq_[a * n + b]; };

  // Partial order.
  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) fail(QuantaleLaw::NotALattice, {L[a]}, "leq is not reflexive");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a)) fail(QuantaleLaw::NotALattice, {L[a], L[b]}, "leq is not antisymmetric");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          fail(QuantaleLaw::NotALattice, {L[a], L[b], L[c]}, "leq is not transitive");

  // Binary joins and meets: least upper / greatest lower bounds.
  q.join_.assign(n * n, 0);
  q.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, c) && le(b, c) && (!lub || le(c, *lub))) lub = c;
        if (le(c, a) && le(c, b) && (!glb || le(*glb, c))) glb = c;
      }
      // The running candidate is only minimal among those seen so far; confirm.
      bool ok = lub && glb;
      for (std::size_t c = 0; ok && c < n; ++c) {
        if (le(a, c) && le(b, c) && !le(*lub, c)) ok = false;
        if (le(c, a) && le(c, b) && !le(c, *glb)) ok = false;
      }
      if (!ok) fail(QuantaleLaw::NotALattice, {L[a], L[b]}, "missing binary join or meet");
      q.join_[a * n + b] = static_cast<Elem>(*lub);
      q.meet_[a * n + b] = static_cast<Elem>(*glb);
    }
  }
  Elem bot = 0, top = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bot = q.meet_[bot * n + a];
    top = q.join_[top * n + a];
  }
  q.bottom_ = bot;
  q.top_ = top;

  auto t = [&](std::size_t a, std::size_t b) -> std::size_t { return q.tensor_[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (t(a, b) != t(b, a)) fail(QuantaleLaw::NotCommutative, {L[a], L[b]}, "p&q != q&p");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c)))
          fail(QuantaleLaw::NotAssociative, {L[a], L[b], L[c]}, "(p&q)&r != p&(q&r)");
  for (std::size_t a = 0; a < n; ++a)
    if (t(unit, a) != a) fail(QuantaleLaw::NotIntegral, {L[unit], L[a]}, "unit is not a two-sided identity");
  if (unit != top) fail(QuantaleLaw::NotIntegral, {L[unit], L[top]}, "unit is not the top element");
  for (std::size_t a = 0; a < n; ++a) {
    if (t(a, bot) != bot) fail(QuantaleLaw::NotDistributive, {L[a]}, "p&0 != 0");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b; c < n; ++c)
        if (t(a, q.join_[b * n + c]) != q.join_[t(a, b) * n + t(a, c)])
          fail(QuantaleLaw::NotDistributive, {L[a], L[b], L[c]}, "p&(q v r) != (p&q) v (p&r)");
  }

  // r(p,q) = V{s : p&s <= q}; distributivity makes this the right adjoint.
  q.residuum_.assign(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t acc = bot;
      for (std::size_t s = 0; s < n; ++s)
        if (le(t(p, s), r)) acc = q.join_[acc * n + s];
      q.residuum_[p * n + r] = static_cast<Elem>(acc);
    }
  }
  return q;
}

FiniteQuantale build_finite_quantale(const QuantaleSpec& spec) { return FiniteQuantale::build(spec); }

std::optional<Elem> FiniteQuantale::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  // Chains also accept any spelling of the same rational ("2/4" for "1/2").
  if (!values_.empty()) {
    if (auto r = Rational::parse(label)) return find_value(*r);
  }
  return std::nullopt;
}

Elem FiniteQuantale::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw std::out_of_range("quantale " + name_ + " has no element '" + std::string(label) + "'");
}

std::optional<Rational> FiniteQuantale::value(Elem e) const {
  if (values_.empty()) return std::nullopt;
  return values_.at(e);
}

std::optional<Elem> FiniteQuantale::find_value(const Rational& v) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == v) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem FiniteQuantale::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteQuantale::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Elem> FiniteQuantale::elements() const {
  std::vector<Elem> out(labels_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

bool FiniteQuantale::is_chain() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

bool FiniteQuantale::is_frame() const {
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (tensor(a, b) != meet(a, b)) return false;
  return true;
}

bool operator==(const FiniteQuantale& a, const FiniteQuantale& b) {
  return a.labels_ == b.labels_ && a.leq_ == b.leq_ && a.tensor_ == b.tensor_;
}

// ---------------------------------------------------------------------------
// Catalog

FiniteQuantale boolean4() {
  QuantaleSpec s;
  s.name = "boolean4";
  s.elements = {"0", "a", "b", "1"};
  // 0 < a,b < 1; a and b incomparable.
  s.leq = {{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
           {false, false, false, true}};
  s.tensor = {{"0", "0", "0", "0"}, {"0", "a", "0", "a"}, {"0", "0", "b", "b"}, {"0", "a", "b", "1"}};
  s.unit = "1";
  return FiniteQuantale::build(s);
}

namespace {

using RationalOp = std::function<Rational(const Rational&, const Rational&)>;

FiniteQuantale chain(const std::string& name, int n, const RationalOp& tnorm, const RationalOp& residuum) {
  if (n < 2) throw std::invalid_argument(name + ": chain needs n >= 2");
  std::vector<Rational> grid;
  for (int i = 0; i < n; ++i) grid.emplace_back(i, n - 1);
  auto locate = [&](const Rational& v) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i] == v) return i;
    return std::nullopt;
  };
  QuantaleSpec s;
  s.name = name + "(" + std::to_string(n) + ")";
  s.values = grid;
  for (const auto& g : grid) s.elements.push_back(g.to_string());
  s.leq.assign(n, std::vector<bool>(n));
  s.tensor.assign(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.leq[i][j] = i <= j;
      const Rational v = tnorm(grid[i], grid[j]);
      if (!locate(v))
        throw QuantaleError(QuantaleLaw::ChainNotClosed, {s.elements[i], s.elements[j], v.to_string()},
                            s.name + ": tensor leaves the grid");
      s.tensor[i][j] = v.to_string();
    }
  }
  s.unit = grid.back().to_string();
  FiniteQuantale q = FiniteQuantale::build(s);
  // The closed-form residuum must land on the grid and agree with the table.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational v = residuum(grid[i], grid[j]);
      const auto at = locate(v);
      if (!at || *at != q.residuate(static_cast<Elem>(i), static_cast<Elem>(j)))
        throw QuantaleError(QuantaleLaw::ChainNotClosed, {s.elements[i], s.elements[j], v.to_string()},
                            s.name + ": residuum leaves the grid");
    }
  }
  return q;
}

const Rational kZero(0);
const Rational kOne(1);

}  // namespace

FiniteQuantale boolean2() { return lukasiewicz_chain(2); }

FiniteQuantale lukasiewicz_chain(int n) {
  return chain(
      "lukasiewicz_chain", n, [](const Rational& a, const Rational& b) { return max(a + b - kOne, kZero); },
      [](const Rational& a, const Rational& b) { return min(kOne, kOne - a + b); });
}

FiniteQuantale godel_chain(int n) {
  return chain(
      "godel_chain", n, [](const Rational& a, const Rational& b) { return min(a, b); },
      [](const Rational& a, const Rational& b) { return a <= b ? kOne : b; });
}

FiniteQuantale nilpotent_minimum_chain(int n) {
  return chain(
      "nilpotent_minimum_chain", n,
      [](const Rational& a, const Rational& b) { return a + b <= kOne ? kZero : min(a, b); },
      [](const Rational& a, const Rational& b) { return a <= b ? kOne : max(kOne - a, b); });
}

FiniteQuantale product_chain(int n) {
  return chain(
      "product_chain", n, [](const Rational& a, const Rational& b) { return a * b; },
      [](const Rational& a, const Rational& b) { return a <= b ? kOne : b / a; });
}

// ---------------------------------------------------------------------------
// Interval backend

std::string_view to_string(TNorm t) {
  switch (t) {
    case TNorm::Minimum: return "min";
    case TNorm::Product: return "product";
    case TNorm::Lukasiewicz: return "lukasiewicz";
    case TNorm::NilpotentMinimum: return "nilpotent_minimum";
    case TNorm::OrdinalSum: return "ordinal_sum";
  }
  return "?";
}

std::optional<TNorm> parse_tnorm(std::string_view name) {
  if (name == "min" || name == "minimum" || name == "godel") return TNorm::Minimum;
  if (name == "product") return TNorm::Product;
  if (name == "lukasiewicz") return TNorm::Lukasiewicz;
  if (name == "nilpotent_minimum") return TNorm::NilpotentMinimum;
  if (name == "ordinal_sum") return TNorm::OrdinalSum;
  return std::nullopt;
}

IntervalQuantale::IntervalQuantale(TNorm t, double tolerance) : tnorm_(t), tolerance_(tolerance) {
  if (t == TNorm::OrdinalSum) throw std::invalid_argument("use IntervalQuantale::ordinal_sum for ordinal sums");
}

IntervalQuantale IntervalQuantale::ordinal_sum(std::vector<OrdinalPiece> pieces, double tolerance) {
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (!(0.0 <= p.lo && p.lo < p.hi && p.hi <= 1.0))
      throw std::invalid_argument("ordinal sum piece must satisfy 0 <= lo < hi <= 1");
    if (p.kind != TNorm::Lukasiewicz && p.kind != TNorm::Product)
      throw std::invalid_argument("ordinal sum pieces must be lukasiewicz or product");
    if (i > 0 && pieces[i - 1].hi > p.lo)
      throw std::invalid_argument("ordinal sum pieces must have disjoint open intervals");
  }
  IntervalQuantale q;
  q.tnorm_ = TNorm::OrdinalSum;
  q.tolerance_ = tolerance;
  q.pieces_ = std::move(pieces);
  return q;
}

std::string IntervalQuantale::name() const {
  std::string s = "interval(" + std::string(to_string(tnorm_));
  for (const auto& p : pieces_)
    s += " [" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]:" + std::string(to_string(p.kind));
  return s + ")";
}

namespace {

double basic_tensor(TNorm t, double a, double b) {
  switch (t) {
    case TNorm::Minimum: return std::min(a, b);
    case TNorm::Product: return a * b;
    case TNorm::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
    case TNorm::NilpotentMinimum: return a + b <= 1.0 ? 0.0 : std::min(a, b);
    case TNorm::OrdinalSum: break;
  }
  throw std::logic_error("basic_tensor: ordinal sum");
}

double basic_residuum(TNorm t, double a, double b) {
  if (a <= b) return 1.0;
  switch (t) {
    case TNorm::Minimum: return b;
    case TNorm::Product: return b / a;
    case TNorm::Lukasiewicz: return std::min(1.0, 1.0 - a + b);
    case TNorm::NilpotentMinimum: return std::max(1.0 - a, b);
    case TNorm::OrdinalSum: break;
  }
  throw std::logic_error("basic_residuum: ordinal sum");
}

const OrdinalPiece* piece_of(const std::vector<OrdinalPiece>& pieces, double a, double b) {
  for (const auto& p : pieces)
    if (p.lo <= a && a <= p.hi && p.lo <= b && b <= p.hi) return &p;
  return nullptr;
}

}  // namespace

double IntervalQuantale::tensor(double a, double b) const {
  if (tnorm_ != TNorm::OrdinalSum) return basic_tensor(tnorm_, a, b);
  if (const auto* p = piece_of(pieces_, a, b)) {
    const double w = p->hi - p->lo;
    return p->lo + w * basic_tensor(p->kind, (a - p->lo) / w, (b - p->lo) / w);
  }
  return std::min(a, b);
}

double IntervalQuantale::residuate(double a, double b) const {
  if (tnorm_ != TNorm::OrdinalSum) return basic_residuum(tnorm_, a, b);
  if (a <= b) return 1.0;
  if (const auto* p = piece_of(pieces_, a, b)) {
    const double w = p->hi - p->lo;
    return p->lo + w * basic_residuum(p->kind, (a - p->lo) / w, (b - p->lo) / w);
  }
  return b;
}

bool IntervalQuantale::is_continuous() const { return tnorm_ != TNorm::NilpotentMinimum; }

std::vector<OrdinalPiece> IntervalQuantale::decomposition() const {
  switch (tnorm_) {
    case TNorm::Minimum: return {};
    case TNorm::Product: return {{0.0, 1.0, TNorm::Product}};
    case TNorm::Lukasiewicz: return {{0.0, 1.0, TNorm::Lukasiewicz}};
    case TNorm::OrdinalSum: return pieces_;
    case TNorm::NilpotentMinimum: break;
  }
  throw std::invalid_argument("nilpotent minimum is not continuous and has no ordinal-sum decomposition");
}

// ---------------------------------------------------------------------------

AnyQuantale standard_quantale(const CatalogRequest& request) {
  auto int_param = [&](const std::string& key) {
    auto it = request.params.find(key);
    if (it == request.params.end()) throw std::invalid_argument(request.name + ": missing param '" + key + "'");
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      throw std::invalid_argument(request.name + ": param '" + key + "' is not an integer");
    }
  };
  const auto& nm = request.name;
  if (nm == "boolean4") return boolean4();
  if (nm == "boolean2") return boolean2();
  if (nm == "lukasiewicz_chain") return lukasiewicz_chain(int_param("n"));
  if (nm == "godel_chain") return godel_chain(int_param("n"));
  if (nm == "nilpotent_minimum_chain") return nilpotent_minimum_chain(int_param("n"));
  if (nm == "product_chain") return product_chain(int_param("n"));
  double tol = IntervalQuantale::kDefaultTolerance;
  if (auto it = request.params.find("tolerance"); it != request.params.end()) tol = std::stod(it->second);
  if (nm == "interval") {
    auto it = request.params.find("tnorm");
    if (it == request.params.end()) throw std::invalid_argument("interval: missing param 'tnorm'");
    auto t = parse_tnorm(it->second);
    if (!t) throw std::invalid_argument("interval: unknown tnorm '" + it->second + "'");
    if (*t == TNorm::OrdinalSum) return IntervalQuantale::ordinal_sum(request.pieces, tol);
    return IntervalQuantale(*t, tol);
  }
  if (nm == "ordinal_sum") return IntervalQuantale::ordinal_sum(request.pieces, tol);
  throw std::invalid_argument("unknown catalog quantale '" + nm + "'");
}

// ---------------------------------------------------------------------------

QuantaleProps<Elem> quantale_properties(const FiniteQuantale& q) {
  QuantaleProps<Elem> props;
  const auto E = q.elements();
  props.is_prelinear = true;
  props.is_divisible = true;
  props.has_double_negation = true;
  for (Elem p : E) {
    if (q.negate(q.negate(p)) != p) props.has_double_negation = false;
    if (q.tensor(p, p) == p) props.idempotents.push_back(p);
    for (Elem r : E) {
      if (q.join(q.residuate(p, r), q.residuate(r, p)) != q.top()) props.is_prelinear = false;
      if (q.tensor(p, q.residuate(p, r)) != q.meet(p, r)) props.is_divisible = false;
      if (q.tensor(p, r) != q.tensor(r, p)) props.is_commutative = false;
    }
  }
  // Validated at construction: unit is the top element.
  props.is_integral = true;
  // Every directed subset of a finite lattice contains its join.
  props.is_meet_continuous = true;
  props.is_dually_meet_continuous = true;
  return props;
}

QuantaleProps<double> quantale_properties(const IntervalQuantale& q) {
  QuantaleProps<double> props;
  const TNorm t = q.tnorm();
  // Every left-continuous t-norm on [0,1] here is a BL or NM t-norm, hence MTL.
  props.is_prelinear = true;
  props.is_divisible = t != TNorm::NilpotentMinimum;
  props.has_double_negation = t == TNorm::Lukasiewicz || t == TNorm::NilpotentMinimum ||
                              (t == TNorm::OrdinalSum && q.pieces().size() == 1 &&
                               q.pieces()[0].kind == TNorm::Lukasiewicz && q.pieces()[0].lo == 0.0 &&
                               q.pieces()[0].hi == 1.0);
  switch (t) {
    case TNorm::Product:
    case TNorm::Lukasiewicz: props.is_archimedean = true; break;
    case TNorm::Minimum:
    case TNorm::NilpotentMinimum: props.is_archimedean = false; break;
    case TNorm::OrdinalSum:
      props.is_archimedean = q.pieces().size() == 1 && q.pieces()[0].lo == 0.0 && q.pieces()[0].hi == 1.0;
      break;
  }
  for (int i = 0; i <= 64; ++i) {
    const double p = i / 64.0;
    if (q.eq(q.tensor(p, p), p)) props.idempotents.push_back(p);
  }
  return props;
}

bool way_below(const FiniteQuantale& q, Elem p, Elem r) { return q.leq(p, r); }

bool way_below(const IntervalQuantale& q, double p, double r) {
  return p <= q.tolerance() || p < r - q.tolerance();
}

}  // namespace qideal
