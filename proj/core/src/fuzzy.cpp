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

#include "qideal/fuzzy.hpp"

namespace qideal {

namespace {

// Depth-first assignment in lexicographic order. A partial assignment is
// extended only if every constraint between assigned points holds, so the
// output is exactly the monotone sets, already sorted.
void extend(const QOrder& a, SetKind kind, FuzzySet& cur, std::size_t pos, std::vector<FuzzySet>& out) {
  const auto& q = a.quantale();
  if (pos == a.size()) {
    out.push_back(cur);
    return;
  }
  for (Elem v = 0; v < q.size(); ++v) {
    bool ok = true;
    for (std::size_t y = 0; y < pos && ok; ++y) {
      if (kind == SetKind::Lower) {
        // phi(y) & A(pos,y) <= phi(pos) and phi(pos) & A(y,pos) <= phi(y)
        ok = q.leq(q.tensor(cur[y], a.hom(pos, y)), v) && q.leq(q.tensor(v, a.hom(y, pos)), cur[y]);
      } else {
        ok = q.leq(q.tensor(a.hom(y, pos), cur[y]), v) && q.leq(q.tensor(a.hom(pos, y), v), cur[y]);
      }
    }
    if (!ok) continue;
    cur[pos] = v;
    extend(a, kind, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<FuzzySet> enumerate_monotone_sets(const QOrder& a, SetKind kind, std::uint64_t budget) {
  const std::uint64_t count = saturating_pow(a.quantale().size(), a.size());
  if (count > budget) throw BudgetExceeded("enumerate_monotone_sets", count, budget);
  std::vector<FuzzySet> out;
  FuzzySet cur(a.size(), 0);
  extend(a, kind, cur, 0, out);
  return out;
}

std::vector<FuzzySet> enumerate_all_sets(const QOrder& a, std::uint64_t budget) {
  const std::size_t m = a.quantale().size();
  const std::uint64_t count = saturating_pow(m, a.size());
  if (count > budget) throw BudgetExceeded("enumerate_all_sets", count, budget);
  std::vector<FuzzySet> out;
  out.reserve(count);
  FuzzySet cur(a.size(), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    for (std::size_t pos = a.size(); pos-- > 0;) {
      if (++cur[pos] < m) break;
      cur[pos] = 0;
    }
  }
  return out;
}

}  // namespace qideal
