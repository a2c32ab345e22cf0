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

#include "qideal/generate.hpp"

#include <stdexcept>
#include <string>

namespace qideal {

QOrder transitive_closure(const QOrder& r) {
  const auto& q = r.quantale();
  const std::size_t n = r.size();
  std::vector<Elem> h = r.hom_matrix();
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Elem> next = h;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y) {
          const Elem v = q.join(next[x * n + z], q.tensor(h[y * n + z], h[x * n + y]));
          if (v != next[x * n + z]) {
            next[x * n + z] = v;
            changed = true;
          }
        }
    h = std::move(next);
  }
  return QOrder(q, r.labels(), std::move(h));
}

QOrder random_qorder(const FiniteQuantale& q, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<Elem> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x * n + y] = x == y ? q.top() : static_cast<Elem>(pick(rng));
  return transitive_closure(QOrder(q, std::move(labels), std::move(hom)));
}

std::vector<QOrder> all_two_point_orders(const FiniteQuantale& q) {
  std::vector<QOrder> out;
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = 0; b < q.size(); ++b)
      out.emplace_back(q, std::vector<std::string>{"x0", "x1"}, std::vector<Elem>{q.top(), a, b, q.top()});
  return out;
}

std::vector<std::vector<std::vector<bool>>> labeled_posets(std::size_t n) {
  if (n > 5) throw std::invalid_argument("labeled_posets supports at most 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<std::vector<std::vector<bool>>> out;
  const std::uint64_t count = std::uint64_t{1} << off.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) r[off[k].first][off[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qideal
