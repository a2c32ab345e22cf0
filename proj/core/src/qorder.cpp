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

#include "qideal/qorder.hpp"

#include <sstream>

namespace qideal {

QOrder left_order(const FiniteQuantale& q) {
  const std::size_t n = q.size();
  std::vector<Elem> hom(n * n);
  for (Elem p = 0; p < n; ++p)
    for (Elem r = 0; r < n; ++r) hom[p * n + r] = q.residuate(p, r);
  return QOrder(q, q.labels(), std::move(hom));
}

QOrder right_order(const FiniteQuantale& q) { return opposite(left_order(q)); }

QOrder discrete_order(const FiniteQuantale& q, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<Elem> hom(n * n, q.bottom());
  for (std::size_t i = 0; i < n; ++i) hom[i * n + i] = q.top();
  return QOrder(q, std::move(labels), std::move(hom));
}

QOrder crisp_order(const FiniteQuantale& q, std::vector<std::string> labels,
                   const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw BaseMismatch("crisp order relation must be |A| x |A|");
  std::vector<Elem> hom(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw BaseMismatch("crisp order relation must be |A| x |A|");
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = leq[i][j] ? q.top() : q.bottom();
  }
  return QOrder(q, std::move(labels), std::move(hom));
}

QOrder power_order(const FiniteQuantale& q, const std::vector<std::string>& x_labels, std::uint64_t budget) {
  const std::size_t k = x_labels.size();
  const std::uint64_t count = saturating_pow(q.size(), k);
  if (count > budget) throw BudgetExceeded("power order Q^X", count, budget);
  std::vector<std::vector<Elem>> maps;
  maps.reserve(count);
  std::vector<Elem> cur(k, 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    maps.push_back(cur);
    for (std::size_t pos = k; pos-- > 0;) {
      if (++cur[pos] < q.size()) break;
      cur[pos] = 0;
    }
  }
  std::vector<std::string> labels;
  for (const auto& m : maps) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k; ++i) os << (i ? "," : "") << q.label(m[i]);
    os << ")";
    labels.push_back(os.str());
  }
  const std::size_t n = maps.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem acc = q.top();
      for (std::size_t i = 0; i < k; ++i) acc = q.meet(acc, q.residuate(maps[a][i], maps[b][i]));
      hom[a * n + b] = acc;
    }
  return QOrder(q, std::move(labels), std::move(hom));
}

namespace {

std::vector<std::string> point_labels(const std::vector<double>& points) {
  std::vector<std::string> labels;
  for (double p : points) {
    std::ostringstream os;
    os.precision(17);
    os << p;
    labels.push_back(os.str());
  }
  return labels;
}

}  // namespace

SampledQOrder sampled_left_order(const IntervalQuantale& q, const std::vector<double>& points) {
  const std::size_t n = points.size();
  std::vector<double> hom(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = q.residuate(points[i], points[j]);
  return SampledQOrder(q, point_labels(points), std::move(hom));
}

SampledQOrder sampled_right_order(const IntervalQuantale& q, const std::vector<double>& points) {
  return opposite(sampled_left_order(q, points));
}

}  // namespace qideal
