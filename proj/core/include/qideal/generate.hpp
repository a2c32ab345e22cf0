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

#ifndef QIDEAL_GENERATE_HPP_
#define QIDEAL_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qideal/qorder.hpp"

namespace qideal {

/// Least transitive relation above a reflexive one: R := R v (R o R) until stable.
QOrder transitive_closure(const QOrder& r);

/// Uniform random entries off the diagonal, top on it, then closed.
QOrder random_qorder(const FiniteQuantale& q, std::size_t n, std::mt19937_64& rng);

/// Every Q-order on two points x0, x1; all |Q|^2 off-diagonal choices are
/// transitive. Ordered by (A(x0,x1), A(x1,x0)).
std::vector<QOrder> all_two_point_orders(const FiniteQuantale& q);

/// All partial orders on n labeled points as boolean matrices (n <= 5).
std::vector<std::vector<std::vector<bool>>> labeled_posets(std::size_t n);

}  // namespace qideal

#endif  // QIDEAL_GENERATE_HPP_
