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

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qideal/completion.hpp"
#include "qideal/generate.hpp"
#include "qideal/ideal.hpp"
#include "qideal/scott.hpp"

using namespace qideal;

static void BM_LukasiewiczChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lukasiewicz_chain(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LukasiewiczChain)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_LowerSets(benchmark::State& state) {
  const auto a = left_order(godel_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monotone_sets(a, SetKind::Lower));
}
BENCHMARK(BM_LowerSets)->Arg(4)->Arg(6)->Arg(7);

static void BM_EnumerateClass(benchmark::State& state) {
  const auto cls = static_cast<IdealClass>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = random_qorder(lukasiewicz_chain(3), 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(a, cls));
  state.SetLabel(std::string(to_string(cls)));
}
BENCHMARK(BM_EnumerateClass)
    ->Arg(static_cast<int>(IdealClass::ForwardCauchy))
    ->Arg(static_cast<int>(IdealClass::Flat))
    ->Arg(static_cast<int>(IdealClass::Irreducible));

static void BM_FlatShortcutVsBruteForce(benchmark::State& state) {
  const auto q = godel_chain(5);
  const IdealDecider d(left_order(q));
  FuzzySet phi(q.size());
  for (Elem x : q.elements()) phi[x] = q.join(q.at("1/2"), q.residuate(x, q.at("1/4")));
  d.upper_sets();
  const bool shortcut = state.range(0) == 1;
  for (auto _ : state) {
    if (shortcut)
      benchmark::DoNotOptimize(d.flat_frame_shortcut(phi));
    else
      benchmark::DoNotOptimize(d.is_flat_brute_force(phi));
  }
  state.SetLabel(shortcut ? "shortcut" : "brute force");
}
BENCHMARK(BM_FlatShortcutVsBruteForce)->Arg(0)->Arg(1);

static void BM_Saturation(benchmark::State& state) {
  const auto a = discrete_order(lukasiewicz_chain(static_cast<int>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_saturation(a, IdealClass::Irreducible));
}
BENCHMARK(BM_Saturation)->Arg(2)->Arg(3)->Arg(4);

static void BM_ScottCotopology(benchmark::State& state) {
  const auto a = left_order(lukasiewicz_chain(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_scott_structure(a, IdealClass::Irreducible, ScottMode::Cotopology));
}
BENCHMARK(BM_ScottCotopology)->Arg(3)->Arg(4)->Arg(5);

static void BM_OrdinalSumGeneration(benchmark::State& state) {
  const IntervalQuantale q(TNorm::Lukasiewicz);
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_ordinal_sum_generation(q, [](double x) { return std::min(1.0, x + 0.25); }, points));
}
BENCHMARK(BM_OrdinalSumGeneration)->Arg(65)->Arg(257);
BENCHMARK_MAIN();
