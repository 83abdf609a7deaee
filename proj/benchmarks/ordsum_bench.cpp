/* Copyright 2026 The ordsum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "ordsum/enumerate.hpp"
#include "ordsum/oracle.hpp"

namespace ordsum {
namespace {

void BM_Add(benchmark::State& state) {
  const Ordinal a = parse_ordinal("w^(w^2+1)*3+w^5*2+w+7");
  const Ordinal b = parse_ordinal("w^(w^2)*4+w^3+2");
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
}
BENCHMARK(BM_Add);

void BM_Mul(benchmark::State& state) {
  const Ordinal a = parse_ordinal("w^(w+1)*3+w^5*2+w+7");
  const Ordinal b = parse_ordinal("w^4*4+w^3+2");
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul);

void BM_ParsePrint(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(to_string(parse_ordinal("w^(w^2+1)*3+w^(w)*2+w^5+w*9+7")));
}
BENCHMARK(BM_ParsePrint);

void BM_Psi(benchmark::State& state) {
  const Series s = generate_instance({3, 4, 4, BlockShape::omega});
  for (auto _ : state) benchmark::DoNotOptimize(psi(s));
}
BENCHMARK(BM_Psi);

// Argument: number of exceptional terms.
void BM_EnumBijectiveOmega(benchmark::State& state) {
  const Series s = generate_instance({11, static_cast<std::size_t>(state.range(0)), 3, BlockShape::omega});
  for (auto _ : state) benchmark::DoNotOptimize(enum_bijective_omega(s));
}
BENCHMARK(BM_EnumBijectiveOmega)->DenseRange(0, 5);

void BM_EnumBijectiveOmega2(benchmark::State& state) {
  const Series s = generate_instance({5, static_cast<std::size_t>(state.range(0)), 2, BlockShape::omega2});
  for (auto _ : state) benchmark::DoNotOptimize(enum_bijective_omega2(s));
}
BENCHMARK(BM_EnumBijectiveOmega2)->DenseRange(0, 3);

// Argument: retention bound.
void BM_EnumInjectiveBounded(benchmark::State& state) {
  const Series s = parse_series("cat([fin(w^2)];[fin(1,w)])");
  for (auto _ : state) benchmark::DoNotOptimize(enum_injective_bounded(s, state.range(0)));
}
BENCHMARK(BM_EnumInjectiveBounded)->RangeMultiplier(2)->Range(1, 16);

void BM_OracleOmega(benchmark::State& state) {
  const Series s = generate_instance({7, 3, 2, BlockShape::omega});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sums(s, state.range(0)));
}
BENCHMARK(BM_OracleOmega)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ordsum

BENCHMARK_MAIN();
