/*
   Copyright 2026 The cycalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cycalg/action.hpp"
#include "cycalg/algebra.hpp"
#include "cycalg/cohomology.hpp"
#include "cycalg/finite_field.hpp"
#include "cycalg/partitions.hpp"

namespace {

using namespace cycalg;

void BM_FieldMul(benchmark::State& state) {
  const FiniteFieldTower k(3, static_cast<int>(state.range(0)), 0);
  std::mt19937_64 rng(0);
  std::vector<FfElement> xs(1024);
  for (auto& x : xs) x = k.random(rng);
  std::size_t i = 0;
  FfElement acc = k.one();
  for (auto _ : state) {
    acc = k.mul(acc, xs[i++ & 1023]);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(8);

void BM_AlgebraMultiply(benchmark::State& state) {
  const FiniteFieldTower k(5, static_cast<int>(state.range(0)), 0);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  std::mt19937_64 rng(0);
  const auto x = a.random(rng), y = a.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.multiply(x, y));
}
BENCHMARK(BM_AlgebraMultiply)->Arg(2)->Arg(3)->Arg(4);

void BM_ReducedNorm(benchmark::State& state) {
  const FiniteFieldTower k(5, static_cast<int>(state.range(0)), 0);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  std::mt19937_64 rng(0);
  const auto x = a.random(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.reduced_norm(x));
}
BENCHMARK(BM_ReducedNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_WeylZ1(benchmark::State& state) {
  const WeylGroup w(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Z1(w));
}
BENCHMARK(BM_WeylZ1)->DenseRange(3, 7);

void BM_TorusH1(benchmark::State& state) {
  const FiniteFieldTower k(5, 2, 0);
  const TorusGroup<FiniteFieldTower> t(k);
  for (auto _ : state) {
    const auto z1 = enumerate_Z1(t);
    benchmark::DoNotOptimize(h1_classify(t, z1));
  }
}
BENCHMARK(BM_TorusH1);

void BM_CountPn(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_pn(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_CountPn)->Arg(12)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
