// Copyright (c) 2026 the qclone authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qclone/cloning.hpp"
#include "qclone/diagram.hpp"
#include "qclone/extendibility.hpp"
#include "qclone/spectral.hpp"
#include "qclone/tensor_rep.hpp"

using namespace qclone;

static void BM_Compose(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  auto members = enumerate_family(Family::brauer(), k);
  size_t i = 0;
  for (auto _ : state) {
    const Diagram& p = members[i % members.size()];
    const Diagram& q = members[(i * 7 + 3) % members.size()];
    benchmark::DoNotOptimize(compose(p, q));
    ++i;
  }
}
BENCHMARK(BM_Compose)->Arg(3)->Arg(5);

static void BM_TensorRep(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  Diagram p = enumerate_family(Family::brauer(), k).front();
  for (auto _ : state) benchmark::DoNotOptimize(tensor_rep(p, 3));
}
BENCHMARK(BM_TensorRep)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumeratePartitionMonoid(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_family(Family::partition_monoid(), k));
}
BENCHMARK(BM_EnumeratePartitionMonoid)->Arg(2)->Arg(3);

static void BM_QNorm(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  std::vector<double> a(N, 1.0 / N);
  for (auto _ : state) benchmark::DoNotOptimize(q_norm(a, 2));
}
BENCHMARK(BM_QNorm)->Arg(2)->Arg(3)->Arg(4);

static void BM_LambdaMaxH(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  Mat h = h_operator(-0.05, N, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_max(h));
}
BENCHMARK(BM_LambdaMaxH)->Arg(4)->Arg(6);

static void BM_DualNumeric(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dual_numeric(N, 2, 1e-8));
}
BENCHMARK(BM_DualNumeric)->Arg(3)->Arg(4);

static void BM_MatchingState(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matching_state(N, 2));
}
BENCHMARK(BM_MatchingState)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
