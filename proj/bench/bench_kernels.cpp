// Copyright 2026 The anticonc Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "anticonc/exact.hpp"
#include "anticonc/oracle.hpp"
#include "anticonc/walk.hpp"

namespace {

using namespace anticonc;

std::vector<double> filled(int n) {
  std::vector<double> v(std::size_t{1} << n);
  Rng rng(1, 0);
  for (auto& x : v) x = rng.uniform();
  return v;
}

void BM_GateSerial(benchmark::State& st) {
  auto v = filled(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    kernels::apply_gate_serial(v, 1, 5, 0.4);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_GateParallel(benchmark::State& st) {
  auto v = filled(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    kernels::apply_gate_parallel(v, 1, 5, 0.4);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

void BM_SumSerial(benchmark::State& st) {
  const auto v = filled(static_cast<int>(st.range(0)));
  const auto f = filled(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::weighted_sum_serial(v, f));
}

void BM_SumParallel(benchmark::State& st) {
  const auto v = filled(static_cast<int>(st.range(0)));
  const auto f = filled(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::weighted_sum_parallel(v, f));
}

template <Exec E>
void BM_BiasedWalk(benchmark::State& st) {
  const auto src = GateSource::complete_graph({static_cast<int>(st.range(0)), 2}, 200);
  for (auto _ : st) benchmark::DoNotOptimize(estimate_z_biased(src, 20000, 1, E).log_z);
}

template <Exec E>
void BM_HaarOracle(benchmark::State& st) {
  const auto d = generate_complete_graph({static_cast<int>(st.range(0)), 2}, 8, 3);
  const auto src = GateSource::fixed(d);
  for (auto _ : st) benchmark::DoNotOptimize(estimate_z_haar_mc(src, 2000, 1, E).log_z);
}

}  // namespace

BENCHMARK(BM_GateSerial)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_GateParallel)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_SumSerial)->Arg(16)->Arg(20);
BENCHMARK(BM_SumParallel)->Arg(16)->Arg(20);
BENCHMARK(BM_BiasedWalk<Exec::Serial>)->Arg(20);
BENCHMARK(BM_BiasedWalk<Exec::Parallel>)->Arg(20);
BENCHMARK(BM_HaarOracle<Exec::Serial>)->Arg(4);
BENCHMARK(BM_HaarOracle<Exec::Parallel>)->Arg(4);

BENCHMARK_MAIN();
