// Copyright 2026 The qstransfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "qst/fidelity.hpp"
#include "qst/oracle_full.hpp"
#include "qst/reduced_dynamics.hpp"

namespace {

using namespace qst;

ChainSpec chain(benchmark::State& state, Boundary b = Boundary::kClosed) {
  return ChainSpec(static_cast<int>(state.range(0)), b, Topology::kChained,
                   1.0, 4.0);
}

void BM_AmplitudeAction(benchmark::State& state) {
  const AmplitudePropagator p(chain(state));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.amplitude(t));
    t += 1e-3;
  }
}
BENCHMARK(BM_AmplitudeAction)->RangeMultiplier(2)->Range(4, 64);

void BM_ReducedRungeKutta(benchmark::State& state) {
  const ChainSpec spec = chain(state);
  const ReducedState s0 = initial_state(std::numbers::pi / 3, 0.2, spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(s0, spec, 2.0, Engine::kRungeKutta));
  }
}
BENCHMARK(BM_ReducedRungeKutta)->DenseRange(3, 10, 7)->Arg(20);

void BM_MaxFidelity(benchmark::State& state) {
  const ChainSpec spec = chain(state, Boundary::kOpen);
  for (auto _ : state) benchmark::DoNotOptimize(max_fidelity(spec));
}
BENCHMARK(BM_MaxFidelity)->DenseRange(3, 10, 1)->Unit(benchmark::kMillisecond);

void BM_FullOracle(benchmark::State& state) {
  const ChainSpec spec = chain(state);
  const std::vector<double> times{0.5, 1.0, 2.0};
  const auto rho0 = oracle::initial_full_state(std::numbers::pi / 3, 0.2, spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::propagate_full_grid(
        rho0, spec, times, oracle::default_oracle_options(spec)));
  }
}
BENCHMARK(BM_FullOracle)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
