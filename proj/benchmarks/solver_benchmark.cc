// Copyright 2026 The svrgeg Authors.
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

// Microbenchmarks for the hot paths: simplex projection, one stochastic
// estimate, and single solver steps on policeman-and-burglar instances.

#include <benchmark/benchmark.h>

#include "svrgeg/feasible_set.h"
#include "svrgeg/generators.h"
#include "svrgeg/oracle.h"
#include "svrgeg/rng.h"
#include "svrgeg/solvers.h"

namespace svrgeg {
namespace {

void BM_ProjectOntoSimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.Normal();
  Vec out(n);
  for (auto _ : state) {
    out = v;
    ProjectOntoSimplex(out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ProjectOntoSimplex)->Range(16, 4096);

void BM_VarianceReducedEstimate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AffineVI problem = MakePolicemanBurglar(n, 1);
  const StochasticOracle oracle(problem);
  const Vec z = problem.set().Center();
  const SnapshotCache cache(problem, z);
  Rng rng(3);
  Vec out(problem.dim());
  for (auto _ : state) {
    oracle.VarianceReducedEstimate(oracle.Draw(rng), z, cache, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_VarianceReducedEstimate)->Arg(100)->Arg(1000);

void BM_SolverStep(benchmark::State& state, Algorithm algorithm) {
  const int n = static_cast<int>(state.range(0));
  const AffineVI problem = MakePolicemanBurglar(n, 1);
  SolverBundle bundle = MakeSolver(algorithm, problem, SolverOptions{}, 5);
  const IterateSink sink = [](const Vec&, std::int64_t) {};
  std::int64_t charge = 0;
  for (auto _ : state) {
    charge += bundle.solver->Step(sink);
  }
  state.counters["charge_per_step"] = benchmark::Counter(
      static_cast<double>(charge), benchmark::Counter::kAvgIterations);
}
BENCHMARK_CAPTURE(BM_SolverStep, svrg_eg, Algorithm::kSvrgLoopless)
    ->Arg(100)
    ->Arg(1000);
BENCHMARK_CAPTURE(BM_SolverStep, eg, Algorithm::kExtragradient)
    ->Arg(100)
    ->Arg(1000);
BENCHMARK_CAPTURE(BM_SolverStep, rm_plus, Algorithm::kRegretMatchingPlus)
    ->Arg(100)
    ->Arg(1000);

}  // namespace
}  // namespace svrgeg
BENCHMARK_MAIN();
