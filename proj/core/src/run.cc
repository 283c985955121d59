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

#include "svrgeg/run.h"

#include <algorithm>

#include "svrgeg/averaging.h"
#include "svrgeg/error.h"
#include "svrgeg/metrics.h"

namespace svrgeg {
namespace {

constexpr double kNegativeGapTolerance = 1e-10;

int ResolveInnerSteps(const AffineVI& problem, const SolverOptions& options) {
  const int n = options.num_components.value_or(problem.ComponentCount());
  return options.inner_steps.value_or(std::max(1, n / 2));
}

}  // namespace

double ConvergenceMeasure(const AffineVI& problem, const Vec& z, double tau) {
  const double value = problem.bilinear() ? DualityGap(problem, z)
                                          : NaturalResidual(problem, z, tau);
  if (value < 0.0) {
    if (value < -kNegativeGapTolerance) {
      throw Error("negative duality gap " + std::to_string(value) +
                  " (weak duality violated)");
    }
    return 0.0;
  }
  return value;
}

std::int64_t MinEvalEvery(Algorithm algorithm, const AffineVI& problem,
                          const SolverOptions& solver_options) {
  const int n = solver_options.num_components.value_or(problem.ComponentCount());
  return CostModel(n).MaxStepCharge(algorithm,
                                    ResolveInnerSteps(problem, solver_options));
}

GapTrace Run(const AffineVI& problem, Algorithm algorithm,
             const SolverOptions& solver_options, const RunOptions& options,
             std::uint64_t seed) {
  const int n = solver_options.num_components.value_or(problem.ComponentCount());
  if (options.budget < n) {
    throw InvalidArgument("budget " + std::to_string(options.budget) +
                          " is smaller than one full operator evaluation (" +
                          std::to_string(n) + ")");
  }
  const std::int64_t min_every = MinEvalEvery(algorithm, problem, solver_options);
  if (options.eval_every < min_every) {
    throw InvalidArgument("eval_every " + std::to_string(options.eval_every) +
                          " is below the largest single-step charge " +
                          std::to_string(min_every) + " of " +
                          std::string(AlgorithmName(algorithm)));
  }

  SolverBundle bundle = MakeSolver(algorithm, problem, solver_options, seed);
  Solver& solver = *bundle.solver;

  std::vector<AveragingAccumulator> averages;
  for (int q : options.averaging_q) averages.emplace_back(q);
  const IterateSink sink = [&averages](const Vec& z, std::int64_t index) {
    for (auto& acc : averages) acc.PushWithIndex(z, index);
  };

  GapTrace trace;
  trace.metric = problem.bilinear() ? "duality_gap" : "natural_residual";
  trace.averaging_q = options.averaging_q;

  const bool with_dist = options.known != nullptr && !options.known->empty();
  const double tau = solver.step_size() > 0.0 ? solver.step_size() : 1.0;
  std::int64_t charge = solver.initial_charge();
  std::int64_t next = charge / options.eval_every + 1;

  while (charge < options.budget) {
    charge += solver.Step(sink);
    if (next * options.eval_every > options.budget ||
        charge < next * options.eval_every) {
      continue;
    }
    next = charge / options.eval_every + 1;

    GapTraceRow row;
    row.evals = charge;
    row.gap_last = ConvergenceMeasure(problem, solver.iterate(), tau);
    for (const auto& acc : averages) {
      const auto avg = acc.Current();
      row.gap_avg.push_back(avg ? ConvergenceMeasure(problem, *avg, tau)
                                : row.gap_last);
    }
    if (with_dist) {
      row.dist_theta = DistTheta(*options.known, solver.iterate(),
                                 solver.snapshot(), solver.theta());
    }
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

}  // namespace svrgeg
