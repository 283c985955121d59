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

#ifndef SVRGEG_RUN_H_
#define SVRGEG_RUN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svrgeg/cost_model.h"
#include "svrgeg/problem.h"
#include "svrgeg/solvers.h"

namespace svrgeg {

struct GapTraceRow {
  std::int64_t evals = 0;  // cumulative charge in F_xi units
  double gap_last = 0.0;
  std::vector<double> gap_avg;  // one per RunOptions::averaging_q
  std::optional<double> dist_theta;
};

struct GapTrace {
  // "duality_gap" for bilinear problems; "natural_residual" (|G_tau| at the
  // solver's stepsize) for general affine VIs.
  std::string metric;
  std::vector<int> averaging_q;
  std::vector<GapTraceRow> rows;
};

struct RunOptions {
  std::int64_t budget = 0;      // stop once the cumulative charge reaches it
  std::int64_t eval_every = 0;  // checkpoint cadence, F_xi units
  std::vector<int> averaging_q = {0, 1, 2};
  // When set and nonempty, rows carry dist^theta(z, w) with the solver's theta.
  const KnownSolutionSet* known = nullptr;
};

// Runs `algorithm` until the cumulative charge reaches the budget.
//
// Checkpoints are the multiples c * eval_every that exceed the initial
// charge and do not exceed the budget. The row for a multiple is recorded at
// the first iteration whose cumulative charge meets it, and `evals` holds the
// actual charge at that iteration. eval_every must be at least the largest
// single-step charge, so no step crosses two multiples and every seed yields
// the same number of rows.
//
// Averages are fed the solver's half-step iterates; while an average is
// still undefined its column repeats the last-iterate value. Gap evaluation
// is not charged.
GapTrace Run(const AffineVI& problem, Algorithm algorithm,
             const SolverOptions& solver_options, const RunOptions& options,
             std::uint64_t seed);

// The smallest admissible eval_every for `algorithm` on `problem`.
std::int64_t MinEvalEvery(Algorithm algorithm, const AffineVI& problem,
                          const SolverOptions& solver_options);

// Gap (bilinear) or natural residual (general) at z, clipping values in
// [-1e-10, 0) to zero. Throws Error for more negative values.
double ConvergenceMeasure(const AffineVI& problem, const Vec& z, double tau);

}  // namespace svrgeg

#endif  // SVRGEG_RUN_H_
