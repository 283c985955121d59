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

#ifndef SVRGEG_SOLVERS_H_
#define SVRGEG_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svrgeg/cost_model.h"
#include "svrgeg/oracle.h"
#include "svrgeg/problem.h"
#include "svrgeg/rng.h"
#include "svrgeg/types.h"

namespace svrgeg {

// Parameters shared by both SVRG-EG variants. With the defaults
// p = 2/N, alpha = 1 - 2/N, gamma = 0.99 the stepsize
// tau = gamma sqrt(1 - alpha) / L equals 0.99 sqrt(2) / (sqrt(N) L).
struct SvrgParams {
  double p = 1.0;
  double alpha = 0.0;
  double gamma = 0.99;
  double tau = 0.0;
  double lipschitz = 1.0;
  int inner_steps = 1;  // K, double loop only

  // p and alpha are clamped to [.., 1] and [0, ..] for N <= 2; K = N/2.
  static SvrgParams Defaults(int num_components, double lipschitz);

  double TheoreticalTau() const;
  // alpha / (alpha + (1 - alpha) / p)
  double LooplessTheta() const;
  // alpha / (alpha + K (1 - alpha))
  double DoubleLoopTheta() const;

  // Throws InvalidArgument listing every violated range.
  void Validate(bool double_loop) const;
};

// Everything needed to build any solver. Unset fields take the defaults of
// the algorithm: baseline steps are 0.99/|A|_2 (EG, PDA), 0.5/|A|_2
// (OOMD-l2) and 1 (OOMD-entropy); SVRG-EG uses SvrgParams::Defaults.
// tau_scale multiplies whichever stepsize results.
struct SolverOptions {
  std::optional<Vec> initial_point;
  std::optional<int> num_components;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> gamma;
  std::optional<int> inner_steps;
  std::optional<double> step;
  double tau_scale = 1.0;
};

// Receives every iterate that feeds the averages, with the index whose q-th
// power is its weight.
using IterateSink = std::function<void(const Vec& iterate, std::int64_t index)>;

class Solver {
 public:
  virtual ~Solver() = default;

  virtual Algorithm algorithm() const = 0;

  // One iteration (one epoch for the double loop). Returns its charge in
  // F_xi units. Throws NumericalError on a non-finite iterate.
  virtual std::int64_t Step(const IterateSink& sink) = 0;

  // Last iterate z_k.
  virtual const Vec& iterate() const = 0;
  // Snapshot w_k for SVRG variants; the iterate otherwise.
  virtual const Vec& snapshot() const { return iterate(); }
  // Weight of the Lyapunov function dist^theta(z, w).
  virtual double theta() const { return 1.0; }
  // The stepsize actually used.
  virtual double step_size() const = 0;

  std::int64_t iteration() const { return iteration_; }
  std::int64_t initial_charge() const { return initial_charge_; }
  const CostModel& cost_model() const { return cost_; }

 protected:
  Solver(const AffineVI& problem, int num_components)
      : problem_(problem), cost_(num_components) {}

  void CheckFinite(const Vec& v, const char* what) const;

  const AffineVI& problem_;
  CostModel cost_;
  std::int64_t iteration_ = 0;
  std::int64_t initial_charge_ = 0;
};

// Loopless SVRG-EG. Per step, with the cached F(w):
//   zbar   = alpha z + (1 - alpha) w
//   z_half = P(zbar - tau F(w))
//   draw xi;  Fhat = F_xi(z_half) - F_xi(w) + F(w)
//   z      = P(zbar - tau Fhat)
//   with probability p (coin drawn after xi): w = z, recompute F(w).
class SvrgLooplessSolver final : public Solver {
 public:
  SvrgLooplessSolver(const AffineVI& problem, const StochasticOracle& oracle,
                     SvrgParams params, int num_components, Vec z0,
                     std::uint64_t seed);

  Algorithm algorithm() const override { return Algorithm::kSvrgLoopless; }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  const Vec& snapshot() const override { return cache_.w(); }
  double theta() const override { return params_.LooplessTheta(); }
  double step_size() const override { return params_.tau; }

  // The half step the next Step() will take (deterministic given z, w).
  Vec PendingHalfStep() const;
  const SvrgParams& params() const { return params_; }
  const SnapshotCache& cache() const { return cache_; }

 private:
  const StochasticOracle& oracle_;
  SvrgParams params_;
  Rng rng_;
  Vec z_;
  SnapshotCache cache_;
  Vec zbar_, z_half_, estimate_;
};

// Double-loop SVRG-EG. An epoch runs K inner steps against a fixed snapshot,
// then moves the snapshot to the mean of the K new inner iterates and
// continues from the last one.
class SvrgDoubleLoopSolver final : public Solver {
 public:
  SvrgDoubleLoopSolver(const AffineVI& problem, const StochasticOracle& oracle,
                       SvrgParams params, int num_components, Vec z0,
                       std::uint64_t seed);

  Algorithm algorithm() const override { return Algorithm::kSvrgDoubleLoop; }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  const Vec& snapshot() const override { return cache_.w(); }
  double theta() const override { return params_.DoubleLoopTheta(); }
  double step_size() const override { return params_.tau; }

  const SvrgParams& params() const { return params_; }

 private:
  const StochasticOracle& oracle_;
  SvrgParams params_;
  Rng rng_;
  Vec z_;
  SnapshotCache cache_;
  Vec zbar_, z_half_, estimate_, inner_sum_;
};

// Deterministic extragradient:
//   z_half = P(z - tau F(z)),  z = P(z - tau F(z_half)).
class ExtragradientSolver final : public Solver {
 public:
  ExtragradientSolver(const AffineVI& problem, double tau, int num_components,
                      Vec z0);

  Algorithm algorithm() const override { return Algorithm::kExtragradient; }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  double step_size() const override { return tau_; }

 private:
  double tau_;
  Vec z_, f_, z_half_;
};

// Chambolle-Pock primal-dual with extrapolation 1 and equal steps:
//   y = P_Y(y + s (A^T xbar - by));  x' = P_X(x - s (A y + bx));
//   xbar = 2 x' - x.
class PrimalDualSolver final : public Solver {
 public:
  PrimalDualSolver(const AffineVI& problem, double step, int num_components,
                   Vec z0);

  Algorithm algorithm() const override { return Algorithm::kPrimalDual; }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  double step_size() const override { return step_; }

 private:
  double step_;
  Vec z_, x_bar_, x_prev_, aty_, atx_;
};

// Optimistic mirror descent with the previous operator value as prediction.
// With secondary sequence zhat and prediction m_t = F(z_{t-1}) (m_0 = 0):
//   z_t = argmin <eta m_t, z> + D(z, zhat_t)
//   zhat_{t+1} = argmin <eta F(z_t), z> + D(z, zhat_t)
// D is the squared Euclidean distance (projections) or the KL divergence
// (multiplicative updates on every simplex block). The played point z_t is
// the reported iterate.
class OptimisticMirrorDescentSolver final : public Solver {
 public:
  enum class Regularizer { kEuclidean, kEntropy };

  OptimisticMirrorDescentSolver(const AffineVI& problem, Regularizer reg,
                                double eta, int num_components, Vec z0);

  Algorithm algorithm() const override {
    return reg_ == Regularizer::kEuclidean ? Algorithm::kOomdL2
                                           : Algorithm::kOomdEntropy;
  }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  double step_size() const override { return eta_; }

  const Vec& secondary() const { return z_hat_; }

 private:
  void MirrorStep(const Vec& from, const Vec& g, Vec& out) const;

  Regularizer reg_;
  double eta_;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks_;
  Vec z_, z_hat_, prediction_, g_;
};

// Regret matching+ with alternation: x updates against the current y, then
// y against the new x; cumulative regrets are clipped at zero after every
// update. Linear averaging comes from the q = 1 accumulator.
class RegretMatchingPlusSolver final : public Solver {
 public:
  RegretMatchingPlusSolver(const AffineVI& problem, int num_components, Vec z0);

  Algorithm algorithm() const override {
    return Algorithm::kRegretMatchingPlus;
  }
  std::int64_t Step(const IterateSink& sink) override;
  const Vec& iterate() const override { return z_; }
  double step_size() const override { return 0.0; }

  const Vec& regrets() const { return regrets_; }

 private:
  void UpdatePlayer(Eigen::Index offset, Eigen::Index size, const Vec& loss);

  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks_;
  Vec z_, regrets_, loss_;
};

// Offsets and sizes of every simplex block of `set`; empty if some block is
// not a simplex.
std::vector<std::pair<Eigen::Index, Eigen::Index>> SimplexBlocks(
    const FeasibleSet& set);

// Why `algorithm` cannot run on `problem`, or nullopt if it can.
std::optional<std::string> CheckApplicable(Algorithm algorithm,
                                           const AffineVI& problem);

// Owns the oracle (when needed) together with the solver.
struct SolverBundle {
  std::unique_ptr<StochasticOracle> oracle;
  std::unique_ptr<Solver> solver;
};

// Resolves defaults and builds the solver. `problem` must outlive the bundle.
SolverBundle MakeSolver(Algorithm algorithm, const AffineVI& problem,
                        const SolverOptions& options, std::uint64_t seed);

// |A|_2 for bilinear problems, |M|_2 otherwise.
double OperatorNorm(const AffineVI& problem);

}  // namespace svrgeg

#endif  // SVRGEG_SOLVERS_H_
