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

#include "svrgeg/solvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <variant>

#include "svrgeg/error.h"

namespace svrgeg {
namespace {

constexpr double kEntropyFloor = 1e-300;
constexpr double kDefaultGamma = 0.99;
constexpr double kEgStep = 0.99;
constexpr double kPdaStep = 0.99;
constexpr double kOomdL2Step = 0.5;
constexpr double kOomdEntropyStep = 1.0;

void AppendSimplexBlocks(const FeasibleSet& set, Eigen::Index offset,
                         std::vector<std::pair<Eigen::Index, Eigen::Index>>& out,
                         bool& ok) {
  const auto& v = set.variant();
  if (std::holds_alternative<Simplex>(v)) {
    out.emplace_back(offset, set.dim());
  } else if (const auto* sp = std::get_if<SimplexProduct>(&v)) {
    for (int d : sp->block_dims) {
      out.emplace_back(offset, d);
      offset += d;
    }
  } else if (const auto* p = std::get_if<ProductSet>(&v)) {
    for (const auto& b : p->blocks) {
      AppendSimplexBlocks(b, offset, out, ok);
      offset += b.dim();
    }
  } else {
    ok = false;
  }
}

Vec StartingPoint(const AffineVI& problem, const SolverOptions& options) {
  if (!options.initial_point) return problem.set().Center();
  const Vec& z0 = *options.initial_point;
  if (z0.size() != problem.dim()) {
    throw InvalidArgument("initial point has the wrong dimension");
  }
  return problem.set().Project(z0);
}

}  // namespace

// --- SvrgParams -------------------------------------------------------------

SvrgParams SvrgParams::Defaults(int num_components, double lipschitz) {
  if (num_components < 1) throw InvalidArgument("SvrgParams: N must be >= 1");
  if (!(lipschitz > 0.0)) throw InvalidArgument("SvrgParams: L must be > 0");
  SvrgParams p;
  const double n = num_components;
  p.p = std::min(1.0, 2.0 / n);
  p.alpha = std::max(0.0, 1.0 - 2.0 / n);
  p.gamma = kDefaultGamma;
  p.lipschitz = lipschitz;
  p.tau = p.TheoreticalTau();
  p.inner_steps = std::max(1, num_components / 2);
  return p;
}

double SvrgParams::TheoreticalTau() const {
  return gamma * std::sqrt(1.0 - alpha) / lipschitz;
}

double SvrgParams::LooplessTheta() const {
  return alpha / (alpha + (1.0 - alpha) / p);
}

double SvrgParams::DoubleLoopTheta() const {
  return alpha / (alpha + inner_steps * (1.0 - alpha));
}

void SvrgParams::Validate(bool double_loop) const {
  std::string errors;
  if (!(p > 0.0 && p <= 1.0)) errors += " p must lie in (0, 1];";
  if (!(alpha >= 0.0 && alpha < 1.0)) errors += " alpha must lie in [0, 1);";
  if (!(gamma > 0.0 && gamma < 1.0)) errors += " gamma must lie in (0, 1);";
  if (!(tau > 0.0) || !std::isfinite(tau)) errors += " tau must be > 0;";
  if (!(lipschitz > 0.0)) errors += " L must be > 0;";
  if (double_loop && inner_steps < 1) errors += " K must be >= 1;";
  if (!errors.empty()) throw InvalidArgument("SvrgParams:" + errors);
}

// --- Solver -----------------------------------------------------------------

void Solver::CheckFinite(const Vec& v, const char* what) const {
  if (!v.allFinite()) {
    throw NumericalError(std::string(AlgorithmName(algorithm())), iteration_,
                         what);
  }
}

// --- Loopless SVRG-EG -------------------------------------------------------

SvrgLooplessSolver::SvrgLooplessSolver(const AffineVI& problem,
                                       const StochasticOracle& oracle,
                                       SvrgParams params, int num_components,
                                       Vec z0, std::uint64_t seed)
    : Solver(problem, num_components),
      oracle_(oracle),
      params_(params),
      rng_(seed),
      z_(std::move(z0)),
      cache_(problem, z_) {
  params_.Validate(false);
  initial_charge_ = cost_.InitialCharge(algorithm());
  zbar_.resize(z_.size());
  z_half_.resize(z_.size());
  estimate_.resize(z_.size());
}

Vec SvrgLooplessSolver::PendingHalfStep() const {
  Vec out = params_.alpha * z_ + (1.0 - params_.alpha) * cache_.w() -
            params_.tau * cache_.Fw();
  problem_.set().ProjectInPlace(out);
  return out;
}

std::int64_t SvrgLooplessSolver::Step(const IterateSink& sink) {
  const double alpha = params_.alpha;
  const double tau = params_.tau;
  zbar_ = alpha * z_ + (1.0 - alpha) * cache_.w();
  z_half_ = zbar_ - tau * cache_.Fw();
  problem_.set().ProjectInPlace(z_half_);

  const OracleSample xi = oracle_.Draw(rng_);
  oracle_.VarianceReducedEstimate(xi, z_half_, cache_, estimate_);
  z_ = zbar_ - tau * estimate_;
  problem_.set().ProjectInPlace(z_);
  CheckFinite(z_, "z");
  CheckFinite(z_half_, "z_half");

  const bool update = rng_.Uniform() < params_.p;
  if (update) cache_.Update(problem_, z_);

  if (sink) sink(z_half_, iteration_);
  ++iteration_;
  return cost_.Charge(algorithm(), ChargeContext{update, 0});
}

// --- Double-loop SVRG-EG ----------------------------------------------------

SvrgDoubleLoopSolver::SvrgDoubleLoopSolver(const AffineVI& problem,
                                           const StochasticOracle& oracle,
                                           SvrgParams params,
                                           int num_components, Vec z0,
                                           std::uint64_t seed)
    : Solver(problem, num_components),
      oracle_(oracle),
      params_(params),
      rng_(seed),
      z_(std::move(z0)),
      cache_(problem, z_) {
  params_.Validate(true);
  initial_charge_ = cost_.InitialCharge(algorithm());
  zbar_.resize(z_.size());
  z_half_.resize(z_.size());
  estimate_.resize(z_.size());
  inner_sum_.resize(z_.size());
}

std::int64_t SvrgDoubleLoopSolver::Step(const IterateSink& sink) {
  const double alpha = params_.alpha;
  const double tau = params_.tau;
  const int inner = params_.inner_steps;
  inner_sum_.setZero();
  for (int k = 0; k < inner; ++k) {
    zbar_ = alpha * z_ + (1.0 - alpha) * cache_.w();
    z_half_ = zbar_ - tau * cache_.Fw();
    problem_.set().ProjectInPlace(z_half_);
    const OracleSample xi = oracle_.Draw(rng_);
    oracle_.VarianceReducedEstimate(xi, z_half_, cache_, estimate_);
    z_ = zbar_ - tau * estimate_;
    problem_.set().ProjectInPlace(z_);
    CheckFinite(z_, "z");
    inner_sum_ += z_;
    if (sink) sink(z_half_, iteration_);
  }
  cache_.Update(problem_, inner_sum_ / static_cast<double>(inner));
  CheckFinite(cache_.w(), "w");
  ++iteration_;
  return cost_.Charge(algorithm(), ChargeContext{false, inner});
}

// --- Extragradient ----------------------------------------------------------

ExtragradientSolver::ExtragradientSolver(const AffineVI& problem, double tau,
                                         int num_components, Vec z0)
    : Solver(problem, num_components), tau_(tau), z_(std::move(z0)) {
  if (!(tau_ > 0.0)) throw InvalidArgument("EG: stepsize must be > 0");
  f_.resize(z_.size());
  z_half_.resize(z_.size());
}

std::int64_t ExtragradientSolver::Step(const IterateSink& sink) {
  problem_.Evaluate(z_, f_);
  z_half_ = z_ - tau_ * f_;
  problem_.set().ProjectInPlace(z_half_);
  problem_.Evaluate(z_half_, f_);
  z_ -= tau_ * f_;
  problem_.set().ProjectInPlace(z_);
  CheckFinite(z_, "z");
  if (sink) sink(z_half_, iteration_);
  ++iteration_;
  return cost_.Charge(algorithm());
}

// --- Primal-dual ------------------------------------------------------------

PrimalDualSolver::PrimalDualSolver(const AffineVI& problem, double step,
                                   int num_components, Vec z0)
    : Solver(problem, num_components), step_(step), z_(std::move(z0)) {
  if (problem.bilinear() == nullptr) {
    throw InvalidArgument("pda: requires a bilinear problem");
  }
  if (!(step_ > 0.0)) throw InvalidArgument("pda: stepsize must be > 0");
  const auto* b = problem.bilinear();
  x_bar_ = z_.head(b->primal_dim());
  aty_.resize(b->primal_dim());
  atx_.resize(b->dual_dim());
}

std::int64_t PrimalDualSolver::Step(const IterateSink& sink) {
  const auto* b = problem_.bilinear();
  const auto n = b->primal_dim();
  const auto m = b->dual_dim();
  auto x = z_.head(n);
  auto y = z_.tail(m);

  b->A.MultiplyTransposed(x_bar_, atx_);
  y += step_ * (atx_ - b->by);
  b->dual_set.ProjectInPlace(y);

  x_prev_ = x;
  b->A.Multiply(y, aty_);
  x -= step_ * (aty_ + b->bx);
  b->primal_set.ProjectInPlace(x);
  x_bar_ = 2.0 * x - x_prev_;

  CheckFinite(z_, "z");
  if (sink) sink(z_, iteration_);
  ++iteration_;
  return cost_.Charge(algorithm());
}

// --- Optimistic mirror descent ---------------------------------------------

OptimisticMirrorDescentSolver::OptimisticMirrorDescentSolver(
    const AffineVI& problem, Regularizer reg, double eta, int num_components,
    Vec z0)
    : Solver(problem, num_components), reg_(reg), eta_(eta), z_(std::move(z0)) {
  if (!(eta_ > 0.0)) throw InvalidArgument("oomd: stepsize must be > 0");
  if (reg_ == Regularizer::kEntropy) {
    blocks_ = SimplexBlocks(problem.set());
    if (blocks_.empty()) {
      throw InvalidArgument("oomd-entropy: every block must be a simplex");
    }
    z_ = z_.cwiseMax(kEntropyFloor);
    for (const auto& [off, len] : blocks_) {
      z_.segment(off, len) /= z_.segment(off, len).sum();
    }
  }
  z_hat_ = z_;
  prediction_ = Vec::Zero(z_.size());
  g_.resize(z_.size());
}

void OptimisticMirrorDescentSolver::MirrorStep(const Vec& from, const Vec& g,
                                               Vec& out) const {
  if (reg_ == Regularizer::kEuclidean) {
    out = from - eta_ * g;
    problem_.set().ProjectInPlace(out);
    return;
  }
  out.resize(from.size());
  for (const auto& [off, len] : blocks_) {
    auto src = from.segment(off, len);
    auto dst = out.segment(off, len);
    // Shift exponents by their max so the largest factor is exactly 1.
    const double shift = (-eta_ * g.segment(off, len)).maxCoeff();
    for (Eigen::Index i = 0; i < len; ++i) {
      dst[i] = std::max(src[i], kEntropyFloor) *
               std::exp(-eta_ * g[off + i] - shift);
    }
    dst /= dst.sum();
    dst = dst.cwiseMax(kEntropyFloor);
  }
}

std::int64_t OptimisticMirrorDescentSolver::Step(const IterateSink& sink) {
  MirrorStep(z_hat_, prediction_, z_);
  problem_.Evaluate(z_, g_);
  Vec next;
  MirrorStep(z_hat_, g_, next);
  z_hat_.swap(next);
  prediction_ = g_;
  CheckFinite(z_, "z");
  CheckFinite(z_hat_, "z_hat");
  if (sink) sink(z_, iteration_);
  ++iteration_;
  return cost_.Charge(algorithm());
}

// --- Regret matching+ -------------------------------------------------------

RegretMatchingPlusSolver::RegretMatchingPlusSolver(const AffineVI& problem,
                                                   int num_components, Vec z0)
    : Solver(problem, num_components), z_(std::move(z0)) {
  const auto* b = problem.bilinear();
  if (b == nullptr) throw InvalidArgument("rm+: requires a bilinear problem");
  blocks_ = SimplexBlocks(problem.set());
  if (blocks_.empty()) {
    throw InvalidArgument("rm+: both players must play on simplices");
  }
  regrets_ = Vec::Zero(z_.size());
  loss_.resize(z_.size());
}

void RegretMatchingPlusSolver::UpdatePlayer(Eigen::Index offset,
                                            Eigen::Index size,
                                            const Vec& loss) {
  for (const auto& [off, len] : blocks_) {
    if (off < offset || off + len > offset + size) continue;
    auto r = regrets_.segment(off, len);
    auto s = z_.segment(off, len);
    const auto l = loss.segment(off, len);
    const double expected = l.dot(s);
    r = (r.array() + (expected - l.array())).cwiseMax(0.0);
    const double total = r.sum();
    if (total > 0.0) {
      s = r / total;
    } else {
      s.setConstant(1.0 / static_cast<double>(len));
    }
  }
}

std::int64_t RegretMatchingPlusSolver::Step(const IterateSink& sink) {
  const auto* b = problem_.bilinear();
  const auto n = b->primal_dim();
  const auto m = b->dual_dim();

  // Losses are the operator blocks: A y + bx for x, -A^T x + by for y.
  b->A.Multiply(z_.tail(m), loss_.head(n));
  loss_.head(n) += b->bx;
  UpdatePlayer(0, n, loss_);

  b->A.MultiplyTransposed(z_.head(n), loss_.tail(m));
  loss_.tail(m) = b->by - loss_.tail(m);
  UpdatePlayer(n, m, loss_);

  CheckFinite(z_, "z");
  if (sink) sink(z_, iteration_);
  ++iteration_;
  return cost_.Charge(algorithm());
}

// --- Factory ----------------------------------------------------------------

std::vector<std::pair<Eigen::Index, Eigen::Index>> SimplexBlocks(
    const FeasibleSet& set) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  bool ok = true;
  AppendSimplexBlocks(set, 0, out, ok);
  if (!ok) out.clear();
  return out;
}

std::optional<std::string> CheckApplicable(Algorithm algorithm,
                                           const AffineVI& problem) {
  const std::string name(AlgorithmName(algorithm));
  switch (algorithm) {
    case Algorithm::kSvrgLoopless:
    case Algorithm::kSvrgDoubleLoop: {
      const PayoffMatrix* m = problem.bilinear() ? &problem.bilinear()->A
                                                 : problem.matrix();
      if (m->FrobeniusNorm() == 0.0) {
        return name + " needs a nonzero operator matrix for its sampled oracle";
      }
      return std::nullopt;
    }
    case Algorithm::kExtragradient:
    case Algorithm::kOomdL2:
      return std::nullopt;
    case Algorithm::kPrimalDual:
      if (!problem.bilinear()) return name + " requires a bilinear problem";
      return std::nullopt;
    case Algorithm::kOomdEntropy:
      if (!problem.set().IsSimplicial()) {
        return name + " requires every block of the feasible set to be a "
                      "simplex (it is not applicable to box domains)";
      }
      return std::nullopt;
    case Algorithm::kRegretMatchingPlus:
      if (!problem.bilinear()) return name + " requires a bilinear problem";
      if (!problem.set().IsSimplicial()) {
        return name + " requires both players to play on simplices (it is "
                      "not applicable to box domains)";
      }
      return std::nullopt;
  }
  return "unknown algorithm";
}

double OperatorNorm(const AffineVI& problem) {
  if (const auto* b = problem.bilinear()) return b->A.SpectralNorm();
  return problem.matrix()->SpectralNorm();
}

SolverBundle MakeSolver(Algorithm algorithm, const AffineVI& problem,
                        const SolverOptions& options, std::uint64_t seed) {
  if (auto why = CheckApplicable(algorithm, problem)) throw InvalidArgument(*why);
  if (!(options.tau_scale > 0.0)) {
    throw InvalidArgument("tau_scale must be > 0");
  }
  const int n = options.num_components.value_or(problem.ComponentCount());
  Vec z0 = StartingPoint(problem, options);
  SolverBundle bundle;

  if (algorithm == Algorithm::kSvrgLoopless ||
      algorithm == Algorithm::kSvrgDoubleLoop) {
    bundle.oracle = std::make_unique<StochasticOracle>(problem);
    SvrgParams params = SvrgParams::Defaults(n, bundle.oracle->lipschitz());
    if (options.p) params.p = *options.p;
    if (options.alpha) params.alpha = *options.alpha;
    if (options.gamma) params.gamma = *options.gamma;
    if (options.inner_steps) params.inner_steps = *options.inner_steps;
    params.tau = options.step.value_or(params.TheoreticalTau()) *
                 options.tau_scale;
    if (algorithm == Algorithm::kSvrgLoopless) {
      bundle.solver = std::make_unique<SvrgLooplessSolver>(
          problem, *bundle.oracle, params, n, std::move(z0), seed);
    } else {
      bundle.solver = std::make_unique<SvrgDoubleLoopSolver>(
          problem, *bundle.oracle, params, n, std::move(z0), seed);
    }
    return bundle;
  }

  auto baseline = [&](double constant) {
    if (options.step) return *options.step * options.tau_scale;
    const double norm = OperatorNorm(problem);
    if (!(norm > 0.0)) throw InvalidArgument("operator norm is zero");
    return constant / norm * options.tau_scale;
  };
  switch (algorithm) {
    case Algorithm::kExtragradient:
      bundle.solver = std::make_unique<ExtragradientSolver>(
          problem, baseline(kEgStep), n, std::move(z0));
      break;
    case Algorithm::kPrimalDual:
      bundle.solver = std::make_unique<PrimalDualSolver>(
          problem, baseline(kPdaStep), n, std::move(z0));
      break;
    case Algorithm::kOomdL2:
      bundle.solver = std::make_unique<OptimisticMirrorDescentSolver>(
          problem, OptimisticMirrorDescentSolver::Regularizer::kEuclidean,
          baseline(kOomdL2Step), n, std::move(z0));
      break;
    case Algorithm::kOomdEntropy:
      bundle.solver = std::make_unique<OptimisticMirrorDescentSolver>(
          problem, OptimisticMirrorDescentSolver::Regularizer::kEntropy,
          options.step.value_or(kOomdEntropyStep) * options.tau_scale, n,
          std::move(z0));
      break;
    case Algorithm::kRegretMatchingPlus:
      bundle.solver = std::make_unique<RegretMatchingPlusSolver>(problem, n,
                                                                 std::move(z0));
      break;
    default:
      throw InvalidArgument("unknown algorithm");
  }
  return bundle;
}

}  // namespace svrgeg
