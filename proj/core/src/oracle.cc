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

#include "svrgeg/oracle.h"

#include <algorithm>
#include <cmath>

#include "svrgeg/error.h"

namespace svrgeg {

SamplingDistribution::SamplingDistribution(const Vec& weights) {
  if (weights.size() == 0 || !weights.allFinite() || weights.minCoeff() < 0.0) {
    throw InvalidArgument("SamplingDistribution: weights must be finite, "
                          "nonnegative and nonempty");
  }
  const double total = weights.sum();
  if (total <= 0.0) {
    throw InvalidArgument("SamplingDistribution: all weights are zero");
  }
  prob_ = weights / total;
  cdf_.resize(prob_.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < prob_.size(); ++i) {
    acc += prob_[i];
    cdf_[i] = acc;
  }
}

Eigen::Index SamplingDistribution::Sample(Rng& rng) const {
  const double u = rng.Uniform() * cdf_[cdf_.size() - 1];
  // First index with cdf > u; zero-probability entries share their
  // predecessor's cdf value and can never be that first index.
  const double* begin = cdf_.data();
  const double* end = begin + cdf_.size();
  const double* it = std::upper_bound(begin, end, u);
  if (it == end) {
    // u rounds onto the total: take the last positive-probability entry.
    Eigen::Index i = cdf_.size() - 1;
    while (prob_[i] == 0.0) --i;
    return i;
  }
  return it - begin;
}

SnapshotCache::SnapshotCache(const AffineVI& problem, Vec w) {
  Update(problem, w);
}

void SnapshotCache::Update(const AffineVI& problem, const Vec& w) {
  w_ = w;
  fw_.resize(w.size());
  problem.Evaluate(w_, fw_);
  ++updates_;
}

StochasticOracle::StochasticOracle(const AffineVI& problem)
    : problem_(&problem), bilinear_(problem.bilinear()) {
  if (bilinear_) {
    const auto& a = bilinear_->A;
    lipschitz_ = a.FrobeniusNorm();
    if (lipschitz_ == 0.0) {
      throw InvalidArgument("StochasticOracle: payoff matrix is all zero");
    }
    rows_ = SamplingDistribution(a.row_squared_norms());
    cols_ = SamplingDistribution(a.col_squared_norms());
  } else {
    const auto& m = *problem.matrix();
    lipschitz_ = m.FrobeniusNorm();
    if (lipschitz_ == 0.0) {
      throw InvalidArgument("StochasticOracle: operator matrix is all zero");
    }
    cols_ = SamplingDistribution(m.col_squared_norms());
  }
}

OracleSample StochasticOracle::Draw(Rng& rng) const {
  OracleSample s;
  if (bilinear_) s.row = rows_.Sample(rng);
  s.col = cols_.Sample(rng);
  return s;
}

void StochasticOracle::Evaluate(const OracleSample& s,
                                const Eigen::Ref<const Vec>& z,
                                Eigen::Ref<Vec> out) const {
  out = problem_->offset();
  if (bilinear_) {
    const auto n = bilinear_->primal_dim();
    const auto m = bilinear_->dual_dim();
    const double pj = cols_.probabilities()[s.col];
    const double pi = rows_.probabilities()[s.row];
    bilinear_->A.AddScaledColumn(s.col, z[n + s.col] / pj, out.head(n));
    bilinear_->A.AddScaledRow(s.row, -z[s.row] / pi, out.tail(m));
  } else {
    const double pj = cols_.probabilities()[s.col];
    problem_->matrix()->AddScaledColumn(s.col, z[s.col] / pj, out);
  }
}

void StochasticOracle::VarianceReducedEstimate(
    const OracleSample& s, const Eigen::Ref<const Vec>& z_half,
    const SnapshotCache& cache, Eigen::Ref<Vec> out) const {
  // The offset q cancels between the two sampled terms.
  out = cache.Fw();
  const Vec& w = cache.w();
  if (bilinear_) {
    const auto n = bilinear_->primal_dim();
    const auto m = bilinear_->dual_dim();
    const double pj = cols_.probabilities()[s.col];
    const double pi = rows_.probabilities()[s.row];
    const double dy = z_half[n + s.col] - w[n + s.col];
    const double dx = z_half[s.row] - w[s.row];
    bilinear_->A.AddScaledColumn(s.col, dy / pj, out.head(n));
    bilinear_->A.AddScaledRow(s.row, -dx / pi, out.tail(m));
  } else {
    const double pj = cols_.probabilities()[s.col];
    problem_->matrix()->AddScaledColumn(s.col, (z_half[s.col] - w[s.col]) / pj,
                                        out);
  }
}

double StochasticOracle::ExactMeanSquaredDifference(const Vec& z1,
                                                    const Vec& z2) const {
  const Vec d = z1 - z2;
  double total = 0.0;
  if (bilinear_) {
    const auto n = bilinear_->primal_dim();
    const Vec& pr = rows_.probabilities();
    const Vec& pc = cols_.probabilities();
    const Vec& rsq = bilinear_->A.row_squared_norms();
    const Vec& csq = bilinear_->A.col_squared_norms();
    for (Eigen::Index i = 0; i < pr.size(); ++i) {
      if (pr[i] > 0.0) total += rsq[i] * d[i] * d[i] / pr[i];
    }
    for (Eigen::Index j = 0; j < pc.size(); ++j) {
      if (pc[j] > 0.0) total += csq[j] * d[n + j] * d[n + j] / pc[j];
    }
  } else {
    const Vec& pc = cols_.probabilities();
    const Vec& csq = problem_->matrix()->col_squared_norms();
    for (Eigen::Index j = 0; j < pc.size(); ++j) {
      if (pc[j] > 0.0) total += csq[j] * d[j] * d[j] / pc[j];
    }
  }
  return total;
}

double StochasticOracle::ExactEstimatorVariance(const Vec& z_half,
                                                const Vec& w) const {
  // Var = E|F_xi(z_half) - F_xi(w)|^2 - |F(z_half) - F(w)|^2.
  Vec diff = problem_->Evaluate(z_half) - problem_->Evaluate(w);
  const double v = ExactMeanSquaredDifference(z_half, w) - diff.squaredNorm();
  return std::max(v, 0.0);
}

void StochasticOracle::ForEachSample(
    const std::function<void(const OracleSample&, double)>& fn) const {
  const Vec& pc = cols_.probabilities();
  if (bilinear_) {
    const Vec& pr = rows_.probabilities();
    for (Eigen::Index i = 0; i < pr.size(); ++i) {
      if (pr[i] == 0.0) continue;
      for (Eigen::Index j = 0; j < pc.size(); ++j) {
        if (pc[j] == 0.0) continue;
        fn(OracleSample{i, j}, pr[i] * pc[j]);
      }
    }
  } else {
    for (Eigen::Index j = 0; j < pc.size(); ++j) {
      if (pc[j] > 0.0) fn(OracleSample{-1, j}, pc[j]);
    }
  }
}

}  // namespace svrgeg
