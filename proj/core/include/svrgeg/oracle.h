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

#ifndef SVRGEG_ORACLE_H_
#define SVRGEG_ORACLE_H_

#include <cstdint>
#include <functional>

#include "svrgeg/problem.h"
#include "svrgeg/rng.h"
#include "svrgeg/types.h"

namespace svrgeg {

// A discrete distribution proportional to nonnegative weights, sampled by
// inverse CDF. Zero-weight outcomes are never drawn.
class SamplingDistribution {
 public:
  SamplingDistribution() = default;
  explicit SamplingDistribution(const Vec& weights);

  Eigen::Index Sample(Rng& rng) const;

  const Vec& probabilities() const { return prob_; }
  const Vec& cdf() const { return cdf_; }
  Eigen::Index size() const { return prob_.size(); }

 private:
  Vec prob_;
  Vec cdf_;
};

// One draw xi. For bilinear problems (row, col) index a row and a column of
// A; for general affine problems only `col` (a column of M) is used.
struct OracleSample {
  Eigen::Index row = -1;
  Eigen::Index col = -1;
};

// Full snapshot w together with F(w). Fw is recomputed whenever w changes,
// so the pair can never go stale.
class SnapshotCache {
 public:
  SnapshotCache() = default;
  SnapshotCache(const AffineVI& problem, Vec w);

  void Update(const AffineVI& problem, const Vec& w);

  const Vec& w() const { return w_; }
  const Vec& Fw() const { return fw_; }
  std::int64_t updates() const { return updates_; }

 private:
  Vec w_;
  Vec fw_;
  std::int64_t updates_ = 0;
};

// Importance-sampled oracle.
//
// Bilinear F(x, y) = (A y + bx, -A^T x + by): draw row i with
// p_i = |A_i|^2 / |A|_F^2 and column j with p_j = |A_.j|^2 / |A|_F^2
// independently, and return
//
//   F_xi(z) = ( A_.j y_j / p_j + bx,  -A_i^T x_i / p_i + by ).
//
// The 1/p weights make the estimate unbiased, and
// E|F_xi(z1) - F_xi(z2)|^2 = |A|_F^2 |z1 - z2|^2, i.e. L = |A|_F.
//
// General F(z) = M z + q: draw column j of M with p_j proportional to
// |M_.j|^2 and return M_.j z_j / p_j + q, again with L = |M|_F.
class StochasticOracle {
 public:
  // Throws InvalidArgument for an all-zero operator matrix.
  explicit StochasticOracle(const AffineVI& problem);

  const AffineVI& problem() const { return *problem_; }
  const SamplingDistribution& row_distribution() const { return rows_; }
  const SamplingDistribution& col_distribution() const { return cols_; }

  // |A|_F (or |M|_F).
  double lipschitz() const { return lipschitz_; }

  // Row index first, then column (bilinear); column only (general).
  OracleSample Draw(Rng& rng) const;

  void Evaluate(const OracleSample& s, const Eigen::Ref<const Vec>& z,
                Eigen::Ref<Vec> out) const;

  // out = F_xi(z_half) - F_xi(w) + F(w), with the same sample in both terms.
  void VarianceReducedEstimate(const OracleSample& s,
                               const Eigen::Ref<const Vec>& z_half,
                               const SnapshotCache& cache,
                               Eigen::Ref<Vec> out) const;

  // E_xi |F_xi(z1) - F_xi(z2)|^2, in closed form over the full support.
  double ExactMeanSquaredDifference(const Vec& z1, const Vec& z2) const;

  // E_xi |F_hat(z_half) - F(z_half)|^2 for snapshot w, in closed form.
  double ExactEstimatorVariance(const Vec& z_half, const Vec& w) const;

  // Calls fn(sample, probability) for every sample of positive probability.
  void ForEachSample(
      const std::function<void(const OracleSample&, double)>& fn) const;

 private:
  const AffineVI* problem_;
  const BilinearStructure* bilinear_;
  SamplingDistribution rows_;
  SamplingDistribution cols_;
  double lipschitz_ = 0.0;
};

}  // namespace svrgeg

#endif  // SVRGEG_ORACLE_H_
