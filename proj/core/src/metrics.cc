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

#include "svrgeg/metrics.h"

#include "svrgeg/error.h"

namespace svrgeg {

double DualityGap(const AffineVI& problem, const Vec& z) {
  const BilinearStructure* b = problem.bilinear();
  if (b == nullptr) {
    throw InvalidArgument("DualityGap: requires a bilinear problem");
  }
  if (z.size() != problem.dim()) {
    throw InvalidArgument("DualityGap: dimension mismatch");
  }
  const auto n = b->primal_dim();
  const auto m = b->dual_dim();
  const auto x = z.head(n);
  const auto y = z.tail(m);
  Vec aty(n);
  Vec atx(m);
  b->A.Multiply(y, aty);
  b->A.MultiplyTransposed(x, atx);
  const double max_over_y = b->dual_set.SupportValue(atx - b->by);
  const double neg_min_over_x = b->primal_set.SupportValue(-(aty + b->bx));
  return b->bx.dot(x) + b->by.dot(y) + max_over_y + neg_min_over_x;
}

double NaturalResidual(const AffineVI& problem, const Vec& z, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("NaturalResidual: tau must be > 0");
  Vec step = z - tau * problem.Evaluate(z);
  problem.set().ProjectInPlace(step);
  return (z - step).norm() / tau;
}

double DistTheta(const KnownSolutionSet& known, const Vec& z, const Vec& w,
                 double theta) {
  if (known.empty()) throw InvalidArgument("DistTheta: no solution set");
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw InvalidArgument("DistTheta: theta must lie in [0, 1]");
  }
  if (z.size() != w.size()) throw InvalidArgument("DistTheta: dimension mismatch");
  const Vec c = theta * z + (1.0 - theta) * w;
  const Vec s = known.Project(c);
  return (c - s).squaredNorm() + theta * (1.0 - theta) * (z - w).squaredNorm();
}

double WeakSharpnessRatio(const AffineVI& problem,
                          const KnownSolutionSet& known, const Vec& x) {
  const Vec p = known.Project(x);
  const Vec d = x - p;
  const double norm = d.norm();
  if (norm == 0.0) {
    throw InvalidArgument("WeakSharpnessRatio: x lies on the solution set");
  }
  return problem.Evaluate(p).dot(d) / norm;
}

}  // namespace svrgeg
