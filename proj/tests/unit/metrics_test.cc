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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "svrgeg/error.h"
#include "svrgeg/generators.h"
#include "svrgeg/rng.h"

namespace svrgeg {
namespace {

Vec V(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

TEST(DualityGapTest, MatchingPennies) {
  const auto [p, known] = MakeMatchingPennies();
  EXPECT_NEAR(DualityGap(p, V({0.5, 0.5, 0.5, 0.5})), 0.0, 1e-15);
  EXPECT_NEAR(DualityGap(p, V({1, 0, 0.5, 0.5})), 1.0, 1e-15);
}

TEST(DualityGapTest, NonnegativeOnRandomPoints) {
  Rng rng(1);
  const AffineVI p = MakePolicemanBurglar(9, 1);
  for (int t = 0; t < 1000; ++t) {
    ASSERT_GE(DualityGap(p, p.set().SampleUniform(rng)), -1e-12);
  }
}

TEST(DualityGapTest, SegmentationMatchesHalfL1Formula) {
  const AffineVI p = MakeSyntheticSegmentation(3, 2, 4);
  const auto* b = p.bilinear();
  const DenseMatrix a = b->A.ToDense();
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const Vec z = p.set().SampleUniform(rng);
    const Vec u = z.head(b->primal_dim()), v = z.tail(b->dual_dim());
    // max over the box of <A^T u, v> is half the l1 norm; min over each
    // pixel simplex picks the smallest coordinate of A v + d.
    const double max_v = 0.5 * (a.transpose() * u).lpNorm<1>() + b->bx.dot(u);
    const Vec g = a * v + b->bx;
    double min_u = 0.0;
    for (int pixel = 0; pixel < 9; ++pixel) min_u += g.segment(2 * pixel, 2).minCoeff();
    EXPECT_NEAR(DualityGap(p, z), max_v - min_u, 1e-12);
  }
}

TEST(DualityGapTest, RejectsGeneralOperator) {
  const auto [p, known] = MakeWeakSharpnessExample();
  EXPECT_THROW(DualityGap(p, V({0, 0})), InvalidArgument);
}

TEST(NaturalResidualTest, ZeroAtSolution) {
  const auto [p, known] = MakeMatchingPennies();
  EXPECT_LE(NaturalResidual(p, V({0.5, 0.5, 0.5, 0.5}), 0.3), 1e-12);
  const auto [ws, seg] = MakeWeakSharpnessExample();
  EXPECT_LE(NaturalResidual(ws, V({0.75, 0.75}), 0.1), 1e-12);
}

TEST(NaturalResidualTest, CornerOfWeakSharpnessExample) {
  const auto [p, known] = MakeWeakSharpnessExample();
  for (double tau : {1e-3, 0.01, 0.1}) {
    EXPECT_NEAR(NaturalResidual(p, V({0, 0}), tau), 2.0 * std::sqrt(2.0), 1e-12);
  }
}

TEST(NaturalResidualTest, InteriorEqualsOperatorNorm) {
  const AffineVI p(PayoffMatrix(DenseMatrix::Identity(2, 2)), V({0.1, -0.2}),
                   FeasibleSet::MakeUniformBox(2, -10, 10));
  const Vec z = V({1, 2});
  EXPECT_NEAR(NaturalResidual(p, z, 1e-3), p.Evaluate(z).norm(), 1e-12);
  EXPECT_THROW(NaturalResidual(p, z, 0.0), InvalidArgument);
}

TEST(DistThetaTest, SegmentExample) {
  const auto seg = KnownSolutionSet::MakeSegment(V({0.5, 1}), V({1, 0.5}));
  const Vec z = V({0, 0}), w = V({0.75, 0.75});
  EXPECT_NEAR(DistTheta(seg, z, w, 0.5), 9.0 / 16.0, 1e-15);
  // Line search over the segment parameter.
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 100000; ++k) {
    const Vec s = V({0.5, 1}) + (k / 100000.0) * V({0.5, -0.5});
    best = std::min(best, 0.5 * (z - s).squaredNorm() + 0.5 * (w - s).squaredNorm());
  }
  EXPECT_NEAR(best, 9.0 / 16.0, 1e-9);
}

TEST(DistThetaTest, MatchesLineSearchOnRandomInputs) {
  const auto seg = KnownSolutionSet::MakeSegment(V({0.5, 1}), V({1, 0.5}));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Vec z = V({rng.Uniform(), rng.Uniform()});
    const Vec w = V({rng.Uniform(), rng.Uniform()});
    const double theta = rng.Uniform();
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 20000; ++k) {
      const Vec s = V({0.5, 1}) + (k / 20000.0) * V({0.5, -0.5});
      best = std::min(best, theta * (z - s).squaredNorm() +
                                (1 - theta) * (w - s).squaredNorm());
    }
    const double got = DistTheta(seg, z, w, theta);
    EXPECT_LE(got, best + 1e-14);
    EXPECT_GE(got, best - 1e-8);
  }
}

TEST(DistThetaTest, DegenerateCases) {
  const auto seg = KnownSolutionSet::MakeSegment(V({0.5, 1}), V({1, 0.5}));
  EXPECT_EQ(DistTheta(seg, V({0.6, 0.9}), V({0.6, 0.9}), 0.3), 0.0);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const Vec z = V({rng.Uniform(), rng.Uniform()});
    EXPECT_NEAR(DistTheta(seg, z, V({0, 0}), 1.0),
                (z - seg.Project(z)).squaredNorm(), 1e-12);
  }
  const auto point = KnownSolutionSet::Point(V({0.5, 0.5, 0.5, 0.5}));
  EXPECT_NEAR(DistTheta(point, V({1, 0, 0.5, 0.5}), V({0.5, 0.5, 0.5, 0.5}), 0.5),
              0.25, 1e-15);
  EXPECT_THROW(DistTheta(KnownSolutionSet(), V({0, 0}), V({0, 0}), 0.5),
               InvalidArgument);
  EXPECT_THROW(DistTheta(seg, V({0, 0}), V({0, 0}), 1.5), InvalidArgument);
}

TEST(WeakSharpnessRatioTest, CornerValue) {
  const auto [p, known] = MakeWeakSharpnessExample();
  EXPECT_NEAR(WeakSharpnessRatio(p, known, V({0, 0})), 5.0 / (2.0 * std::sqrt(2.0)),
              1e-14);
  EXPECT_THROW(WeakSharpnessRatio(p, known, V({0.75, 0.75})), InvalidArgument);
}

TEST(WeakSharpnessRatioTest, NonnegativeEverywhere) {
  const auto [p, known] = MakeWeakSharpnessExample();
  Rng rng(5);
  for (int t = 0; t < 10000; ++t) {
    ASSERT_GT(WeakSharpnessRatio(p, known, p.set().SampleUniform(rng)), 0.0);
  }
}

}  // namespace
}  // namespace svrgeg
