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

#include "svrgeg/problem.h"

#include <cmath>
#include <vector>

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

AffineVI IdentityGame() {
  return AffineVI(BilinearStructure{PayoffMatrix(DenseMatrix::Identity(2, 2)),
                                    Vec::Zero(2), Vec::Zero(2),
                                    FeasibleSet::MakeSimplex(2),
                                    FeasibleSet::MakeSimplex(2)});
}

TEST(OperatorTest, MatchingPenniesEquilibriumIsZero) {
  const auto [problem, known] = MakeMatchingPennies();
  EXPECT_EQ(problem.Evaluate(Vec::Constant(4, 0.5)), Vec::Zero(4));
}

TEST(OperatorTest, WeakSharpnessExampleValue) {
  const auto [problem, known] = MakeWeakSharpnessExample();
  EXPECT_TRUE(problem.Evaluate(V({1, 0.5})).isApprox(V({-1.25, -1.25})));
  EXPECT_TRUE(problem.Evaluate(V({0, 0})).isApprox(V({-2, -2})));
}

TEST(OperatorTest, IdentityGameByHand) {
  EXPECT_EQ(IdentityGame().Evaluate(V({1, 0, 0, 1})), V({0, 1, -1, 0}));
}

TEST(OperatorTest, LinearTermsEnterWithGameSigns) {
  const AffineVI p(BilinearStructure{
      PayoffMatrix(DenseMatrix::Identity(2, 2)), V({1, 2}), V({3, 4}),
      FeasibleSet::MakeSimplex(2), FeasibleSet::MakeSimplex(2)});
  // F = (A y + bx, -A^T x + by).
  EXPECT_EQ(p.Evaluate(V({1, 0, 0, 1})), V({1, 3, 2, 4}));
}

TEST(OperatorTest, RejectsDimensionMismatch) {
  EXPECT_THROW(IdentityGame().Evaluate(V({1, 0, 0})), InvalidArgument);
}

TEST(OperatorTest, RejectsNonMonotoneGeneralOperator) {
  DenseMatrix m(2, 2);
  m << -1, 0, 0, 1;
  EXPECT_THROW(AffineVI(PayoffMatrix(m), Vec::Zero(2),
                        FeasibleSet::MakeUniformBox(2, 0, 1)),
               InvalidArgument);
}

std::vector<AffineVI> GeneratedInstances() {
  std::vector<AffineVI> out;
  out.push_back(MakePolicemanBurglar(12, 4));
  out.push_back(MakeNemirovski(9, 1, 1.0));
  out.push_back(MakeNemirovski(9, 2, 2.0));
  out.push_back(MakeUniformRandom(6, 10, 5));
  out.push_back(MakeMatchingPennies().first);
  out.push_back(MakeWeakSharpnessExample().first);
  out.push_back(MakeSyntheticSegmentation(3, 2, 6));
  return out;
}

TEST(GeneratedInstanceTest, OperatorsAreMonotone) {
  Rng rng(20);
  for (const auto& p : GeneratedInstances()) {
    for (int t = 0; t < 1000; ++t) {
      const Vec z1 = p.set().SampleUniform(rng);
      const Vec z2 = p.set().SampleUniform(rng);
      const double lhs = (p.Evaluate(z1) - p.Evaluate(z2)).dot(z1 - z2);
      ASSERT_GE(lhs, -1e-10 * (z1 - z2).squaredNorm());
    }
  }
}

TEST(GeneratedInstanceTest, BilinearMatchesMaterializedMatrix) {
  Rng rng(21);
  for (const auto& p : GeneratedInstances()) {
    if (p.dim() > 200) continue;
    const DenseMatrix m = p.MaterializeMatrix();
    Vec q = p.Evaluate(Vec::Zero(p.dim()));
    for (int t = 0; t < 20; ++t) {
      const Vec z = p.set().SampleUniform(rng);
      ASSERT_LE((p.Evaluate(z) - (m * z + q)).norm(),
                1e-12 * std::max(1.0, p.Evaluate(z).norm()));
    }
  }
}

TEST(PolicemanBurglarTest, SingleHouseIsZero) {
  for (std::uint64_t seed : {0, 1, 99}) {
    const AffineVI p = MakePolicemanBurglar(1, seed);
    EXPECT_EQ(p.bilinear()->A.Coeff(0, 0), 0.0);
  }
}

TEST(PolicemanBurglarTest, RecomputedFromSeededWeights) {
  const AffineVI p = MakePolicemanBurglar(3, 7);
  Rng rng(7);
  for (int i = 0; i < 3; ++i) {
    const double w = std::abs(rng.Normal());
    for (int j = 0; j < 3; ++j) {
      EXPECT_DOUBLE_EQ(p.bilinear()->A.Coeff(i, j),
                       w * (1.0 - std::exp(-0.8 * std::abs(i - j))));
    }
  }
}

TEST(PolicemanBurglarTest, ShapeAndErrors) {
  const AffineVI p = MakePolicemanBurglar(100, 2023);
  EXPECT_EQ(p.bilinear()->primal_dim(), 100);
  EXPECT_EQ(p.bilinear()->dual_dim(), 100);
  EXPECT_EQ(p.ComponentCount(), 100);
  EXPECT_THROW(MakePolicemanBurglar(0, 1), InvalidArgument);
}

TEST(NemirovskiTest, SmallCases) {
  EXPECT_EQ(MakeNemirovski(1, 1, 1.0).bilinear()->A.Coeff(0, 0), 1.0);
  const auto p = MakeNemirovski(2, 2, 1.0);
  const DenseMatrix a = p.bilinear()->A.ToDense();
  DenseMatrix want(2, 2);
  want << 1.0 / 3, 2.0 / 3, 2.0 / 3, 1.0 / 3;
  EXPECT_TRUE(a.isApprox(want, 1e-15));
  EXPECT_THROW(MakeNemirovski(2, 3, 1.0), InvalidArgument);
}

TEST(NemirovskiTest, SymmetricWithUnitRange) {
  for (int family : {1, 2}) {
    const DenseMatrix a = MakeNemirovski(13, family, 2.0).bilinear()->A.ToDense();
    EXPECT_TRUE(a.isApprox(a.transpose()));
    EXPECT_GE(a.minCoeff(), 0.0);
    EXPECT_LE(a.maxCoeff(), 1.0);
  }
}

TEST(UniformRandomTest, IntegerEntriesAndDeterminism) {
  const DenseMatrix a = MakeUniformRandom(30, 20, 3).bilinear()->A.ToDense();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const double x = a.data()[i];
    ASSERT_EQ(x, std::round(x));
    ASSERT_GE(x, 0.0);
    ASSERT_LE(x, 10.0);
  }
  EXPECT_EQ(MakeUniformRandom(2, 2, 0).bilinear()->A.ToDense(),
            MakeUniformRandom(2, 2, 0).bilinear()->A.ToDense());
  EXPECT_THROW(MakeUniformRandom(0, 3, 0), InvalidArgument);
  EXPECT_THROW(MakeUniformRandom(3, 0, 0), InvalidArgument);
}

TEST(UniformRandomTest, ComponentCountIsHarmonicMeanOfSides) {
  EXPECT_EQ(MakeUniformRandom(10, 30, 0).ComponentCount(), 15);
  EXPECT_EQ(MakeUniformRandom(7, 7, 0).ComponentCount(), 7);
}

TEST(WeakSharpnessExampleTest, SegmentSolvesTheVariationalInequality) {
  const auto [problem, known] = MakeWeakSharpnessExample();
  const auto& seg = std::get<Segment>(known.variant());
  for (double t = 0.0; t <= 1.0; t += 0.125) {
    const Vec s = seg.p0 + t * (seg.p1 - seg.p0);
    const Vec f = problem.Evaluate(s);
    EXPECT_TRUE(f.isApprox(V({-1.25, -1.25})));
    for (int i = 0; i <= 200; ++i) {
      for (int j = 0; j <= 200; ++j) {
        const Vec z = V({i / 200.0, j / 200.0});
        if (z.sum() > 1.5) continue;
        ASSERT_GE(f.dot(z - s), -1e-12);
      }
    }
  }
  EXPECT_TRUE(known.Verify(problem));
}

TEST(WeakSharpnessExampleTest, InequalityTowardsProjection) {
  const auto [problem, known] = MakeWeakSharpnessExample();
  Rng rng(30);
  for (int t = 0; t < 1000; ++t) {
    const Vec x = problem.set().SampleUniform(rng);
    const Vec px = known.Project(x);
    ASSERT_GE(problem.Evaluate(px).dot(x - px), -1e-12);
  }
}

TEST(SegmentationTest, Dimensions) {
  const AffineVI p = MakeSyntheticSegmentation(2, 2, 0);
  EXPECT_EQ(p.bilinear()->primal_dim(), 8);
  EXPECT_EQ(p.bilinear()->dual_dim(), 16);
  EXPECT_THROW(MakeSyntheticSegmentation(1, 2, 0), InvalidArgument);
  EXPECT_THROW(MakeSyntheticSegmentation(4, 1, 0), InvalidArgument);
}

TEST(SegmentationTest, GradientRowsAreForwardDifferences) {
  const AffineVI p = MakeSyntheticSegmentation(5, 3, 1);
  const DenseMatrix d = p.bilinear()->A.ToDense().transpose();
  for (Eigen::Index r = 0; r < d.rows(); ++r) {
    int nonzeros = 0;
    for (Eigen::Index c = 0; c < d.cols(); ++c) {
      const double x = d(r, c);
      if (x == 0.0) continue;
      ++nonzeros;
      ASSERT_TRUE(x == 1.0 || x == -1.0);
    }
    ASSERT_LE(nonzeros, 2);
    if (nonzeros == 2) ASSERT_EQ(d.row(r).sum(), 0.0);
  }
  EXPECT_TRUE(p.bilinear()->bx.minCoeff() >= 0.0);
}

TEST(SegmentationTest, ConstantLabelingHasZeroGradient) {
  const int grid = 4, h = 3;
  const AffineVI p = MakeSyntheticSegmentation(grid, h, 2);
  for (int label = 0; label < h; ++label) {
    Vec u = Vec::Zero(grid * grid * h);
    for (int pixel = 0; pixel < grid * grid; ++pixel) u[pixel * h + label] = 1.0;
    Vec grad(2 * grid * grid * h);
    p.bilinear()->A.MultiplyTransposed(u, grad);
    EXPECT_EQ(grad.norm(), 0.0);
  }
}

TEST(KnownSolutionSetTest, Projection) {
  const auto seg = KnownSolutionSet::MakeSegment(V({0.5, 1}), V({1, 0.5}));
  EXPECT_TRUE(seg.Project(V({0, 0})).isApprox(V({0.75, 0.75})));
  EXPECT_EQ(seg.Project(V({0.5, 1})), V({0.5, 1}));
  EXPECT_EQ(seg.Project(V({1, 0.5})), V({1, 0.5}));
  EXPECT_EQ(seg.Project(V({0, 5})), V({0.5, 1}));
  const auto point = KnownSolutionSet::Point(V({0.3, 0.7}));
  EXPECT_EQ(point.Project(V({9, -9})), V({0.3, 0.7}));
  EXPECT_THROW(KnownSolutionSet().Project(V({0, 0})), InvalidArgument);
}

TEST(KnownSolutionSetTest, VerifyRejectsWrongPoint) {
  const auto [problem, known] = MakeMatchingPennies();
  EXPECT_TRUE(known.Verify(problem));
  EXPECT_FALSE(KnownSolutionSet::Point(V({1, 0, 0.5, 0.5})).Verify(problem));
}

}  // namespace
}  // namespace svrgeg
