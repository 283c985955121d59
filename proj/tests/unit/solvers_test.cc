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

#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "svrgeg/error.h"
#include "svrgeg/generators.h"
#include "svrgeg/metrics.h"

namespace svrgeg {
namespace {

Vec V(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

const IterateSink kNoSink = [](const Vec&, std::int64_t) {};

TEST(SvrgParamsTest, Defaults) {
  const SvrgParams p = SvrgParams::Defaults(100, 3.0);
  EXPECT_DOUBLE_EQ(p.p, 0.02);
  EXPECT_DOUBLE_EQ(p.alpha, 0.98);
  EXPECT_DOUBLE_EQ(p.gamma, 0.99);
  EXPECT_EQ(p.inner_steps, 50);
  EXPECT_NEAR(p.TheoreticalTau(), 0.99 * std::sqrt(2.0) / (10.0 * 3.0), 1e-15);
  EXPECT_NEAR(p.TheoreticalTau(), p.gamma * std::sqrt(1 - p.alpha) / 3.0, 1e-12);
  EXPECT_NEAR(p.LooplessTheta(), 0.98 / (0.98 + 0.02 / 0.02), 1e-15);
  EXPECT_NEAR(p.DoubleLoopTheta(), 0.98 / (0.98 + 50 * 0.02), 1e-15);
}

TEST(SvrgParamsTest, SmallComponentCountsStayValid) {
  for (int n : {1, 2, 3}) {
    const SvrgParams p = SvrgParams::Defaults(n, 1.0);
    EXPECT_LE(p.p, 1.0);
    EXPECT_GE(p.alpha, 0.0);
    EXPECT_GE(p.inner_steps, 1);
    EXPECT_NO_THROW(p.Validate(true));
  }
}

TEST(SvrgParamsTest, ValidateRejectsOutOfRange) {
  SvrgParams p = SvrgParams::Defaults(10, 1.0);
  p.tau = p.TheoreticalTau();
  p.p = 0.0;
  EXPECT_THROW(p.Validate(false), InvalidArgument);
  p.p = 0.5;
  p.alpha = 1.0;
  EXPECT_THROW(p.Validate(false), InvalidArgument);
  p.alpha = 0.5;
  p.tau = -1.0;
  EXPECT_THROW(p.Validate(false), InvalidArgument);
}

TEST(SolverTest, StationaryInteriorPointIsFixed) {
  const auto [problem, known] = MakeMatchingPennies();
  SolverOptions options;
  options.initial_point = Vec::Constant(4, 0.5);
  for (Algorithm a : AllAlgorithms()) {
    SolverBundle b = MakeSolver(a, problem, options, 3);
    std::vector<Vec> halves;
    for (int t = 0; t < 50; ++t) {
      b.solver->Step([&](const Vec& z, std::int64_t) { halves.push_back(z); });
    }
    EXPECT_EQ(b.solver->iterate(), *options.initial_point) << AlgorithmName(a);
    for (const Vec& z : halves) ASSERT_EQ(z, *options.initial_point);
  }
}

TEST(SolverTest, LooplessStepMovesTowardsEquilibrium) {
  const auto [problem, known] = MakeMatchingPennies();
  SolverOptions options;
  options.initial_point = V({1, 0, 1, 0});
  SolverBundle b = MakeSolver(Algorithm::kSvrgLoopless, problem, options, 0);
  const Vec z_star = Vec::Constant(4, 0.5);
  const double before = (b.solver->iterate() - z_star).norm();
  b.solver->Step(kNoSink);
  EXPECT_LT((b.solver->iterate() - z_star).norm(), before);
}

TEST(SolverTest, LooplessHalfStepUsesSnapshotOperator) {
  const AffineVI problem = MakeUniformRandom(5, 4, 1);
  SolverOptions options;
  options.alpha = 0.0;
  options.p = 1.0;
  SolverBundle svrg = MakeSolver(Algorithm::kSvrgLoopless, problem, options, 0);
  auto& s = static_cast<SvrgLooplessSolver&>(*svrg.solver);
  const Vec z = s.iterate();
  const double tau = s.step_size();
  // With alpha = 0 the anchor is w = z, so z_half is an EG half step.
  EXPECT_TRUE(s.PendingHalfStep().isApprox(
      problem.set().Project(z - tau * problem.Evaluate(z))));
  Vec half;
  s.Step([&](const Vec& h, std::int64_t) { half = h; });
  EXPECT_TRUE(half.isApprox(problem.set().Project(z - tau * problem.Evaluate(z))));
  // p = 1 refreshes the snapshot every step.
  EXPECT_EQ(s.snapshot(), s.iterate());
  EXPECT_EQ(s.cache().Fw(), problem.Evaluate(s.iterate()));
}

TEST(SolverTest, LooplessExpectedContraction) {
  const int window = 500;
  for (int instance = 0; instance < 2; ++instance) {
    const auto [problem, known] =
        instance == 0 ? MakeMatchingPennies() : MakeWeakSharpnessExample();
    SolverOptions options;
    if (instance == 0) options.initial_point = V({1, 0, 0, 1});
    else options.num_components = 4;
    std::vector<double> mean(window + 1, 0.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SolverBundle b = MakeSolver(Algorithm::kSvrgLoopless, problem, options, seed);
      const double theta = b.solver->theta();
      for (int k = 0; k <= window; ++k) {
        if (k > 0) b.solver->Step(kNoSink);
        mean[k] += DistTheta(known, b.solver->iterate(), b.solver->snapshot(),
                             theta) / 10.0;
      }
    }
    // Geometric decrease of the seed average across the window.
    EXPECT_LT(mean[window], mean[0]) << instance;
    if (mean[window] > 0.0) {
      EXPECT_LT(std::pow(mean[window] / mean[0], 1.0 / window), 1.0);
    }
    EXPECT_LT(mean[window / 2], mean[0]);
  }
}

TEST(SolverTest, DoubleLoopSingleInnerStepSnapshotIsLastIterate) {
  const AffineVI problem = MakeUniformRandom(4, 4, 2);
  SolverOptions options;
  options.inner_steps = 1;
  SolverBundle b = MakeSolver(Algorithm::kSvrgDoubleLoop, problem, options, 1);
  for (int s = 0; s < 5; ++s) {
    b.solver->Step(kNoSink);
    EXPECT_TRUE(b.solver->snapshot().isApprox(b.solver->iterate(), 1e-15));
  }
}

TEST(SolverTest, DoubleLoopSnapshotIsInnerAverage) {
  const AffineVI problem = MakePolicemanBurglar(6, 3);
  SolverOptions options;
  options.inner_steps = 4;
  SolverBundle b = MakeSolver(Algorithm::kSvrgDoubleLoop, problem, options, 2);
  std::vector<Vec> halves;
  // Epochs are numbered from zero.
  b.solver->Step([&](const Vec& h, std::int64_t index) {
    EXPECT_EQ(index, 0);
    halves.push_back(h);
  });
  EXPECT_EQ(halves.size(), 4u);
  EXPECT_TRUE(problem.set().Contains(b.solver->snapshot(), 1e-12));
}

TEST(SolverTest, DoubleLoopLyapunovDecreases) {
  for (int instance = 0; instance < 2; ++instance) {
    const auto [problem, known] =
        instance == 0 ? MakeMatchingPennies() : MakeWeakSharpnessExample();
    SolverOptions options;
    if (instance == 0) options.initial_point = V({1, 0, 0, 1});
    else options.num_components = 4;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      SolverBundle b = MakeSolver(Algorithm::kSvrgDoubleLoop, problem, options, seed);
      const double theta = b.solver->theta();
      const double first =
          DistTheta(known, b.solver->iterate(), b.solver->snapshot(), theta);
      for (int s = 0; s < 20; ++s) b.solver->Step(kNoSink);
      EXPECT_LT(DistTheta(known, b.solver->iterate(), b.solver->snapshot(), theta),
                first);
    }
  }
}

TEST(SolverTest, ExtragradientSpiralsInOnMatchingPennies) {
  const auto [problem, known] = MakeMatchingPennies();
  SolverOptions options;
  options.initial_point = V({1, 0, 1, 0});
  SolverBundle b = MakeSolver(Algorithm::kExtragradient, problem, options, 0);
  const Vec z_star = Vec::Constant(4, 0.5);
  double prev = (b.solver->iterate() - z_star).norm();
  for (int t = 0; t < 100; ++t) {
    b.solver->Step(kNoSink);
    const double d = (b.solver->iterate() - z_star).norm();
    ASSERT_LT(d, prev) << t;
    prev = d;
  }
}

TEST(SolverTest, ExtragradientFirstOrderExpansion) {
  const AffineVI problem(PayoffMatrix(DenseMatrix::Identity(2, 2)), V({0.3, -0.1}),
                         FeasibleSet::MakeUniformBox(2, -5, 5));
  SolverOptions options;
  options.initial_point = V({1, 2});
  options.step = 1e-8;
  SolverBundle b = MakeSolver(Algorithm::kExtragradient, problem, options, 0);
  const Vec z = b.solver->iterate();
  b.solver->Step(kNoSink);
  const Vec predicted = z - 1e-8 * problem.Evaluate(z);
  EXPECT_LE((b.solver->iterate() - predicted).norm(), 1e-14);
}

TEST(SolverTest, OptimisticStepWithExactPredictionIsProjectedGradient) {
  // A constant operator makes the previous gradient an exact prediction.
  const AffineVI problem(BilinearStructure{
      PayoffMatrix(DenseMatrix::Zero(2, 3)), V({0.4, -0.2}), V({0.1, 0.5, -0.3}),
      FeasibleSet::MakeSimplex(2), FeasibleSet::MakeSimplex(3)});
  SolverOptions options;
  options.step = 0.7;
  SolverBundle b = MakeSolver(Algorithm::kOomdL2, problem, options, 0);
  auto& oomd = static_cast<OptimisticMirrorDescentSolver&>(*b.solver);
  b.solver->Step(kNoSink);
  const Vec anchor = oomd.secondary();
  b.solver->Step(kNoSink);
  const Vec want = problem.set().Project(anchor - 0.7 * problem.Evaluate(anchor));
  EXPECT_TRUE(oomd.iterate().isApprox(want, 1e-15));
  EXPECT_TRUE(oomd.secondary().isApprox(want, 1e-15));
}

TEST(SolverTest, EntropyIteratesStayPositive) {
  const AffineVI problem = MakeUniformRandom(5, 5, 9);
  SolverOptions options;
  options.tau_scale = 50.0;
  SolverBundle b = MakeSolver(Algorithm::kOomdEntropy, problem, options, 0);
  for (int t = 0; t < 500; ++t) {
    b.solver->Step(kNoSink);
    ASSERT_GT(b.solver->iterate().minCoeff(), 0.0);
    ASSERT_TRUE(problem.set().Contains(b.solver->iterate(), 1e-12));
  }
}

TEST(SolverTest, RegretMatchingPlusUniformStationaryAndRegretsNonnegative) {
  const auto [mp, known] = MakeMatchingPennies();
  SolverBundle b = MakeSolver(Algorithm::kRegretMatchingPlus, mp, {}, 0);
  for (int t = 0; t < 10; ++t) b.solver->Step(kNoSink);
  EXPECT_EQ(b.solver->iterate(), Vec::Constant(4, 0.5));

  const AffineVI problem = MakePolicemanBurglar(8, 5);
  SolverBundle r = MakeSolver(Algorithm::kRegretMatchingPlus, problem, {}, 0);
  auto& rm = static_cast<RegretMatchingPlusSolver&>(*r.solver);
  for (int t = 0; t < 300; ++t) {
    rm.Step(kNoSink);
    ASSERT_GE(rm.regrets().minCoeff(), 0.0);
    ASSERT_TRUE(problem.set().Contains(rm.iterate(), 1e-12));
  }
}

TEST(SolverTest, AllIteratesFeasible) {
  std::vector<AffineVI> problems;
  problems.push_back(MakePolicemanBurglar(10, 1));
  problems.push_back(MakeUniformRandom(6, 9, 2));
  problems.push_back(MakeSyntheticSegmentation(3, 3, 3));
  problems.push_back(MakeWeakSharpnessExample().first);
  for (const AffineVI& problem : problems) {
    for (Algorithm a : AllAlgorithms()) {
      if (CheckApplicable(a, problem)) continue;
      SolverBundle b = MakeSolver(a, problem, {}, 4);
      for (int t = 0; t < 60; ++t) {
        b.solver->Step([&](const Vec& z, std::int64_t) {
          ASSERT_TRUE(problem.set().Contains(z, 1e-10)) << AlgorithmName(a);
        });
        ASSERT_TRUE(problem.set().Contains(b.solver->iterate(), 1e-12))
            << AlgorithmName(a);
        ASSERT_TRUE(problem.set().Contains(b.solver->snapshot(), 1e-12))
            << AlgorithmName(a);
      }
    }
  }
}

TEST(SolverTest, PrimalDualKeepsSegmentationIteratesInTheirSets) {
  const AffineVI problem = MakeSyntheticSegmentation(8, 2, 1);
  SolverBundle b = MakeSolver(Algorithm::kPrimalDual, problem, {}, 0);
  for (int t = 0; t < 100; ++t) {
    b.solver->Step(kNoSink);
    ASSERT_TRUE(problem.set().Contains(b.solver->iterate(), 1e-12));
  }
}

TEST(SolverTest, Deterministic) {
  const AffineVI problem = MakePolicemanBurglar(12, 3);
  for (Algorithm a : AllAlgorithms()) {
    SolverBundle b1 = MakeSolver(a, problem, {}, 17);
    SolverBundle b2 = MakeSolver(a, problem, {}, 17);
    for (int t = 0; t < 200; ++t) {
      ASSERT_EQ(b1.solver->Step(kNoSink), b2.solver->Step(kNoSink));
    }
    EXPECT_EQ(b1.solver->iterate(), b2.solver->iterate()) << AlgorithmName(a);
  }
}

TEST(SolverTest, ApplicabilityChecks) {
  const AffineVI seg = MakeSyntheticSegmentation(3, 2, 0);
  EXPECT_TRUE(CheckApplicable(Algorithm::kRegretMatchingPlus, seg).has_value());
  EXPECT_TRUE(CheckApplicable(Algorithm::kOomdEntropy, seg).has_value());
  EXPECT_FALSE(CheckApplicable(Algorithm::kPrimalDual, seg).has_value());
  EXPECT_FALSE(CheckApplicable(Algorithm::kSvrgLoopless, seg).has_value());
  const auto [ws, known] = MakeWeakSharpnessExample();
  EXPECT_TRUE(CheckApplicable(Algorithm::kPrimalDual, ws).has_value());
  EXPECT_FALSE(CheckApplicable(Algorithm::kExtragradient, ws).has_value());
  EXPECT_THROW(MakeSolver(Algorithm::kRegretMatchingPlus, seg, {}, 0),
               InvalidArgument);
}

TEST(SolverTest, NonFiniteValuesAbort) {
  // The half step hits opposite box corners, so M z evaluates inf - inf.
  const AffineVI problem(PayoffMatrix(DenseMatrix::Constant(2, 2, 4.0)),
                         V({1e308, -1e308}),
                         FeasibleSet::MakeUniformBox(2, -1e308, 1e308));
  SolverOptions options;
  options.step = 1.0;
  SolverBundle b = MakeSolver(Algorithm::kExtragradient, problem, options, 0);
  try {
    for (int t = 0; t < 10; ++t) b.solver->Step(kNoSink);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_EQ(e.algorithm(), "eg");
    EXPECT_GE(e.iteration(), 0);
  }
}

TEST(SolverTest, BaselineStepsizes) {
  const AffineVI problem = MakePolicemanBurglar(15, 2);
  const double norm = OperatorNorm(problem);
  EXPECT_NEAR(norm, problem.bilinear()->A.SpectralNorm(), 1e-12);
  EXPECT_NEAR(MakeSolver(Algorithm::kExtragradient, problem, {}, 0).solver->step_size(),
              0.99 / norm, 1e-15);
  EXPECT_NEAR(MakeSolver(Algorithm::kPrimalDual, problem, {}, 0).solver->step_size(),
              0.99 / norm, 1e-15);
  EXPECT_NEAR(MakeSolver(Algorithm::kOomdL2, problem, {}, 0).solver->step_size(),
              0.5 / norm, 1e-15);
  EXPECT_EQ(MakeSolver(Algorithm::kOomdEntropy, problem, {}, 0).solver->step_size(),
            1.0);
  SolverOptions scaled;
  scaled.tau_scale = 20.0;
  const auto base = MakeSolver(Algorithm::kSvrgLoopless, problem, {}, 0);
  const auto big = MakeSolver(Algorithm::kSvrgLoopless, problem, scaled, 0);
  EXPECT_NEAR(big.solver->step_size(), 20.0 * base.solver->step_size(), 1e-15);
  EXPECT_NEAR(base.solver->step_size(),
              0.99 * std::sqrt(2.0) /
                  (std::sqrt(15.0) * problem.bilinear()->A.FrobeniusNorm()),
              1e-15);
}

}  // namespace
}  // namespace svrgeg
