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

#include "svrgeg/averaging.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "svrgeg/error.h"
#include "svrgeg/rng.h"

namespace svrgeg {
namespace {

Vec RandomVector(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.Normal();
  return v;
}

TEST(AveragingTest, LinearWeightsSkipFirstPush) {
  AveragingAccumulator acc(1);
  const Vec z0 = Vec::Constant(2, 10.0), z1 = Vec::Constant(2, 1.0),
            z2 = Vec::Constant(2, 4.0);
  acc.Push(z0);
  EXPECT_FALSE(acc.Current().has_value());
  acc.Push(z1);
  acc.Push(z2);
  EXPECT_TRUE(acc.Current()->isApprox((0 * z0 + 1 * z1 + 2 * z2) / 3.0));
  EXPECT_EQ(acc.count(), 3);
  EXPECT_DOUBLE_EQ(acc.total_weight(), 3.0);
}

TEST(AveragingTest, UniformIncludesFirstPush) {
  AveragingAccumulator acc(0);
  EXPECT_FALSE(acc.Current().has_value());
  acc.Push(Vec::Constant(3, 1.0));
  acc.Push(Vec::Constant(3, 2.0));
  EXPECT_TRUE(acc.Current()->isApprox(Vec::Constant(3, 1.5)));
}

TEST(AveragingTest, ConstantInputReproducedExactly) {
  const Vec c = (Vec(3) << 0.25, -1.0, 3.5).finished();
  for (int q = 0; q <= 3; ++q) {
    AveragingAccumulator acc(q);
    for (int k = 0; k < 5; ++k) acc.Push(c);
    EXPECT_TRUE(acc.Current()->isApprox(c, 1e-15));
  }
}

TEST(AveragingTest, BruteForceWithFourPushes) {
  Rng rng(1);
  std::vector<Vec> zs;
  AveragingAccumulator acc(1);
  for (int k = 0; k < 4; ++k) {
    zs.push_back(RandomVector(rng, 3));
    acc.Push(zs.back());
  }
  const Vec want = (1 * zs[1] + 2 * zs[2] + 3 * zs[3]) / 6.0;
  EXPECT_LE((*acc.Current() - want).norm(), 1e-15 * want.norm());
}

TEST(AveragingTest, ExactForLongSequences) {
  Rng rng(2);
  const int k_max = 10000;
  std::vector<Vec> zs;
  for (int k = 0; k < k_max; ++k) zs.push_back(RandomVector(rng, 4));
  for (int q = 0; q <= 3; ++q) {
    AveragingAccumulator acc(q);
    for (const Vec& z : zs) acc.Push(z);
    Eigen::Matrix<long double, Eigen::Dynamic, 1> sum =
        Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(4);
    long double total = 0;
    for (int k = 0; k < k_max; ++k) {
      const long double w = std::pow(static_cast<long double>(k), q);
      total += w;
      sum += w * zs[k].cast<long double>();
    }
    const Vec want = (sum / total).cast<double>();
    EXPECT_LE((*acc.Current() - want).norm(), 1e-12 * want.norm()) << q;
  }
}

TEST(AveragingTest, ConvexCombinationOfPushes) {
  Rng rng(3);
  AveragingAccumulator acc(2);
  Vec lo = Vec::Constant(5, 1e300), hi = Vec::Constant(5, -1e300);
  for (int k = 0; k < 100; ++k) {
    const Vec z = RandomVector(rng, 5);
    lo = lo.cwiseMin(z);
    hi = hi.cwiseMax(z);
    acc.Push(z);
    if (auto avg = acc.Current()) {
      ASSERT_TRUE(((avg->array() >= lo.array() - 1e-12) &&
                   (avg->array() <= hi.array() + 1e-12))
                      .all());
    }
  }
}

TEST(AveragingTest, EpochWeightsMatchFlattenedFormula) {
  // Pushing every inner half-iterate of epoch s with weight s^q equals
  // (1 / (K Q_S)) sum_s s^q sum_k z_k^s with Q_S = sum_s s^q.
  Rng rng(4);
  const int epochs = 6, k_inner = 3, q = 2;
  AveragingAccumulator acc(q);
  Vec sum = Vec::Zero(2);
  double q_s = 0.0;
  for (int s = 1; s <= epochs; ++s) {
    q_s += std::pow(s, q);
    for (int k = 0; k < k_inner; ++k) {
      const Vec z = RandomVector(rng, 2);
      acc.PushWithIndex(z, s);
      sum += std::pow(s, q) * z;
    }
  }
  EXPECT_TRUE(acc.Current()->isApprox(sum / (k_inner * q_s), 1e-14));
}

TEST(AveragingTest, RejectsMisuse) {
  EXPECT_THROW(AveragingAccumulator(-1), InvalidArgument);
  AveragingAccumulator acc(0);
  acc.Push(Vec::Zero(2));
  EXPECT_THROW(acc.Push(Vec::Zero(3)), InvalidArgument);
}

}  // namespace
}  // namespace svrgeg
