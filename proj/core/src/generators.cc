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

#include "svrgeg/generators.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "svrgeg/error.h"
#include "svrgeg/rng.h"

namespace svrgeg {
namespace {

AffineVI MatrixGame(DenseMatrix a) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  return AffineVI(BilinearStructure{PayoffMatrix(std::move(a)), Vec::Zero(n),
                                    Vec::Zero(m), FeasibleSet::MakeSimplex(n),
                                    FeasibleSet::MakeSimplex(m)});
}

}  // namespace

AffineVI MakePolicemanBurglar(int n, std::uint64_t seed) {
  if (n <= 0) throw InvalidArgument("policeman-burglar: n must be >= 1");
  Rng rng(seed);
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = std::abs(rng.Normal());
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = w[i] * (1.0 - std::exp(-kPolicemanBurglarTheta *
                                       std::abs(static_cast<double>(i - j))));
    }
  }
  return MatrixGame(std::move(a));
}

AffineVI MakeNemirovski(int n, int family, double alpha_exp) {
  if (n <= 0) throw InvalidArgument("nemirovski: n must be >= 1");
  if (family != 1 && family != 2) {
    throw InvalidArgument("nemirovski: family must be 1 or 2");
  }
  const double denom = 2.0 * n - 1.0;
  DenseMatrix a(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double base = family == 1 ? (i + j - 1) / denom
                                      : (std::abs(i - j) + 1) / denom;
      a(i - 1, j - 1) = std::pow(base, alpha_exp);
    }
  }
  return MatrixGame(std::move(a));
}

AffineVI MakeUniformRandom(int n, int m, std::uint64_t seed) {
  if (n <= 0 || m <= 0) {
    throw InvalidArgument("uniform-random: dimensions must be >= 1");
  }
  Rng rng(seed);
  DenseMatrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = static_cast<double>(rng.Below(11));
  }
  return MatrixGame(std::move(a));
}

std::pair<AffineVI, KnownSolutionSet> MakeMatchingPennies() {
  DenseMatrix a(2, 2);
  a << 1, -1, -1, 1;
  return {MatrixGame(std::move(a)),
          KnownSolutionSet::Point(Vec::Constant(4, 0.5))};
}

std::pair<AffineVI, KnownSolutionSet> MakeWeakSharpnessExample() {
  DenseMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  Vec q(2);
  q << -2.0, -2.0;
  FeasibleSet set = FeasibleSet::MakeHalfspaceBox(
      Vec::Zero(2), Vec::Ones(2), Vec::Ones(2), 1.5);
  Vec p0(2), p1(2);
  p0 << 0.5, 1.0;
  p1 << 1.0, 0.5;
  return {AffineVI(PayoffMatrix(std::move(m)), std::move(q), std::move(set)),
          KnownSolutionSet::MakeSegment(std::move(p0), std::move(p1))};
}

AffineVI MakeSyntheticSegmentation(int grid, int regions, std::uint64_t seed) {
  if (grid < 2) throw InvalidArgument("segmentation: grid must be >= 2");
  if (regions < 2) throw InvalidArgument("segmentation: regions must be >= 2");
  const int h = regions;
  const int pixels = grid * grid;
  const int n = pixels * h;
  const int m = 2 * pixels * h;

  auto u_index = [h](int pixel, int label) { return pixel * h + label; };
  auto v_index = [h](int pixel, int dir, int label) {
    return (pixel * 2 + dir) * h + label;
  };

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * m);
  for (int r = 0; r < grid; ++r) {
    for (int c = 0; c < grid; ++c) {
      const int p = r * grid + c;
      for (int l = 0; l < h; ++l) {
        if (c + 1 < grid) {
          triplets.emplace_back(u_index(p + 1, l), v_index(p, 0, l), 1.0);
          triplets.emplace_back(u_index(p, l), v_index(p, 0, l), -1.0);
        }
        if (r + 1 < grid) {
          triplets.emplace_back(u_index(p + grid, l), v_index(p, 1, l), 1.0);
          triplets.emplace_back(u_index(p, l), v_index(p, 1, l), -1.0);
        }
      }
    }
  }
  SparseMatrix a(n, m);
  a.setFromTriplets(triplets.begin(), triplets.end());

  // Vertical stripes, one per label, plus Gaussian noise.
  Rng rng(seed);
  Vec data(n);
  for (int r = 0; r < grid; ++r) {
    for (int c = 0; c < grid; ++c) {
      const int p = r * grid + c;
      const int stripe = std::min(h - 1, c * h / grid);
      const double intensity =
          static_cast<double>(stripe) / (h - 1) + 0.1 * rng.Normal();
      for (int l = 0; l < h; ++l) {
        const double centroid = static_cast<double>(l) / (h - 1);
        data[u_index(p, l)] = (intensity - centroid) * (intensity - centroid);
      }
    }
  }

  return AffineVI(BilinearStructure{
      PayoffMatrix(std::move(a)), std::move(data), Vec::Zero(m),
      FeasibleSet::MakeSimplexProduct(std::vector<int>(pixels, h)),
      FeasibleSet::MakeUniformBox(m, -0.5, 0.5)});
}

}  // namespace svrgeg
