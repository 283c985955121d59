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

#ifndef SVRGEG_GENERATORS_H_
#define SVRGEG_GENERATORS_H_

#include <cstdint>
#include <utility>

#include "svrgeg/problem.h"

namespace svrgeg {

// Policeman and burglar: A_ij = w_i (1 - exp(-0.8 |i - j|)), w_i = |N(0,1)|,
// over simplex x simplex. Weights are drawn in order i = 0..n-1 from
// Rng(seed).Normal().
AffineVI MakePolicemanBurglar(int n, std::uint64_t seed);

inline constexpr double kPolicemanBurglarTheta = 0.8;

// Symmetric test matrices over simplex x simplex (indices 1-based):
//   family 1: A_ij = ((i + j - 1) / (2n - 1))^alpha
//   family 2: A_ij = ((|i - j| + 1) / (2n - 1))^alpha
AffineVI MakeNemirovski(int n, int family, double alpha_exp);

// Integer payoffs uniform on {0, ..., 10}, drawn row-major from
// Rng(seed).Below(11).
AffineVI MakeUniformRandom(int n, int m, std::uint64_t seed);

// Matching pennies A = [[1, -1], [-1, 1]] with its unique equilibrium.
std::pair<AffineVI, KnownSolutionSet> MakeMatchingPennies();

// The two-dimensional weakly sharp example:
//   F(x) = ((x1 + x2)/2 - 2, (x1 + x2)/2 - 2)
//   X = {0 <= x <= 1, x1 + x2 <= 3/2}
// whose solution set is the segment from (1/2, 1) to (1, 1/2).
std::pair<AffineVI, KnownSolutionSet> MakeWeakSharpnessExample();

// A synthetic multi-label segmentation saddle point on a grid x grid image
// with `regions` labels:
//   min_{u in (simplex^h)^{pixels}} max_{|v|_inf <= 1/2}
//       sum_l <D u_l, v_l> + <d_l, u_l>
// D is the forward-difference gradient with zero rows at the far boundary
// (2 grid^2 rows per label). u is stored pixel-major (label fastest); v is
// indexed (pixel, direction, label). The payoff stored is the transposed
// block-diagonal gradient, so each payoff column has at most two nonzeros.
// The data term d_{p,l} = (I_p - c_l)^2 compares a noisy striped image I
// with centroids c_l = l / (h - 1).
AffineVI MakeSyntheticSegmentation(int grid, int regions, std::uint64_t seed);

}  // namespace svrgeg

#endif  // SVRGEG_GENERATORS_H_
