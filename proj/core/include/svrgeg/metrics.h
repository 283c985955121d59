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

#ifndef SVRGEG_METRICS_H_
#define SVRGEG_METRICS_H_

#include "svrgeg/problem.h"
#include "svrgeg/types.h"

namespace svrgeg {

// max_y f(x, y) - min_x f(x, y) for f(x, y) = x^T A y + <bx, x> - <by, y>,
// with z = (x, y). Both inner problems are linear, so each is the support
// function of its set:
//
//   gap = <bx, x> + <by, y> + sigma_Y(A^T x - by) + sigma_X(-(A y + bx)).
//
// On a simplex sigma is the largest coordinate, on a simplex product the sum
// of blockwise maxima, and on a box sum_k max(lo_k g_k, hi_k g_k) (for the
// segmentation dual box this is half the l1 norm). Throws InvalidArgument for
// non-bilinear problems.
double DualityGap(const AffineVI& problem, const Vec& z);

// |G_tau(z)| with G_tau(z) = (z - Proj_Z(z - tau F(z))) / tau.
double NaturalResidual(const AffineVI& problem, const Vec& z, double tau);

// min_{s in Z*} theta |z - s|^2 + (1 - theta) |w - s|^2.
//
// The objective equals |s - c|^2 + theta (1 - theta) |z - w|^2 with
// c = theta z + (1 - theta) w, so the minimizer is the projection of c onto
// Z* (clamped segment parameter); no search is involved.
double DistTheta(const KnownSolutionSet& known, const Vec& z, const Vec& w,
                 double theta);

// <F(z*), x - P(x)> / |x - P(x)| with P the projection onto Z* and
// z* = P(x). Throws InvalidArgument when x lies on Z*.
double WeakSharpnessRatio(const AffineVI& problem,
                          const KnownSolutionSet& known, const Vec& x);

}  // namespace svrgeg

#endif  // SVRGEG_METRICS_H_
