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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iostream>

#include "svrgeg/error.h"
#include "svrgeg/rng.h"

namespace svrgeg {
namespace {

constexpr int kMaxCheckedDim = 64;
constexpr double kEigenFloor = -1e-10;

}  // namespace

AffineVI::AffineVI(PayoffMatrix M, Vec q, FeasibleSet set)
    : q_(std::move(q)), set_(std::move(set)) {
  const int d = set_.dim();
  if (M.rows() != d || M.cols() != d || q_.size() != d) {
    throw InvalidArgument("AffineVI: M, q and the feasible set disagree on "
                          "dimension");
  }
  if (d <= kMaxCheckedDim) {
    DenseMatrix m = M.ToDense();
    Eigen::MatrixXd sym = m + m.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym,
                                                       Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < kEigenFloor) {
      throw InvalidArgument("AffineVI: operator is not monotone (M + M^T has "
                            "eigenvalue " +
                            std::to_string(eig.eigenvalues().minCoeff()) + ")");
    }
  } else {
    std::clog << "warning: AffineVI of dimension " << d
              << " skips the monotonicity check\n";
  }
  M_ = std::move(M);
}

AffineVI::AffineVI(BilinearStructure bilinear)
    : set_(FeasibleSet::MakeProduct({bilinear.primal_set, bilinear.dual_set})) {
  const auto n = bilinear.A.rows();
  const auto m = bilinear.A.cols();
  if (bilinear.bx.size() != n || bilinear.by.size() != m ||
      bilinear.primal_set.dim() != n || bilinear.dual_set.dim() != m) {
    throw InvalidArgument("AffineVI: bilinear blocks disagree on dimension");
  }
  q_.resize(n + m);
  q_ << bilinear.bx, bilinear.by;
  bilinear_ = std::move(bilinear);
}

void AffineVI::Evaluate(const Eigen::Ref<const Vec>& z,
                        Eigen::Ref<Vec> out) const {
  if (z.size() != dim() || out.size() != dim()) {
    throw InvalidArgument("AffineVI::Evaluate: dimension mismatch");
  }
  if (bilinear_) {
    const auto n = bilinear_->primal_dim();
    const auto m = bilinear_->dual_dim();
    bilinear_->A.Multiply(z.tail(m), out.head(n));
    bilinear_->A.MultiplyTransposed(z.head(n), out.tail(m));
    out.tail(m) = -out.tail(m);
  } else {
    M_->Multiply(z, out);
  }
  out += q_;
}

Vec AffineVI::Evaluate(const Vec& z) const {
  Vec out(dim());
  Evaluate(z, out);
  return out;
}

DenseMatrix AffineVI::MaterializeMatrix() const {
  if (M_) return M_->ToDense();
  const auto n = bilinear_->primal_dim();
  const auto m = bilinear_->dual_dim();
  DenseMatrix a = bilinear_->A.ToDense();
  DenseMatrix out = DenseMatrix::Zero(n + m, n + m);
  out.topRightCorner(n, m) = a;
  out.bottomLeftCorner(m, n) = -a.transpose();
  return out;
}

int AffineVI::ComponentCount() const {
  if (!bilinear_) return dim();
  const double n = bilinear_->primal_dim();
  const double m = bilinear_->dual_dim();
  return std::max(1, static_cast<int>(std::lround(2.0 * n * m / (n + m))));
}

KnownSolutionSet KnownSolutionSet::Point(Vec point) {
  return KnownSolutionSet(SinglePoint{std::move(point)});
}

KnownSolutionSet KnownSolutionSet::MakeSegment(Vec p0, Vec p1) {
  if (p0.size() != p1.size()) {
    throw InvalidArgument("Segment: endpoints differ in dimension");
  }
  return KnownSolutionSet(Segment{std::move(p0), std::move(p1)});
}

Vec KnownSolutionSet::Project(const Vec& z) const {
  if (const auto* p = std::get_if<SinglePoint>(&set_)) {
    if (z.size() != p->point.size()) {
      throw InvalidArgument("KnownSolutionSet::Project: dimension mismatch");
    }
    return p->point;
  }
  if (const auto* s = std::get_if<Segment>(&set_)) {
    if (z.size() != s->p0.size()) {
      throw InvalidArgument("KnownSolutionSet::Project: dimension mismatch");
    }
    const Vec d = s->p1 - s->p0;
    const double len2 = d.squaredNorm();
    if (len2 == 0.0) return s->p0;
    const double t = std::clamp((z - s->p0).dot(d) / len2, 0.0, 1.0);
    return s->p0 + t * d;
  }
  throw InvalidArgument("KnownSolutionSet::Project: no solution set stored");
}

bool KnownSolutionSet::Verify(const AffineVI& problem, int num_directions,
                              double tol, std::uint64_t seed) const {
  std::vector<Vec> points;
  if (const auto* p = std::get_if<SinglePoint>(&set_)) {
    points = {p->point};
  } else if (const auto* s = std::get_if<Segment>(&set_)) {
    points = {s->p0, s->p1, 0.5 * (s->p0 + s->p1)};
  } else {
    return false;
  }
  Rng rng(seed);
  std::vector<Vec> samples;
  samples.reserve(num_directions);
  for (int k = 0; k < num_directions; ++k) {
    samples.push_back(problem.set().SampleUniform(rng));
  }
  for (const Vec& z_star : points) {
    if (z_star.size() != problem.dim() || !problem.set().Contains(z_star, tol)) {
      return false;
    }
    const Vec f = problem.Evaluate(z_star);
    for (const Vec& z : samples) {
      if (f.dot(z - z_star) < -tol) return false;
    }
  }
  return true;
}

}  // namespace svrgeg
