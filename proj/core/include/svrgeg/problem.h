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

#ifndef SVRGEG_PROBLEM_H_
#define SVRGEG_PROBLEM_H_

#include <optional>
#include <variant>

#include "svrgeg/feasible_set.h"
#include "svrgeg/payoff_matrix.h"
#include "svrgeg/types.h"

namespace svrgeg {

// min_x max_y  x^T A y + <bx, x> - <by, y>  over primal x dual. The induced
// operator is F(x, y) = (A y + bx, -A^T x + by).
struct BilinearStructure {
  PayoffMatrix A;
  Vec bx;
  Vec by;
  FeasibleSet primal_set;
  FeasibleSet dual_set;

  int primal_dim() const { return static_cast<int>(A.rows()); }
  int dual_dim() const { return static_cast<int>(A.cols()); }
};

// The affine variational inequality: find z* in Z with
// <M z* + q, z - z*> >= 0 for all z in Z. M is monotone.
//
// Bilinear instances never materialize M = [[0, A], [-A^T, 0]]; the operator
// is applied blockwise through the payoff.
class AffineVI {
 public:
  // General instance. Checks M + M^T >= 0 by eigenvalues when dim <= 64.
  AffineVI(PayoffMatrix M, Vec q, FeasibleSet set);
  explicit AffineVI(BilinearStructure bilinear);

  int dim() const { return set_.dim(); }
  const FeasibleSet& set() const { return set_; }
  const BilinearStructure* bilinear() const {
    return bilinear_ ? &*bilinear_ : nullptr;
  }
  // The general-form matrix; only present for non-bilinear instances.
  const PayoffMatrix* matrix() const { return M_ ? &*M_ : nullptr; }
  const Vec& offset() const { return q_; }

  // out = M z + q.
  void Evaluate(const Eigen::Ref<const Vec>& z, Eigen::Ref<Vec> out) const;
  Vec Evaluate(const Vec& z) const;

  // M as a dense matrix (bilinear instances build the block form).
  DenseMatrix MaterializeMatrix() const;

  // Per-full-evaluation cost in sampled-oracle units: for a bilinear n x m
  // instance a full F costs 2nm flops and one sample costs n + m, so
  // N = round(2nm / (n + m)); for a general d x d instance N = d.
  int ComponentCount() const;

 private:
  std::optional<BilinearStructure> bilinear_;
  std::optional<PayoffMatrix> M_;
  Vec q_;
  FeasibleSet set_;
};

struct SinglePoint {
  Vec point;
};
struct Segment {
  Vec p0;
  Vec p1;
};
struct NoSolutionSet {};

// An analytically known solution set Z*, used for distance diagnostics.
class KnownSolutionSet {
 public:
  using Variant = std::variant<NoSolutionSet, SinglePoint, Segment>;

  KnownSolutionSet() = default;
  static KnownSolutionSet Point(Vec point);
  static KnownSolutionSet MakeSegment(Vec p0, Vec p1);

  const Variant& variant() const { return set_; }
  bool empty() const { return std::holds_alternative<NoSolutionSet>(set_); }

  // Closest point of Z* to z. Throws InvalidArgument for the None variant.
  Vec Project(const Vec& z) const;

  // Checks that every stored point solves the VI of `problem` against
  // `num_directions` uniformly sampled feasible points, to `tol`.
  bool Verify(const AffineVI& problem, int num_directions = 10000,
              double tol = 1e-9, std::uint64_t seed = 0) const;

 private:
  explicit KnownSolutionSet(Variant v) : set_(std::move(v)) {}
  Variant set_;
};

}  // namespace svrgeg

#endif  // SVRGEG_PROBLEM_H_
