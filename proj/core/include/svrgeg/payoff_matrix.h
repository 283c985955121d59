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

#ifndef SVRGEG_PAYOFF_MATRIX_H_
#define SVRGEG_PAYOFF_MATRIX_H_

#include <cstdint>
#include <variant>

#include "svrgeg/types.h"

namespace svrgeg {

// A real matrix stored either dense row-major (games) or sparse (structured
// operators such as discrete gradients). Keeps a column-major mirror so that
// both row and column slices are contiguous, which the sampled oracles need.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  explicit PayoffMatrix(DenseMatrix dense);
  explicit PayoffMatrix(SparseMatrix sparse);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  bool is_sparse() const { return std::holds_alternative<Sparse>(storage_); }

  // out = A x (x has cols() entries).
  void Multiply(const Eigen::Ref<const Vec>& x, Eigen::Ref<Vec> out) const;
  // out = A^T y (y has rows() entries).
  void MultiplyTransposed(const Eigen::Ref<const Vec>& y,
                          Eigen::Ref<Vec> out) const;

  // out += scale * A(:, j).
  void AddScaledColumn(Eigen::Index j, double scale, Eigen::Ref<Vec> out) const;
  // out += scale * A(i, :)^T.
  void AddScaledRow(Eigen::Index i, double scale, Eigen::Ref<Vec> out) const;

  const Vec& row_squared_norms() const { return row_sq_; }
  const Vec& col_squared_norms() const { return col_sq_; }
  double FrobeniusNorm() const;

  // Largest singular value by power iteration on A^T A from a seeded start,
  // stopping at relative change <= tol or after max_iters iterations.
  double SpectralNorm(double tol = 1e-8, int max_iters = 10000,
                      std::uint64_t seed = 0x5eedULL) const;

  DenseMatrix ToDense() const;
  double Coeff(Eigen::Index i, Eigen::Index j) const;

 private:
  struct Dense {
    DenseMatrix by_row;
    Eigen::MatrixXd by_col;
  };
  struct Sparse {
    SparseMatrix by_row;
    Eigen::SparseMatrix<double, Eigen::ColMajor> by_col;
  };

  void ComputeNorms();

  std::variant<Dense, Sparse> storage_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  Vec row_sq_;
  Vec col_sq_;
};

}  // namespace svrgeg

#endif  // SVRGEG_PAYOFF_MATRIX_H_
