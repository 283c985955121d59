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

#include "svrgeg/payoff_matrix.h"

#include <cmath>

#include "svrgeg/error.h"
#include "svrgeg/rng.h"

namespace svrgeg {

PayoffMatrix::PayoffMatrix(DenseMatrix dense)
    : rows_(dense.rows()), cols_(dense.cols()) {
  Eigen::MatrixXd by_col = dense;
  storage_ = Dense{std::move(dense), std::move(by_col)};
  ComputeNorms();
}

PayoffMatrix::PayoffMatrix(SparseMatrix sparse)
    : rows_(sparse.rows()), cols_(sparse.cols()) {
  sparse.makeCompressed();
  Eigen::SparseMatrix<double, Eigen::ColMajor> by_col = sparse;
  by_col.makeCompressed();
  storage_ = Sparse{std::move(sparse), std::move(by_col)};
  ComputeNorms();
}

void PayoffMatrix::ComputeNorms() {
  row_sq_ = Vec::Zero(rows_);
  col_sq_ = Vec::Zero(cols_);
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    row_sq_ = d->by_row.rowwise().squaredNorm();
    col_sq_ = d->by_col.colwise().squaredNorm().transpose();
  } else {
    const auto& s = std::get<Sparse>(storage_).by_row;
    for (Eigen::Index i = 0; i < s.outerSize(); ++i) {
      for (SparseMatrix::InnerIterator it(s, i); it; ++it) {
        row_sq_[it.row()] += it.value() * it.value();
        col_sq_[it.col()] += it.value() * it.value();
      }
    }
  }
}

void PayoffMatrix::Multiply(const Eigen::Ref<const Vec>& x,
                            Eigen::Ref<Vec> out) const {
  if (x.size() != cols_ || out.size() != rows_) {
    throw InvalidArgument("PayoffMatrix::Multiply: dimension mismatch");
  }
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    out.noalias() = d->by_row * x;
  } else {
    out.noalias() = std::get<Sparse>(storage_).by_row * x;
  }
}

void PayoffMatrix::MultiplyTransposed(const Eigen::Ref<const Vec>& y,
                                      Eigen::Ref<Vec> out) const {
  if (y.size() != rows_ || out.size() != cols_) {
    throw InvalidArgument("PayoffMatrix::MultiplyTransposed: dimension mismatch");
  }
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    out.noalias() = d->by_col.transpose() * y;
  } else {
    out.noalias() = std::get<Sparse>(storage_).by_col.transpose() * y;
  }
}

void PayoffMatrix::AddScaledColumn(Eigen::Index j, double scale,
                                   Eigen::Ref<Vec> out) const {
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    out += scale * d->by_col.col(j);
  } else {
    const auto& s = std::get<Sparse>(storage_).by_col;
    for (Eigen::SparseMatrix<double, Eigen::ColMajor>::InnerIterator it(s, j);
         it; ++it) {
      out[it.row()] += scale * it.value();
    }
  }
}

void PayoffMatrix::AddScaledRow(Eigen::Index i, double scale,
                                Eigen::Ref<Vec> out) const {
  if (const auto* d = std::get_if<Dense>(&storage_)) {
    out += scale * d->by_row.row(i).transpose();
  } else {
    const auto& s = std::get<Sparse>(storage_).by_row;
    for (SparseMatrix::InnerIterator it(s, i); it; ++it) {
      out[it.col()] += scale * it.value();
    }
  }
}

double PayoffMatrix::FrobeniusNorm() const { return std::sqrt(row_sq_.sum()); }

double PayoffMatrix::SpectralNorm(double tol, int max_iters,
                                  std::uint64_t seed) const {
  if (rows_ == 0 || cols_ == 0) return 0.0;
  Rng rng(seed);
  Vec v(cols_);
  for (Eigen::Index j = 0; j < cols_; ++j) v[j] = rng.Normal();
  v.normalize();
  Vec av(rows_);
  Vec atav(cols_);
  double sigma = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Multiply(v, av);
    MultiplyTransposed(av, atav);
    const double norm = atav.norm();
    if (norm == 0.0) return 0.0;
    const double next = std::sqrt(norm);
    v = atav / norm;
    if (it > 0 && std::abs(next - sigma) <= tol * next) return next;
    sigma = next;
  }
  return sigma;
}

DenseMatrix PayoffMatrix::ToDense() const {
  if (const auto* d = std::get_if<Dense>(&storage_)) return d->by_row;
  return DenseMatrix(std::get<Sparse>(storage_).by_row);
}

double PayoffMatrix::Coeff(Eigen::Index i, Eigen::Index j) const {
  if (const auto* d = std::get_if<Dense>(&storage_)) return d->by_row(i, j);
  return std::get<Sparse>(storage_).by_row.coeff(i, j);
}

}  // namespace svrgeg
