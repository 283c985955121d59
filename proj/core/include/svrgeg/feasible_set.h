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

#ifndef SVRGEG_FEASIBLE_SET_H_
#define SVRGEG_FEASIBLE_SET_H_

#include <string>
#include <variant>
#include <vector>

#include "svrgeg/rng.h"
#include "svrgeg/types.h"

namespace svrgeg {

class FeasibleSet;

// The probability simplex {x >= 0, sum x = 1} in R^dim.
struct Simplex {
  int dim;
};

// {lo <= x <= hi} componentwise.
struct Box {
  Vec lo;
  Vec hi;
};

// A Cartesian product of simplices; block k has dimension block_dims[k].
struct SimplexProduct {
  std::vector<int> block_dims;
};

// {lo <= x <= hi, <a, x> <= b} in R^2.
struct HalfspaceBox {
  Vec lo;
  Vec hi;
  Vec a;
  double b;
};

struct ProductSet {
  std::vector<FeasibleSet> blocks;
};

// A closed convex set with an exact Euclidean projection. Immutable.
class FeasibleSet {
 public:
  using Variant =
      std::variant<Simplex, Box, SimplexProduct, HalfspaceBox, ProductSet>;

  static FeasibleSet MakeSimplex(int dim);
  static FeasibleSet MakeBox(Vec lo, Vec hi);
  static FeasibleSet MakeUniformBox(int dim, double lo, double hi);
  static FeasibleSet MakeSimplexProduct(std::vector<int> block_dims);
  static FeasibleSet MakeHalfspaceBox(Vec lo, Vec hi, Vec a, double b);
  static FeasibleSet MakeProduct(std::vector<FeasibleSet> blocks);

  int dim() const { return dim_; }
  const Variant& variant() const { return set_; }

  // True when every block is a simplex (Simplex or SimplexProduct, possibly
  // nested in a product).
  bool IsSimplicial() const;

  // Euclidean projection of v. Throws InvalidArgument on dimension mismatch
  // or non-finite input.
  Vec Project(const Vec& v) const;

  // In-place variant used on solver hot paths; no finiteness check.
  void ProjectInPlace(Eigen::Ref<Vec> v) const;

  bool Contains(const Vec& z, double tol) const;

  // max_{z in set} <g, z>, in closed form.
  double SupportValue(const Vec& g) const;

  // A draw from the uniform distribution on the set (simplices via
  // normalized exponentials, HalfspaceBox via rejection from its box).
  Vec SampleUniform(Rng& rng) const;

  // The point used to start solvers: simplex barycenters, box midpoints.
  Vec Center() const;

  std::string Describe() const;

 private:
  explicit FeasibleSet(Variant set);

  Variant set_;
  int dim_ = 0;
};

// Sort-and-threshold projection onto the simplex {x >= 0, sum x = radius}.
void ProjectOntoSimplex(Eigen::Ref<Vec> v, double radius = 1.0);

}  // namespace svrgeg

#endif  // SVRGEG_FEASIBLE_SET_H_
