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

#include "svrgeg/feasible_set.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "svrgeg/error.h"

namespace svrgeg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string FormatNumber(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Comma-joined list, collapsed to a single value when all entries agree.
std::string FormatList(const Vec& v) {
  bool uniform = v.size() > 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) uniform &= v[i] == v[0];
  if (uniform) return FormatNumber(v[0]);
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += FormatNumber(v[i]);
  }
  return out;
}

// Closest point to v on the segment {p + t d : t in [t_lo, t_hi]}.
Eigen::Vector2d ClosestOnSegment(const Eigen::Vector2d& v,
                                 const Eigen::Vector2d& p,
                                 const Eigen::Vector2d& d, double t_lo,
                                 double t_hi) {
  const double t = std::clamp((v - p).dot(d) / d.squaredNorm(), t_lo, t_hi);
  return p + t * d;
}

// Parameter range of the line {p + t d} inside [lo, hi]; empty when lo > hi.
std::pair<double, double> LineInBox(const Eigen::Vector2d& p,
                                    const Eigen::Vector2d& d, const Vec& lo,
                                    const Vec& hi) {
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (p[k] < lo[k] || p[k] > hi[k]) return {1.0, 0.0};
      continue;
    }
    double a = (lo[k] - p[k]) / d[k];
    double b = (hi[k] - p[k]) / d[k];
    if (a > b) std::swap(a, b);
    t_lo = std::max(t_lo, a);
    t_hi = std::min(t_hi, b);
  }
  return {t_lo, t_hi};
}

// Vertices of the polygon {lo <= x <= hi, <a, x> <= b}.
std::vector<Eigen::Vector2d> PolygonVertices(const HalfspaceBox& s) {
  std::vector<Eigen::Vector2d> out;
  const double tol = 1e-12 * (1.0 + std::abs(s.b));
  for (int c = 0; c < 4; ++c) {
    Eigen::Vector2d x((c & 1) ? s.hi[0] : s.lo[0], (c & 2) ? s.hi[1] : s.lo[1]);
    if (s.a.dot(x) <= s.b + tol) out.push_back(x);
  }
  const Eigen::Vector2d a = s.a;
  const Eigen::Vector2d p = a * (s.b / a.squaredNorm());
  const Eigen::Vector2d d(-a[1], a[0]);
  auto [t_lo, t_hi] = LineInBox(p, d, s.lo, s.hi);
  if (t_lo <= t_hi) {
    out.push_back(p + t_lo * d);
    out.push_back(p + t_hi * d);
  }
  return out;
}

void ProjectHalfspaceBox(const HalfspaceBox& s, Eigen::Ref<Vec> v) {
  Eigen::Vector2d clamped(std::clamp(v[0], s.lo[0], s.hi[0]),
                          std::clamp(v[1], s.lo[1], s.hi[1]));
  if (s.a.dot(clamped) <= s.b) {
    v = clamped;
    return;
  }
  // Otherwise the halfspace constraint is active at the optimum and the
  // projection is the closest point of the segment (line) x (box).
  const Eigen::Vector2d a = s.a;
  const Eigen::Vector2d p = a * (s.b / a.squaredNorm());
  const Eigen::Vector2d d(-a[1], a[0]);
  auto [t_lo, t_hi] = LineInBox(p, d, s.lo, s.hi);
  v = ClosestOnSegment(Eigen::Vector2d(v[0], v[1]), p, d, t_lo, t_hi);
}

int DimOf(const FeasibleSet::Variant& set) {
  return std::visit(
      Overloaded{
          [](const Simplex& s) { return s.dim; },
          [](const Box& b) { return static_cast<int>(b.lo.size()); },
          [](const SimplexProduct& s) {
            return std::accumulate(s.block_dims.begin(), s.block_dims.end(), 0);
          },
          [](const HalfspaceBox&) { return 2; },
          [](const ProductSet& p) {
            int d = 0;
            for (const auto& b : p.blocks) d += b.dim();
            return d;
          }},
      set);
}

}  // namespace

void ProjectOntoSimplex(Eigen::Ref<Vec> v, double radius) {
  const Eigen::Index n = v.size();
  thread_local std::vector<double> sorted;
  sorted.assign(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0;
  double threshold = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumsum += sorted[j];
    const double t = (cumsum - radius) / static_cast<double>(j + 1);
    if (sorted[j] - t > 0.0) threshold = t;
  }
  for (Eigen::Index i = 0; i < n; ++i) v[i] = std::max(v[i] - threshold, 0.0);
}

FeasibleSet::FeasibleSet(Variant set) : set_(std::move(set)) {
  dim_ = DimOf(set_);
}

FeasibleSet FeasibleSet::MakeSimplex(int dim) {
  if (dim <= 0) throw InvalidArgument("Simplex: dimension must be positive");
  return FeasibleSet(Simplex{dim});
}

FeasibleSet FeasibleSet::MakeBox(Vec lo, Vec hi) {
  if (lo.size() != hi.size() || lo.size() == 0) {
    throw InvalidArgument("Box: lo and hi must have equal positive length");
  }
  if (!lo.allFinite() || !hi.allFinite()) {
    throw InvalidArgument("Box: bounds must be finite");
  }
  if ((lo.array() > hi.array()).any()) {
    throw InvalidArgument("Box: lo must be <= hi componentwise");
  }
  return FeasibleSet(Box{std::move(lo), std::move(hi)});
}

FeasibleSet FeasibleSet::MakeUniformBox(int dim, double lo, double hi) {
  if (dim <= 0) throw InvalidArgument("Box: dimension must be positive");
  return MakeBox(Vec::Constant(dim, lo), Vec::Constant(dim, hi));
}

FeasibleSet FeasibleSet::MakeSimplexProduct(std::vector<int> block_dims) {
  if (block_dims.empty()) {
    throw InvalidArgument("SimplexProduct: needs at least one block");
  }
  for (int d : block_dims) {
    if (d <= 0) throw InvalidArgument("SimplexProduct: block dims must be > 0");
  }
  return FeasibleSet(SimplexProduct{std::move(block_dims)});
}

FeasibleSet FeasibleSet::MakeHalfspaceBox(Vec lo, Vec hi, Vec a, double b) {
  if (lo.size() != 2 || hi.size() != 2 || a.size() != 2) {
    throw InvalidArgument("HalfspaceBox: only dimension 2 is supported");
  }
  if ((lo.array() > hi.array()).any()) {
    throw InvalidArgument("HalfspaceBox: lo must be <= hi componentwise");
  }
  if (a.squaredNorm() == 0.0) {
    throw InvalidArgument("HalfspaceBox: halfspace normal must be nonzero");
  }
  HalfspaceBox s{std::move(lo), std::move(hi), std::move(a), b};
  double min_over_box = 0.0;
  for (int k = 0; k < 2; ++k) {
    min_over_box += std::min(s.a[k] * s.lo[k], s.a[k] * s.hi[k]);
  }
  Vec mid = 0.5 * (s.lo + s.hi);
  ProjectHalfspaceBox(s, mid);
  const double tol = 1e-12 * (1.0 + std::abs(s.b));
  if (min_over_box > s.b + tol || s.a.dot(mid) > s.b + tol) {
    throw InvalidArgument("HalfspaceBox: the set is empty");
  }
  return FeasibleSet(std::move(s));
}

FeasibleSet FeasibleSet::MakeProduct(std::vector<FeasibleSet> blocks) {
  if (blocks.empty()) throw InvalidArgument("Product: needs at least one block");
  return FeasibleSet(ProductSet{std::move(blocks)});
}

bool FeasibleSet::IsSimplicial() const {
  return std::visit(Overloaded{[](const Simplex&) { return true; },
                               [](const SimplexProduct&) { return true; },
                               [](const ProductSet& p) {
                                 return std::all_of(
                                     p.blocks.begin(), p.blocks.end(),
                                     [](const FeasibleSet& b) {
                                       return b.IsSimplicial();
                                     });
                               },
                               [](const auto&) { return false; }},
                    set_);
}

Vec FeasibleSet::Project(const Vec& v) const {
  if (v.size() != dim_) {
    throw InvalidArgument("Project: dimension mismatch (set " +
                          std::to_string(dim_) + ", vector " +
                          std::to_string(v.size()) + ")");
  }
  if (!v.allFinite()) throw InvalidArgument("Project: non-finite input");
  Vec out = v;
  ProjectInPlace(out);
  return out;
}

void FeasibleSet::ProjectInPlace(Eigen::Ref<Vec> v) const {
  std::visit(
      Overloaded{
          [&](const Simplex&) { ProjectOntoSimplex(v); },
          [&](const Box& b) { v = v.cwiseMax(b.lo).cwiseMin(b.hi); },
          [&](const SimplexProduct& s) {
            Eigen::Index off = 0;
            for (int d : s.block_dims) {
              ProjectOntoSimplex(v.segment(off, d));
              off += d;
            }
          },
          [&](const HalfspaceBox& s) { ProjectHalfspaceBox(s, v); },
          [&](const ProductSet& p) {
            Eigen::Index off = 0;
            for (const auto& b : p.blocks) {
              b.ProjectInPlace(v.segment(off, b.dim()));
              off += b.dim();
            }
          }},
      set_);
}

bool FeasibleSet::Contains(const Vec& z, double tol) const {
  if (z.size() != dim_ || !z.allFinite()) return false;
  auto in_simplex = [tol](const auto& x) {
    return x.minCoeff() >= -tol && std::abs(x.sum() - 1.0) <= tol;
  };
  return std::visit(
      Overloaded{
          [&](const Simplex&) { return in_simplex(z); },
          [&](const Box& b) {
            return ((z - b.lo).array() >= -tol).all() &&
                   ((b.hi - z).array() >= -tol).all();
          },
          [&](const SimplexProduct& s) {
            Eigen::Index off = 0;
            for (int d : s.block_dims) {
              if (!in_simplex(z.segment(off, d))) return false;
              off += d;
            }
            return true;
          },
          [&](const HalfspaceBox& s) {
            return ((z - s.lo).array() >= -tol).all() &&
                   ((s.hi - z).array() >= -tol).all() &&
                   s.a.dot(z) <= s.b + tol;
          },
          [&](const ProductSet& p) {
            Eigen::Index off = 0;
            for (const auto& b : p.blocks) {
              if (!b.Contains(z.segment(off, b.dim()), tol)) return false;
              off += b.dim();
            }
            return true;
          }},
      set_);
}

double FeasibleSet::SupportValue(const Vec& g) const {
  if (g.size() != dim_) throw InvalidArgument("SupportValue: dimension mismatch");
  return std::visit(
      Overloaded{
          [&](const Simplex&) { return g.maxCoeff(); },
          [&](const Box& b) {
            return (g.array() * b.lo.array())
                .max(g.array() * b.hi.array())
                .sum();
          },
          [&](const SimplexProduct& s) {
            double total = 0.0;
            Eigen::Index off = 0;
            for (int d : s.block_dims) {
              total += g.segment(off, d).maxCoeff();
              off += d;
            }
            return total;
          },
          [&](const HalfspaceBox& s) {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& x : PolygonVertices(s)) {
              best = std::max(best, g[0] * x[0] + g[1] * x[1]);
            }
            return best;
          },
          [&](const ProductSet& p) {
            double total = 0.0;
            Eigen::Index off = 0;
            for (const auto& b : p.blocks) {
              total += b.SupportValue(g.segment(off, b.dim()));
              off += b.dim();
            }
            return total;
          }},
      set_);
}

Vec FeasibleSet::SampleUniform(Rng& rng) const {
  auto sample_simplex = [&rng](Eigen::Ref<Vec> out) {
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      out[i] = -std::log(1.0 - rng.Uniform());
    }
    const double s = out.sum();
    if (s > 0.0) {
      out /= s;
    } else {
      out.setConstant(1.0 / static_cast<double>(out.size()));
    }
  };
  Vec out(dim_);
  std::visit(
      Overloaded{
          [&](const Simplex&) { sample_simplex(out); },
          [&](const Box& b) {
            for (int i = 0; i < dim_; ++i) {
              out[i] = b.lo[i] + rng.Uniform() * (b.hi[i] - b.lo[i]);
            }
          },
          [&](const SimplexProduct& s) {
            Eigen::Index off = 0;
            for (int d : s.block_dims) {
              sample_simplex(out.segment(off, d));
              off += d;
            }
          },
          [&](const HalfspaceBox& s) {
            for (int attempt = 0; attempt < 1000000; ++attempt) {
              for (int i = 0; i < 2; ++i) {
                out[i] = s.lo[i] + rng.Uniform() * (s.hi[i] - s.lo[i]);
              }
              if (s.a.dot(out) <= s.b) return;
            }
            throw Error("SampleUniform: rejection sampling did not terminate");
          },
          [&](const ProductSet& p) {
            Eigen::Index off = 0;
            for (const auto& b : p.blocks) {
              out.segment(off, b.dim()) = b.SampleUniform(rng);
              off += b.dim();
            }
          }},
      set_);
  return out;
}

Vec FeasibleSet::Center() const {
  Vec out(dim_);
  std::visit(
      Overloaded{
          [&](const Simplex& s) { out.setConstant(1.0 / s.dim); },
          [&](const Box& b) { out = 0.5 * (b.lo + b.hi); },
          [&](const SimplexProduct& s) {
            Eigen::Index off = 0;
            for (int d : s.block_dims) {
              out.segment(off, d).setConstant(1.0 / d);
              off += d;
            }
          },
          [&](const HalfspaceBox& s) {
            out = 0.5 * (s.lo + s.hi);
            ProjectHalfspaceBox(s, out);
          },
          [&](const ProductSet& p) {
            Eigen::Index off = 0;
            for (const auto& b : p.blocks) {
              out.segment(off, b.dim()) = b.Center();
              off += b.dim();
            }
          }},
      set_);
  return out;
}

std::string FeasibleSet::Describe() const {
  return std::visit(
      Overloaded{
          [](const Simplex&) { return std::string("simplex"); },
          [](const Box& b) {
            return "box:" + FormatList(b.lo) + ":" + FormatList(b.hi);
          },
          [](const SimplexProduct& s) {
            Vec dims(s.block_dims.size());
            for (size_t i = 0; i < s.block_dims.size(); ++i) {
              dims[i] = s.block_dims[i];
            }
            return "simplex-product:" + FormatList(dims);
          },
          [](const HalfspaceBox& s) {
            std::string a = FormatNumber(s.a[0]) + "," + FormatNumber(s.a[1]);
            return "halfspace-box:" + FormatList(s.lo) + ":" + FormatList(s.hi) +
                   ":" + a + ":" + FormatNumber(s.b);
          },
          [](const ProductSet& p) {
            std::string out = "product(";
            for (size_t i = 0; i < p.blocks.size(); ++i) {
              if (i > 0) out += ';';
              out += std::to_string(p.blocks[i].dim()) + "=" +
                     p.blocks[i].Describe();
            }
            return out + ")";
          }},
      set_);
}

}  // namespace svrgeg
