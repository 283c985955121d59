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

#include "svrgeg/instance_io.h"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "svrgeg/error.h"

namespace svrgeg {
namespace {

constexpr double kSparseDensity = 0.1;

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double ParseDouble(const std::string& s) {
  // strtod handles inf/nan spellings and hex floats; reject trailing junk.
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidArgument("instance: cannot parse number '" + s + "'");
  }
  return v;
}

Vec ParseList(const std::string& s, int dim) {
  const auto parts = Split(s, ',');
  if (parts.size() == 1) return Vec::Constant(dim, ParseDouble(parts[0]));
  if (static_cast<int>(parts.size()) != dim) {
    throw InvalidArgument("instance: list '" + s + "' has wrong length");
  }
  Vec out(dim);
  for (int i = 0; i < dim; ++i) out[i] = ParseDouble(parts[i]);
  return out;
}

void WriteValues(std::ostream& os, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ' ';
    os << v[i];
  }
  os << '\n';
}

void WriteMatrix(std::ostream& os, const PayoffMatrix& a) {
  const DenseMatrix dense = a.ToDense();
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      if (j > 0) os << ' ';
      os << dense(i, j);
    }
    os << '\n';
  }
}

Vec ReadValues(std::istream& is, Eigen::Index count, const char* what) {
  Vec out(count);
  std::string tok;
  for (Eigen::Index i = 0; i < count; ++i) {
    if (!(is >> tok)) {
      throw InvalidArgument(std::string("instance: truncated ") + what);
    }
    out[i] = ParseDouble(tok);
  }
  return out;
}

PayoffMatrix ReadMatrix(std::istream& is, int rows, int cols) {
  const Vec flat = ReadValues(is, static_cast<Eigen::Index>(rows) * cols,
                              "matrix");
  DenseMatrix dense =
      Eigen::Map<const DenseMatrix>(flat.data(), rows, cols);
  const double nnz = static_cast<double>((flat.array() != 0.0).count());
  if (nnz < kSparseDensity * static_cast<double>(flat.size())) {
    return PayoffMatrix(SparseMatrix(dense.sparseView()));
  }
  return PayoffMatrix(std::move(dense));
}

}  // namespace

FeasibleSet ParseSetDescriptor(const std::string& token, int dim) {
  // product(d1=set1;d2=set2;...), blocks may nest.
  if (token.rfind("product(", 0) == 0 && token.back() == ')') {
    const std::string body = token.substr(8, token.size() - 9);
    std::vector<FeasibleSet> blocks;
    int depth = 0;
    int total = 0;
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size()) {
        if (body[i] == '(') ++depth;
        if (body[i] == ')') --depth;
        if (body[i] != ';' || depth > 0) continue;
      }
      const std::string item = body.substr(start, i - start);
      const size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw InvalidArgument("instance: product block '" + item +
                              "' must be <dim>=<set>");
      }
      const int block_dim = static_cast<int>(ParseDouble(item.substr(0, eq)));
      if (block_dim <= 0) {
        throw InvalidArgument("instance: bad product block size in '" + item + "'");
      }
      blocks.push_back(ParseSetDescriptor(item.substr(eq + 1), block_dim));
      total += block_dim;
      start = i + 1;
    }
    if (total != dim) {
      throw InvalidArgument("instance: product blocks in '" + token +
                            "' do not sum to " + std::to_string(dim));
    }
    return FeasibleSet::MakeProduct(std::move(blocks));
  }
  const auto parts = Split(token, ':');
  const std::string& kind = parts[0];
  if (kind == "simplex" && parts.size() == 1) {
    return FeasibleSet::MakeSimplex(dim);
  }
  if (kind == "simplex-product" && parts.size() == 2) {
    const auto sizes = Split(parts[1], ',');
    std::vector<int> blocks;
    if (sizes.size() == 1) {
      const int h = std::stoi(sizes[0]);
      if (h <= 0 || dim % h != 0) {
        throw InvalidArgument("instance: block size " + sizes[0] +
                              " does not divide dimension " +
                              std::to_string(dim));
      }
      blocks.assign(dim / h, h);
    } else {
      for (const auto& s : sizes) blocks.push_back(std::stoi(s));
    }
    FeasibleSet set = FeasibleSet::MakeSimplexProduct(std::move(blocks));
    if (set.dim() != dim) {
      throw InvalidArgument("instance: simplex-product blocks do not sum to " +
                            std::to_string(dim));
    }
    return set;
  }
  if (kind == "box" && parts.size() == 3) {
    return FeasibleSet::MakeBox(ParseList(parts[1], dim),
                                ParseList(parts[2], dim));
  }
  if (kind == "halfspace-box" && parts.size() == 5) {
    return FeasibleSet::MakeHalfspaceBox(ParseList(parts[1], dim),
                                         ParseList(parts[2], dim),
                                         ParseList(parts[3], dim),
                                         ParseDouble(parts[4]));
  }
  throw InvalidArgument("instance: unknown set descriptor '" + token + "'");
}

void WriteInstance(std::ostream& os, const AffineVI& problem,
                   const KnownSolutionSet& known) {
  const auto old_precision = os.precision(17);
  if (const auto* b = problem.bilinear()) {
    os << "vif1 " << b->primal_dim() << ' ' << b->dual_dim() << " bilinear "
       << b->primal_set.Describe() << ' ' << b->dual_set.Describe() << '\n';
    WriteMatrix(os, b->A);
    WriteValues(os, b->bx);
    WriteValues(os, b->by);
  } else {
    os << "vif1 " << problem.dim() << " 0 affine " << problem.set().Describe()
       << '\n';
    WriteMatrix(os, *problem.matrix());
    WriteValues(os, problem.offset());
  }
  if (const auto* p = std::get_if<SinglePoint>(&known.variant())) {
    os << "solution point ";
    WriteValues(os, p->point);
  } else if (const auto* s = std::get_if<Segment>(&known.variant())) {
    os << "solution segment ";
    WriteValues(os, s->p0);
    WriteValues(os, s->p1);
  }
  os.precision(old_precision);
}

void WriteInstanceFile(const std::string& path, const AffineVI& problem,
                       const KnownSolutionSet& known) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
  WriteInstance(out, problem, known);
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

Instance ReadInstance(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw InvalidArgument("instance: empty input");
  std::istringstream hs(header);
  std::string magic, kind;
  int n = 0, m = 0;
  if (!(hs >> magic >> n >> m >> kind) || magic != "vif1") {
    throw InvalidArgument("instance: bad header '" + header + "'");
  }
  if (n <= 0 || m < 0) throw InvalidArgument("instance: bad dimensions");

  std::optional<AffineVI> problem;
  int dim = 0;
  if (kind == "bilinear") {
    std::string primal_tok, dual_tok;
    if (!(hs >> primal_tok >> dual_tok) || m == 0) {
      throw InvalidArgument("instance: bilinear header needs two sets");
    }
    FeasibleSet primal = ParseSetDescriptor(primal_tok, n);
    FeasibleSet dual = ParseSetDescriptor(dual_tok, m);
    PayoffMatrix a = ReadMatrix(is, n, m);
    Vec bx = ReadValues(is, n, "bx");
    Vec by = ReadValues(is, m, "by");
    problem.emplace(BilinearStructure{std::move(a), std::move(bx),
                                      std::move(by), std::move(primal),
                                      std::move(dual)});
    dim = n + m;
  } else if (kind == "affine") {
    std::string set_tok;
    if (!(hs >> set_tok) || m != 0) {
      throw InvalidArgument("instance: affine header needs one set and m = 0");
    }
    FeasibleSet set = ParseSetDescriptor(set_tok, n);
    PayoffMatrix mat = ReadMatrix(is, n, n);
    Vec q = ReadValues(is, n, "q");
    problem.emplace(std::move(mat), std::move(q), std::move(set));
    dim = n;
  } else {
    throw InvalidArgument("instance: unknown kind '" + kind + "'");
  }

  KnownSolutionSet known;
  std::string tok;
  if (is >> tok) {
    std::string variant;
    if (tok != "solution" || !(is >> variant)) {
      throw InvalidArgument("instance: unexpected trailing token '" + tok + "'");
    }
    if (variant == "point") {
      known = KnownSolutionSet::Point(ReadValues(is, dim, "solution"));
    } else if (variant == "segment") {
      Vec p0 = ReadValues(is, dim, "solution");
      Vec p1 = ReadValues(is, dim, "solution");
      known = KnownSolutionSet::MakeSegment(std::move(p0), std::move(p1));
    } else {
      throw InvalidArgument("instance: unknown solution kind '" + variant + "'");
    }
    if (is >> tok) {
      throw InvalidArgument("instance: unexpected trailing token '" + tok + "'");
    }
  }
  return Instance{std::move(*problem), std::move(known)};
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open instance file '" + path + "'");
  return ReadInstance(in);
}

}  // namespace svrgeg
