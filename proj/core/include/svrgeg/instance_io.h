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

#ifndef SVRGEG_INSTANCE_IO_H_
#define SVRGEG_INSTANCE_IO_H_

#include <iosfwd>
#include <string>

#include "svrgeg/problem.h"

namespace svrgeg {

struct Instance {
  AffineVI problem;
  KnownSolutionSet known;
};

// Text instance format, version 1:
//
//   vif1 <n> <m> bilinear <primal-set> <dual-set>
//   <n*m entries of A, row-major>
//   <n entries of bx>
//   <m entries of by>
//
//   vif1 <d> 0 affine <set>
//   <d*d entries of M, row-major>
//   <d entries of q>
//
// optionally followed by `solution point <d values>` or
// `solution segment <d values> <d values>`. Set tokens:
//
//   simplex
//   simplex-product:<h>            blocks of size h (or a comma list of sizes)
//   box:<lo>:<hi>                  scalar or comma list per bound
//   halfspace-box:<lo>:<hi>:<a1>,<a2>:<b>
//
// Numbers are written with 17 significant digits, so reading back a written
// instance reproduces every double exactly.
void WriteInstance(std::ostream& os, const AffineVI& problem,
                   const KnownSolutionSet& known = {});
void WriteInstanceFile(const std::string& path, const AffineVI& problem,
                       const KnownSolutionSet& known = {});

Instance ReadInstance(std::istream& is);
Instance ReadInstanceFile(const std::string& path);

// Parses a single set token (see above) for a set of dimension `dim`.
FeasibleSet ParseSetDescriptor(const std::string& token, int dim);

}  // namespace svrgeg

#endif  // SVRGEG_INSTANCE_IO_H_
