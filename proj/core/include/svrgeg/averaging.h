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

#ifndef SVRGEG_AVERAGING_H_
#define SVRGEG_AVERAGING_H_

#include <cstdint>
#include <optional>

#include "svrgeg/types.h"

namespace svrgeg {

// Running k^q-weighted average of half-step iterates,
//
//   z^K = (1 / s_K) sum_{k=0}^{K-1} k^q z_{k+1/2},   s_K = sum k^q,
//
// with 0^0 = 1 so that q = 0 is the plain uniform average. For q >= 1 the
// first push has weight zero and the average is undefined until the second.
class AveragingAccumulator {
 public:
  explicit AveragingAccumulator(int q);

  // Weight count()^q.
  void Push(const Vec& z_half);
  // Weight index^q; used to give every inner iterate of a double-loop epoch
  // the epoch weight.
  void PushWithIndex(const Vec& z_half, std::int64_t index);

  // weighted_sum / total_weight, or nullopt while total_weight == 0.
  std::optional<Vec> Current() const;

  int q() const { return q_; }
  std::int64_t count() const { return count_; }
  double total_weight() const { return total_weight_; }

 private:
  int q_;
  Vec weighted_sum_;
  double total_weight_ = 0.0;
  std::int64_t count_ = 0;
};

}  // namespace svrgeg

#endif  // SVRGEG_AVERAGING_H_
