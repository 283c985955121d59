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

#include "svrgeg/averaging.h"

#include <cmath>

#include "svrgeg/error.h"

namespace svrgeg {

AveragingAccumulator::AveragingAccumulator(int q) : q_(q) {
  if (q < 0) throw InvalidArgument("AveragingAccumulator: q must be >= 0");
}

void AveragingAccumulator::Push(const Vec& z_half) {
  PushWithIndex(z_half, count_);
}

void AveragingAccumulator::PushWithIndex(const Vec& z_half,
                                         std::int64_t index) {
  if (count_ == 0 && weighted_sum_.size() == 0) {
    weighted_sum_ = Vec::Zero(z_half.size());
  } else if (z_half.size() != weighted_sum_.size()) {
    throw InvalidArgument("AveragingAccumulator: dimension mismatch");
  }
  // std::pow(0, 0) == 1.
  const double weight = std::pow(static_cast<double>(index), q_);
  if (weight != 0.0) weighted_sum_ += weight * z_half;
  total_weight_ += weight;
  ++count_;
}

std::optional<Vec> AveragingAccumulator::Current() const {
  if (total_weight_ <= 0.0) return std::nullopt;
  return weighted_sum_ / total_weight_;
}

}  // namespace svrgeg
