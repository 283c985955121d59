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

#ifndef SVRGEG_COST_MODEL_H_
#define SVRGEG_COST_MODEL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svrgeg {

enum class Algorithm {
  kSvrgLoopless,
  kSvrgDoubleLoop,
  kExtragradient,
  kPrimalDual,
  kOomdL2,
  kOomdEntropy,
  kRegretMatchingPlus,
};

// CLI spellings: svrg-eg, svrg-eg-dl, eg, pda, oomd-l2, oomd-entropy, rm+.
std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
const std::vector<Algorithm>& AllAlgorithms();

// What a single step of `algorithm` did, as far as cost is concerned.
struct ChargeContext {
  bool snapshot_updated = false;  // loopless SVRG-EG
  int inner_steps = 0;            // double-loop SVRG-EG (K)
};

// Oracle cost in units of one sampled evaluation F_xi; a full F costs N.
//
//   deterministic EG          2N per iteration
//   loopless SVRG-EG          2 per iteration, + N when the snapshot moves
//   double-loop SVRG-EG       N + 2K per epoch
//   PDA, OOMD (both), RM+     N per iteration
class CostModel {
 public:
  explicit CostModel(int num_components);

  int num_components() const { return n_; }

  std::int64_t Charge(Algorithm algorithm, const ChargeContext& ctx = {}) const;

  // pN + 2 for loopless; the per-step charge otherwise.
  double ExpectedCharge(Algorithm algorithm, double p, int inner_steps) const;

  // Charged once before the first step (the initial snapshot gradient of
  // loopless SVRG-EG); zero for everything else.
  std::int64_t InitialCharge(Algorithm algorithm) const;

  // Largest charge a single step can incur.
  std::int64_t MaxStepCharge(Algorithm algorithm, int inner_steps) const;

 private:
  int n_;
};

}  // namespace svrgeg

#endif  // SVRGEG_COST_MODEL_H_
