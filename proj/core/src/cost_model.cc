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

#include "svrgeg/cost_model.h"

#include <array>

#include "svrgeg/error.h"

namespace svrgeg {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames = {{
    {Algorithm::kSvrgLoopless, "svrg-eg"},
    {Algorithm::kSvrgDoubleLoop, "svrg-eg-dl"},
    {Algorithm::kExtragradient, "eg"},
    {Algorithm::kPrimalDual, "pda"},
    {Algorithm::kOomdL2, "oomd-l2"},
    {Algorithm::kOomdEntropy, "oomd-entropy"},
    {Algorithm::kRegretMatchingPlus, "rm+"},
}};

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& AllAlgorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return all;
}

CostModel::CostModel(int num_components) : n_(num_components) {
  if (n_ < 1) throw InvalidArgument("CostModel: N must be >= 1");
}

std::int64_t CostModel::Charge(Algorithm algorithm,
                               const ChargeContext& ctx) const {
  switch (algorithm) {
    case Algorithm::kExtragradient:
      return 2LL * n_;
    case Algorithm::kSvrgLoopless:
      return 2 + (ctx.snapshot_updated ? n_ : 0);
    case Algorithm::kSvrgDoubleLoop:
      if (ctx.inner_steps < 1) {
        throw InvalidArgument("CostModel: double-loop charge needs K >= 1");
      }
      return static_cast<std::int64_t>(n_) + 2LL * ctx.inner_steps;
    case Algorithm::kPrimalDual:
    case Algorithm::kOomdL2:
    case Algorithm::kOomdEntropy:
    case Algorithm::kRegretMatchingPlus:
      return n_;
  }
  throw InvalidArgument("CostModel: unknown algorithm tag");
}

double CostModel::ExpectedCharge(Algorithm algorithm, double p,
                                 int inner_steps) const {
  if (algorithm == Algorithm::kSvrgLoopless) return p * n_ + 2.0;
  return static_cast<double>(
      Charge(algorithm, ChargeContext{false, inner_steps}));
}

std::int64_t CostModel::InitialCharge(Algorithm algorithm) const {
  return algorithm == Algorithm::kSvrgLoopless ? n_ : 0;
}

std::int64_t CostModel::MaxStepCharge(Algorithm algorithm,
                                      int inner_steps) const {
  return Charge(algorithm, ChargeContext{true, inner_steps});
}

}  // namespace svrgeg
