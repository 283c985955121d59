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

#ifndef SVRGEG_HARNESS_H_
#define SVRGEG_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "svrgeg/error.h"
#include "svrgeg/instance_io.h"
#include "svrgeg/run.h"

namespace svrgeg {

// Every problem found while validating a configuration, reported together.
class ConfigError : public InvalidArgument {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Flat settings: option name (without leading dashes) -> value.
using Settings = std::map<std::string, std::string>;

// Reads `key = value` lines; blank lines and lines starting with '#' are
// skipped.
Settings ReadConfigFile(const std::string& path);
Settings ParseConfig(std::istream& is);

// Which instance to use: a file, or a generator with its parameters.
struct InstanceSpec {
  std::string path;
  std::string generator;  // pb, nemirovski, uniform, mp, ws-example, segmentation
  int n = 0;
  int m = 0;
  int family = 1;
  double alpha_exp = 1.0;
  int grid = 8;
  int regions = 2;
  std::uint64_t seed = 2023;
};

// A count of F_xi units, optionally given as a multiple of N.
struct Amount {
  double value = 0.0;
  bool times_n = false;

  std::int64_t Resolve(int num_components) const;
};

struct RunConfig {
  InstanceSpec instance;
  std::vector<Algorithm> algorithms;
  SolverOptions solver;
  Amount budget;
  Amount eval_every;  // 0 picks max(min admissible, budget / 100)
  std::vector<std::uint64_t> seeds = {0};
  // compare only: "last" or an averaging exponent, e.g. {"last", "1"}
  std::vector<std::string> modes = {"last"};
  std::string out;
  int threads = 1;
};

// Validates and converts settings. Budgets and cadences accept a trailing N
// meaning "times the component count" (e.g. 2e4N). Throws ConfigError.
RunConfig ParseRunConfig(const Settings& settings);
InstanceSpec ParseInstanceSpec(const Settings& settings,
                               std::vector<std::string>& problems);

Instance BuildInstance(const InstanceSpec& spec);

// "0-9", "0,3,5", "0-4,7".
std::vector<std::uint64_t> ParseSeedList(const std::string& text);

// Runs every seed, fanning out over `threads` workers. Traces come back in
// seed order. Deterministic algorithms run once and the trace is shared by
// all seeds.
std::vector<GapTrace> RunSeeds(const AffineVI& problem, Algorithm algorithm,
                               const SolverOptions& solver_options,
                               const RunOptions& options,
                               const std::vector<std::uint64_t>& seeds,
                               int threads);

// evals,gap_last,gap_uniform,gap_linear,gap_quadratic[,dist_theta]
void WriteTraceCsv(std::ostream& os, const GapTrace& trace);

// evals (nominal checkpoint), then <column>_mean,<column>_std for every
// per-seed column including the actual evals; sample standard deviation.
void WriteAggregateCsv(std::ostream& os, const std::vector<GapTrace>& traces,
                       std::int64_t eval_every);

// Column header for an averaging exponent: uniform, linear, quadratic, q<k>.
std::string AveragingColumnName(int q);

// Subcommands. Each returns the process exit code and writes progress to
// `log`; configuration problems throw ConfigError, numerical aborts
// NumericalError.
int CommandGen(const std::string& generator, const Settings& settings,
               std::ostream& log);
int CommandRun(const Settings& settings, std::ostream& log);
int CommandCompare(const Settings& settings, std::ostream& log);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

}  // namespace svrgeg

#endif  // SVRGEG_HARNESS_H_
