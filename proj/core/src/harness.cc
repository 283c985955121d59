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

#include "svrgeg/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "svrgeg/generators.h"

namespace svrgeg {
namespace {

std::string JoinProblems(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) out += "\n  - " + p;
  return out;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
bool ParseNumber(const std::string& text, T& out) {
  std::istringstream is(text);
  T value;
  if (!(is >> value)) return false;
  char extra;
  if (is >> extra) return false;
  out = value;
  return true;
}

// Accepts integers written as doubles ("8e4").
bool ParseCount(const std::string& text, long long& out) {
  double v;
  if (!ParseNumber(text, v) || !std::isfinite(v) || v != std::floor(v)) {
    return false;
  }
  out = static_cast<long long>(v);
  return true;
}

bool ParseAmount(const std::string& text, Amount& out) {
  std::string body = Trim(text);
  Amount a;
  if (!body.empty() && body.back() == 'N') {
    a.times_n = true;
    body.pop_back();
  }
  if (!ParseNumber(body, a.value) || !std::isfinite(a.value) || a.value < 0) {
    return false;
  }
  out = a;
  return true;
}

bool IsDeterministic(Algorithm a) {
  return a != Algorithm::kSvrgLoopless && a != Algorithm::kSvrgDoubleLoop;
}

void WriteNumber(std::ostream& os, double v) { os << std::setprecision(17) << v; }

int ModeExponent(const std::string& mode) {
  if (mode == "last") return -1;
  if (mode == "uniform") return 0;
  if (mode == "linear") return 1;
  if (mode == "quadratic") return 2;
  return std::stoi(mode);
}

std::string ModeName(const std::string& mode) {
  const int q = ModeExponent(mode);
  return q < 0 ? "last" : AveragingColumnName(q);
}

struct ResolvedRun {
  Instance instance;
  RunConfig config;
  int num_components = 0;
  std::int64_t budget = 0;
  std::int64_t eval_every = 0;
};

ResolvedRun Resolve(const Settings& settings) {
  RunConfig config = ParseRunConfig(settings);
  Instance instance = BuildInstance(config.instance);
  std::vector<std::string> problems;
  const auto algo = settings.find("algo");
  if (algo != settings.end() && Trim(algo->second) == "all") {
    // `all` means every algorithm that supports this instance.
    std::erase_if(config.algorithms, [&](Algorithm a) {
      return CheckApplicable(a, instance.problem).has_value();
    });
  }
  for (Algorithm a : config.algorithms) {
    if (auto why = CheckApplicable(a, instance.problem)) problems.push_back(*why);
  }
  const int n =
      config.solver.num_components.value_or(instance.problem.ComponentCount());
  const std::int64_t budget = config.budget.Resolve(n);
  if (budget < n) {
    problems.push_back("budget " + std::to_string(budget) +
                       " is smaller than one full operator evaluation (N = " +
                       std::to_string(n) + ")");
  }
  std::int64_t min_every = 1;
  if (problems.empty()) {
    for (Algorithm a : config.algorithms) {
      min_every = std::max(min_every,
                           MinEvalEvery(a, instance.problem, config.solver));
    }
  }
  std::int64_t every = config.eval_every.Resolve(n);
  if (every == 0) {
    every = std::max(min_every, budget / 100);
  } else if (every < min_every) {
    problems.push_back("eval-every " + std::to_string(every) +
                       " is below the largest single-step charge " +
                       std::to_string(min_every));
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return ResolvedRun{std::move(instance), std::move(config), n, budget, every};
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) throw ConfigError({"cannot write '" + path.string() + "'"});
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : InvalidArgument(JoinProblems(problems)), problems_(std::move(problems)) {}

std::int64_t Amount::Resolve(int num_components) const {
  const double v = times_n ? value * num_components : value;
  return static_cast<std::int64_t>(std::llround(v));
}

Settings ParseConfig(std::istream& is) {
  Settings out;
  std::string line;
  int lineno = 0;
  std::vector<std::string> problems;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      problems.push_back("config line " + std::to_string(lineno) +
                         ": expected key = value");
      continue;
    }
    out[Trim(t.substr(0, eq))] = Trim(t.substr(eq + 1));
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return out;
}

Settings ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file '" + path + "'"});
  return ParseConfig(in);
}

std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : SplitList(text)) {
    const auto dash = item.find('-', 1);
    long long lo, hi;
    if (dash == std::string::npos) {
      if (!ParseCount(item, lo) || lo < 0) {
        throw ConfigError({"bad seed '" + item + "'"});
      }
      hi = lo;
    } else if (!ParseCount(item.substr(0, dash), lo) ||
               !ParseCount(item.substr(dash + 1), hi) || lo < 0 || hi < lo) {
      throw ConfigError({"bad seed range '" + item + "'"});
    }
    for (long long s = lo; s <= hi; ++s) out.push_back(s);
  }
  if (out.empty()) throw ConfigError({"seed list is empty"});
  return out;
}

InstanceSpec ParseInstanceSpec(const Settings& settings,
                               std::vector<std::string>& problems) {
  InstanceSpec spec;
  auto get = [&](const char* key) -> const std::string* {
    auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };
  auto int_field = [&](const char* key, int& out) {
    if (const auto* v = get(key)) {
      long long x;
      if (!ParseCount(*v, x) || x < 0) {
        problems.push_back(std::string(key) + ": expected a nonnegative integer, "
                           "got '" + *v + "'");
      } else {
        out = static_cast<int>(x);
      }
    }
  };
  if (const auto* v = get("instance")) spec.path = *v;
  if (const auto* v = get("gen")) spec.generator = *v;
  if (spec.path.empty() == spec.generator.empty()) {
    problems.push_back("exactly one of instance=<file> or gen=<generator> is "
                       "required");
  }
  int_field("n", spec.n);
  int_field("m", spec.m);
  int_field("family", spec.family);
  int_field("grid", spec.grid);
  int_field("regions", spec.regions);
  if (const auto* v = get("alpha-exp")) {
    if (!ParseNumber(*v, spec.alpha_exp)) {
      problems.push_back("alpha-exp: expected a number, got '" + *v + "'");
    }
  }
  if (const auto* v = get("seed")) {
    long long s;
    if (!ParseCount(*v, s) || s < 0) {
      problems.push_back("seed: expected a nonnegative integer, got '" + *v + "'");
    } else {
      spec.seed = static_cast<std::uint64_t>(s);
    }
  }
  static const std::vector<std::string> kGenerators = {
      "pb", "nemirovski", "uniform", "mp", "ws-example", "segmentation"};
  if (!spec.generator.empty()) {
    if (std::find(kGenerators.begin(), kGenerators.end(), spec.generator) ==
        kGenerators.end()) {
      problems.push_back("unknown generator '" + spec.generator +
                         "' (known: pb, nemirovski, uniform, mp, ws-example, "
                         "segmentation)");
    } else if ((spec.generator == "pb" || spec.generator == "nemirovski" ||
                spec.generator == "uniform") &&
               spec.n <= 0) {
      problems.push_back("generator '" + spec.generator + "' needs n >= 1");
    }
    if (spec.generator == "nemirovski" && spec.family != 1 &&
        spec.family != 2) {
      problems.push_back("family must be 1 or 2");
    }
  }
  return spec;
}

RunConfig ParseRunConfig(const Settings& settings) {
  static const std::vector<std::string> kKnown = {
      "instance", "gen",  "n",         "m",          "family", "alpha-exp",
      "grid",     "regions", "seed",   "algo",       "p",      "alpha",
      "gamma",    "K",    "N",         "step",       "tau-scale", "budget",
      "eval-every", "seeds", "q",      "out",        "threads", "config"};
  std::vector<std::string> problems;
  for (const auto& [key, value] : settings) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      problems.push_back("unknown option '" + key + "'");
    }
  }

  RunConfig config;
  config.instance = ParseInstanceSpec(settings, problems);
  auto get = [&](const char* key) -> const std::string* {
    auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };

  if (const auto* v = get("algo")) {
    for (const auto& name : SplitList(*v)) {
      if (name == "all") {
        config.algorithms = AllAlgorithms();
        continue;
      }
      if (auto a = ParseAlgorithm(name)) {
        config.algorithms.push_back(*a);
      } else {
        problems.push_back("unknown algorithm '" + name +
                           "' (known: svrg-eg, svrg-eg-dl, eg, pda, oomd-l2, "
                           "oomd-entropy, rm+, all)");
      }
    }
  }
  if (config.algorithms.empty()) problems.push_back("algo: at least one needed");

  auto real_field = [&](const char* key, std::optional<double>& out) {
    if (const auto* v = get(key)) {
      double x;
      if (!ParseNumber(*v, x) || !std::isfinite(x)) {
        problems.push_back(std::string(key) + ": expected a number, got '" + *v +
                           "'");
      } else {
        out = x;
      }
    }
  };
  real_field("p", config.solver.p);
  real_field("alpha", config.solver.alpha);
  real_field("gamma", config.solver.gamma);
  real_field("step", config.solver.step);
  if (config.solver.p && !(*config.solver.p > 0.0 && *config.solver.p <= 1.0)) {
    problems.push_back("p must lie in (0, 1]");
  }
  if (config.solver.alpha &&
      !(*config.solver.alpha >= 0.0 && *config.solver.alpha < 1.0)) {
    problems.push_back("alpha must lie in [0, 1)");
  }
  if (config.solver.gamma &&
      !(*config.solver.gamma > 0.0 && *config.solver.gamma < 1.0)) {
    problems.push_back("gamma must lie in (0, 1)");
  }
  if (const auto* v = get("tau-scale")) {
    if (!ParseNumber(*v, config.solver.tau_scale) ||
        !(config.solver.tau_scale > 0.0)) {
      problems.push_back("tau-scale must be a positive number");
    }
  }
  for (const char* key : {"K", "N"}) {
    if (const auto* v = get(key)) {
      long long x;
      if (!ParseCount(*v, x) || x < 1) {
        problems.push_back(std::string(key) + " must be a positive integer");
      } else if (key[0] == 'K') {
        config.solver.inner_steps = static_cast<int>(x);
      } else {
        config.solver.num_components = static_cast<int>(x);
      }
    }
  }

  if (const auto* v = get("budget")) {
    if (!ParseAmount(*v, config.budget) || config.budget.value <= 0) {
      problems.push_back("budget must be a positive count (optionally with a "
                         "trailing N)");
    }
  } else {
    problems.push_back("budget is required");
  }
  if (const auto* v = get("eval-every")) {
    if (!ParseAmount(*v, config.eval_every) || config.eval_every.value < 1) {
      problems.push_back("eval-every must be >= 1");
    }
  }
  if (const auto* v = get("seeds")) {
    try {
      config.seeds = ParseSeedList(*v);
    } catch (const ConfigError& e) {
      problems.insert(problems.end(), e.problems().begin(), e.problems().end());
    }
  }
  if (const auto* v = get("q")) {
    config.modes.clear();
    for (const auto& mode : SplitList(*v)) {
      try {
        if (ModeExponent(mode) < -1) throw std::invalid_argument(mode);
        config.modes.push_back(mode);
      } catch (const std::exception&) {
        problems.push_back("q: '" + mode + "' is not last/uniform/linear/"
                           "quadratic or a nonnegative integer");
      }
    }
    if (config.modes.empty()) problems.push_back("q: no averaging mode given");
  }
  if (const auto* v = get("out")) config.out = *v;
  if (const auto* v = get("threads")) {
    long long t;
    if (!ParseCount(*v, t) || t < 1) {
      problems.push_back("threads must be >= 1");
    } else {
      config.threads = static_cast<int>(t);
    }
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return config;
}

Instance BuildInstance(const InstanceSpec& spec) {
  if (!spec.path.empty()) return ReadInstanceFile(spec.path);
  const std::string& g = spec.generator;
  if (g == "pb") return {MakePolicemanBurglar(spec.n, spec.seed), {}};
  if (g == "nemirovski") {
    return {MakeNemirovski(spec.n, spec.family, spec.alpha_exp), {}};
  }
  if (g == "uniform") {
    return {MakeUniformRandom(spec.n, spec.m > 0 ? spec.m : spec.n, spec.seed),
            {}};
  }
  if (g == "mp") {
    auto [problem, known] = MakeMatchingPennies();
    return {std::move(problem), std::move(known)};
  }
  if (g == "ws-example") {
    auto [problem, known] = MakeWeakSharpnessExample();
    return {std::move(problem), std::move(known)};
  }
  if (g == "segmentation") {
    return {MakeSyntheticSegmentation(spec.grid, spec.regions, spec.seed), {}};
  }
  throw ConfigError({"unknown generator '" + g + "'"});
}

std::vector<GapTrace> RunSeeds(const AffineVI& problem, Algorithm algorithm,
                               const SolverOptions& solver_options,
                               const RunOptions& options,
                               const std::vector<std::uint64_t>& seeds,
                               int threads) {
  std::vector<GapTrace> traces(seeds.size());
  if (seeds.empty()) return traces;
  if (IsDeterministic(algorithm)) {
    traces[0] = Run(problem, algorithm, solver_options, options, seeds[0]);
    std::fill(traces.begin() + 1, traces.end(), traces[0]);
    return traces;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i = next++; i < seeds.size(); i = next++) {
      try {
        traces[i] = Run(problem, algorithm, solver_options, options, seeds[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int count =
      std::max(1, std::min(threads, static_cast<int>(seeds.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return traces;
}

std::string AveragingColumnName(int q) {
  switch (q) {
    case 0:
      return "uniform";
    case 1:
      return "linear";
    case 2:
      return "quadratic";
    default:
      return "q" + std::to_string(q);
  }
}

void WriteTraceCsv(std::ostream& os, const GapTrace& trace) {
  const bool with_dist =
      !trace.rows.empty() && trace.rows.front().dist_theta.has_value();
  os << "evals,gap_last";
  for (int q : trace.averaging_q) os << ",gap_" << AveragingColumnName(q);
  if (with_dist) os << ",dist_theta";
  os << '\n';
  for (const auto& row : trace.rows) {
    os << row.evals << ',';
    WriteNumber(os, row.gap_last);
    for (double g : row.gap_avg) {
      os << ',';
      WriteNumber(os, g);
    }
    if (with_dist) {
      os << ',';
      WriteNumber(os, row.dist_theta.value_or(0.0));
    }
    os << '\n';
  }
}

void WriteAggregateCsv(std::ostream& os, const std::vector<GapTrace>& traces,
                       std::int64_t eval_every) {
  if (traces.empty()) return;
  const GapTrace& first = traces.front();
  const bool with_dist =
      !first.rows.empty() && first.rows.front().dist_theta.has_value();

  std::vector<std::string> columns = {"evals_actual", "gap_last"};
  for (int q : first.averaging_q) {
    columns.push_back("gap_" + AveragingColumnName(q));
  }
  if (with_dist) columns.push_back("dist_theta");

  os << "evals";
  for (const auto& c : columns) os << ',' << c << "_mean," << c << "_std";
  os << '\n';

  size_t rows = first.rows.size();
  for (const auto& t : traces) rows = std::min(rows, t.rows.size());
  for (size_t r = 0; r < rows; ++r) {
    std::vector<std::vector<double>> values(columns.size());
    for (const auto& t : traces) {
      const GapTraceRow& row = t.rows[r];
      size_t c = 0;
      values[c++].push_back(static_cast<double>(row.evals));
      values[c++].push_back(row.gap_last);
      for (double g : row.gap_avg) values[c++].push_back(g);
      if (with_dist) values[c++].push_back(row.dist_theta.value_or(0.0));
    }
    // Nominal checkpoint: the multiple of eval_every this row stands for.
    os << (first.rows[r].evals / eval_every) * eval_every;
    for (const auto& v : values) {
      const double k = static_cast<double>(v.size());
      double mean = 0.0;
      for (double x : v) mean += x;
      mean /= k;
      double ss = 0.0;
      for (double x : v) ss += (x - mean) * (x - mean);
      const double sd = v.size() > 1 ? std::sqrt(ss / (k - 1.0)) : 0.0;
      os << ',';
      WriteNumber(os, mean);
      os << ',';
      WriteNumber(os, sd);
    }
    os << '\n';
  }
}

int CommandGen(const std::string& generator, const Settings& settings,
               std::ostream& log) {
  std::vector<std::string> problems;
  Settings with_gen = settings;
  with_gen["gen"] = generator;
  // gen spells the Nemirovski exponent --alpha.
  if (auto it = with_gen.find("alpha"); it != with_gen.end()) {
    with_gen["alpha-exp"] = it->second;
    with_gen.erase(it);
  }
  std::string out = generator + ".vif";
  if (auto it = with_gen.find("out"); it != with_gen.end()) {
    out = it->second;
    with_gen.erase(it);
  }
  for (const auto& [key, value] : with_gen) {
    static const std::vector<std::string> kKnown = {
        "gen", "n", "m", "family", "alpha-exp", "grid", "regions", "seed"};
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      problems.push_back("gen: unknown option '" + key + "'");
    }
  }
  const InstanceSpec spec = ParseInstanceSpec(with_gen, problems);
  if (!problems.empty()) throw ConfigError(std::move(problems));
  const Instance instance = BuildInstance(spec);
  {
    std::ofstream file = OpenForWrite(out);
    WriteInstance(file, instance.problem, instance.known);
    if (!file) throw ConfigError({"failed writing '" + out + "'"});
  }
  const AffineVI& p = instance.problem;
  log << std::setprecision(10);
  if (const auto* b = p.bilinear()) {
    log << "wrote " << out << ": bilinear " << b->primal_dim() << " x "
        << b->dual_dim() << ", |A|_F = " << b->A.FrobeniusNorm()
        << ", |A|_2 = " << b->A.SpectralNorm()
        << ", N = " << p.ComponentCount() << '\n';
  } else {
    log << "wrote " << out << ": affine VI of dimension " << p.dim()
        << ", |M|_F = " << p.matrix()->FrobeniusNorm()
        << ", |M|_2 = " << p.matrix()->SpectralNorm()
        << ", N = " << p.ComponentCount() << '\n';
  }
  return kExitOk;
}

int CommandRun(const Settings& settings, std::ostream& log) {
  ResolvedRun run = Resolve(settings);
  const RunConfig& config = run.config;
  const std::filesystem::path dir = config.out.empty() ? "." : config.out;

  RunOptions options;
  options.budget = run.budget;
  options.eval_every = run.eval_every;
  options.known = &run.instance.known;

  for (Algorithm a : config.algorithms) {
    const std::string name(AlgorithmName(a));
    const auto traces = RunSeeds(run.instance.problem, a, config.solver, options,
                                 config.seeds, config.threads);
    for (size_t i = 0; i < traces.size(); ++i) {
      std::ofstream f =
          OpenForWrite(dir / (name + "_seed" + std::to_string(config.seeds[i]) +
                              ".csv"));
      WriteTraceCsv(f, traces[i]);
    }
    std::ofstream agg = OpenForWrite(dir / (name + "_aggregate.csv"));
    WriteAggregateCsv(agg, traces, run.eval_every);

    double final_last = 0.0;
    for (const auto& t : traces) {
      if (!t.rows.empty()) final_last += t.rows.back().gap_last;
    }
    log << name << ": " << traces.size() << " seed(s), "
        << (traces.empty() ? 0 : traces.front().rows.size())
        << " checkpoints, mean final last-iterate " << traces.front().metric
        << " " << std::setprecision(6)
        << final_last / static_cast<double>(traces.size()) << '\n';
  }
  return kExitOk;
}

int CommandCompare(const Settings& settings, std::ostream& log) {
  ResolvedRun run = Resolve(settings);
  const RunConfig& config = run.config;

  std::vector<int> qs;
  for (const auto& mode : config.modes) {
    const int q = ModeExponent(mode);
    if (q >= 0 && std::find(qs.begin(), qs.end(), q) == qs.end()) {
      qs.push_back(q);
    }
  }
  RunOptions options;
  options.budget = run.budget;
  options.eval_every = run.eval_every;
  options.averaging_q = qs;

  // checkpoint -> column values
  std::map<std::int64_t, std::vector<std::optional<double>>> table;
  std::vector<std::string> header;
  size_t column = 0;
  const size_t total_columns = config.algorithms.size() * config.modes.size();
  for (Algorithm a : config.algorithms) {
    const auto traces = RunSeeds(run.instance.problem, a, config.solver, options,
                                 config.seeds, config.threads);
    for (const auto& mode : config.modes) {
      header.push_back(std::string(AlgorithmName(a)) + "_" + ModeName(mode));
      const int q = ModeExponent(mode);
      const auto slot = q < 0 ? -1
                              : std::find(qs.begin(), qs.end(), q) - qs.begin();
      std::map<std::int64_t, std::pair<double, int>> sums;
      for (const auto& t : traces) {
        for (const auto& row : t.rows) {
          const std::int64_t cp = (row.evals / run.eval_every) * run.eval_every;
          const double v = slot < 0 ? row.gap_last : row.gap_avg[slot];
          auto& s = sums[cp];
          s.first += v;
          s.second += 1;
        }
      }
      for (const auto& [cp, s] : sums) {
        auto& cells = table[cp];
        cells.resize(total_columns);
        cells[column] = s.first / s.second;
      }
      ++column;
    }
  }

  std::ofstream file;
  std::ostream* os = &log;
  if (!config.out.empty() && config.out != "-") {
    file = OpenForWrite(config.out);
    os = &file;
  }
  *os << "evals";
  for (const auto& h : header) *os << ',' << h;
  *os << '\n';
  for (auto& [cp, cells] : table) {
    cells.resize(total_columns);
    *os << cp;
    for (const auto& c : cells) {
      *os << ',';
      if (c) WriteNumber(*os, *c);
    }
    *os << '\n';
  }
  if (os != &log) {
    log << "wrote " << config.out << ": " << table.size() << " checkpoints x "
        << header.size() << " columns\n";
  }
  return kExitOk;
}

}  // namespace svrgeg
