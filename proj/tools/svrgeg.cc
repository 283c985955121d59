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

// Command-line front end: gen, run and compare.
//
// Options can also come from a key = value file passed with --config; flags
// given on the command line take precedence.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svrgeg/error.h"
#include "svrgeg/harness.h"

namespace {

using svrgeg::Settings;

struct Flag {
  const char* key;
  const char* help;
};

// Registers string flags --<key> that land in `settings` when given.
void AddFlags(CLI::App* app, const std::vector<Flag>& flags,
              Settings& settings) {
  for (const Flag& f : flags) {
    const std::string key = f.key;
    app->add_option_function<std::string>(
        "--" + key, [&settings, key](const std::string& v) { settings[key] = v; },
        f.help);
  }
}

const std::vector<Flag> kInstanceFlags = {
    {"instance", "instance file written by `gen`"},
    {"gen", "generator: pb, nemirovski, uniform, mp, ws-example, segmentation"},
    {"n", "generator size"},
    {"m", "second dimension (uniform)"},
    {"family", "Nemirovski family (1 or 2)"},
    {"alpha-exp", "Nemirovski exponent"},
    {"grid", "segmentation grid side"},
    {"regions", "segmentation label count"},
    {"seed", "generator seed"},
};

const std::vector<Flag> kRunFlags = {
    {"algo", "comma list of svrg-eg, svrg-eg-dl, eg, pda, oomd-l2, "
             "oomd-entropy, rm+ or `all`"},
    {"p", "snapshot probability (default 2/N)"},
    {"alpha", "anchoring weight (default 1 - p)"},
    {"gamma", "stepsize safety factor (default 0.99)"},
    {"K", "inner steps for svrg-eg-dl (default N/2)"},
    {"N", "component count override"},
    {"step", "explicit stepsize, overrides the default rule"},
    {"tau-scale", "multiplier applied to every default stepsize"},
    {"budget", "total oracle budget in F_xi units; suffix N for multiples of N"},
    {"eval-every", "checkpoint cadence in F_xi units (suffix N allowed)"},
    {"seeds", "run seeds, e.g. 0-9 or 0,3,5"},
    {"q", "averaging modes for compare: last, uniform, linear, quadratic or "
          "an integer exponent"},
    {"out", "output directory (run) or CSV file (compare)"},
    {"threads", "worker threads for the seed fan-out"},
};

void AddConfigFlag(CLI::App* app, std::string& path) {
  app->add_option("--config", path, "key = value configuration file");
}

Settings Merge(const std::string& config_path, const Settings& cli) {
  Settings merged;
  if (!config_path.empty()) merged = svrgeg::ReadConfigFile(config_path);
  for (const auto& [k, v] : cli) merged[k] = v;
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-reduced extragradient for monotone affine VIs"};
  app.require_subcommand(1);

  Settings gen_settings;
  std::string generator;
  auto* gen = app.add_subcommand("gen", "generate a problem instance file");
  gen->add_option("generator", generator,
                  "pb, nemirovski, uniform, mp, ws-example, segmentation")
      ->required();
  AddFlags(gen,
           {{"n", "size"},
            {"m", "second dimension (uniform)"},
            {"seed", "generator seed"},
            {"family", "Nemirovski family (1 or 2)"},
            {"alpha", "Nemirovski exponent"},
            {"grid", "segmentation grid side"},
            {"regions", "segmentation label count"},
            {"out", "output file (default <generator>.vif)"}},
           gen_settings);

  Settings run_settings;
  std::string run_config;
  auto* run = app.add_subcommand("run", "run solvers and write gap traces");
  AddFlags(run, kInstanceFlags, run_settings);
  AddFlags(run, kRunFlags, run_settings);
  AddConfigFlag(run, run_config);

  Settings cmp_settings;
  std::string cmp_config;
  auto* cmp = app.add_subcommand(
      "compare", "run several solvers and write one seed-averaged table");
  AddFlags(cmp, kInstanceFlags, cmp_settings);
  AddFlags(cmp, kRunFlags, cmp_settings);
  AddConfigFlag(cmp, cmp_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? svrgeg::kExitOk : svrgeg::kExitConfig;
  }

  try {
    if (gen->parsed()) {
      return svrgeg::CommandGen(generator, gen_settings, std::cout);
    }
    if (run->parsed()) {
      return svrgeg::CommandRun(Merge(run_config, run_settings), std::cout);
    }
    Settings s = Merge(cmp_config, cmp_settings);
    if (s.find("algo") == s.end()) s["algo"] = "all";
    return svrgeg::CommandCompare(s, std::cout);
  } catch (const svrgeg::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return svrgeg::kExitNumerical;
  } catch (const svrgeg::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return svrgeg::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
