// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dsmin: command-line front end.
//
//   dsmin minimize --f f.json --g g.json --alg modmod
//   dsmin bounds --f f.json --g g.json
//   dsmin decompose --f f.json --g g.json
//   dsmin featsel --config configs/mushroom_modular.json --out results.csv
//   dsmin selftest
//
// Exit codes: 0 success (minimize: converged), 2 iteration cap, 1 bad input,
// 3 failed self-test.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "dsmin/brute_force.h"
#include "dsmin/checks.h"
#include "dsmin/constraints.h"
#include "dsmin/decomp.h"
#include "dsmin/dsopt.h"
#include "dsmin/errors.h"
#include "dsmin/experiment.h"
#include "dsmin/fixture.h"
#include "dsmin/random_instances.h"

#ifndef DSMIN_DATA_DIR
#define DSMIN_DATA_DIR "data"
#endif

namespace dsmin {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitIterationCap = 2;
constexpr int kExitSelftestFailed = 3;

struct InstanceArgs {
  std::string f_path;
  std::string g_path;
  int random_n = 0;
  uint64_t seed = 0;
};

void AddInstanceOptions(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--f", args.f_path, "Fixture JSON for f");
  cmd->add_option("--g", args.g_path, "Fixture JSON for g (default: zero)");
  cmd->add_option("--random", args.random_n, "Use a seeded random DS instance of this size")
      ->check(CLI::Range(1, 4096));
  cmd->add_option("--seed", args.seed, "Seed for random choices");
}

DSFunction LoadInstance(const InstanceArgs& args) {
  if (args.random_n > 0) {
    if (!args.f_path.empty()) throw ArgumentError("--random and --f are exclusive");
    return RandomDS(args.random_n, args.seed);
  }
  if (args.f_path.empty()) throw ArgumentError("need --f or --random");
  SetFunctionPtr f = LoadFunction(args.f_path);
  SetFunctionPtr g = args.g_path.empty() ? MakeModular(ModularFunction::Zero(f->n()))
                                         : LoadFunction(args.g_path);
  return DSFunction(std::move(f), std::move(g));
}

std::vector<int> ParseInts(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ArgumentError(fmt::format("bad integer '{}' in '{}'", item, text));
    }
  }
  return out;
}

std::vector<std::string> SplitColon(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  return parts;
}

// card=K | card<=K | partition:PARTS:CAPS[:basis] | tree:EDGEFILE |
// knapsack:COSTS:BUDGET, with comma-separated lists.
Constraint ParseConstraintSpec(const std::string& spec) {
  if (spec.rfind("card<=", 0) == 0) return CardinalityAtMost{ParseInts(spec.substr(6)).at(0)};
  if (spec.rfind("card=", 0) == 0) return CardinalityEq{ParseInts(spec.substr(5)).at(0)};
  const std::vector<std::string> parts = SplitColon(spec);
  if (parts.size() >= 3 && parts[0] == "partition") {
    PartitionMatroid p{ParseInts(parts[1]), ParseInts(parts[2]), false};
    if (parts.size() == 4 && parts[3] == "basis") {
      p.basis = true;
    } else if (parts.size() != 3) {
      throw ArgumentError("partition constraint is partition:PARTS:CAPS[:basis]");
    }
    return p;
  }
  if (parts.size() == 2 && parts[0] == "tree") return LoadEdgeList(parts[1]);
  if (parts.size() == 3 && parts[0] == "knapsack") {
    Knapsack k;
    for (int c : ParseInts(parts[1])) k.costs.push_back(c);
    k.budget = ParseInts(parts[2]).at(0);
    return k;
  }
  throw ArgumentError(fmt::format("unknown constraint '{}'", spec));
}

std::string FormatValue(double x) { return fmt::format("{:.10g}", x); }

int Minimize(const InstanceArgs& instance, const std::string& algorithm,
             OptimizerOptions options, const std::string& strategy,
             const std::string& bound_policy, const std::string& constraint,
             const std::string& trace_path) {
  const DSFunction ds = LoadInstance(instance);
  options.seed = instance.seed;
  options.strategy = ParseStrategy(strategy);
  options.bound_policy = ParseBoundPolicy(bound_policy);
  OptimizationTrace trace;
  if (!constraint.empty()) {
    if (ParseAlgorithm(algorithm) != Algorithm::kModMod) {
      throw ArgumentError("constraints are supported by modmod only");
    }
    trace = ConstrainedModMod(ds, ParseConstraintSpec(constraint), options);
  } else {
    trace = dsmin::Minimize(ds, ParseAlgorithm(algorithm), options);
  }
  std::cout << fmt::format("set={} value={} cert={}\n", trace.final_set().ToString(),
                           FormatValue(trace.final_value()), ToString(trace.certificate));
  std::cout << fmt::format("algorithm={} iterations={} oracle_calls_f={} oracle_calls_g={}\n",
                           trace.algorithm, trace.accepted_iterations(), trace.oracle_calls_f,
                           trace.oracle_calls_g);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw ArgumentError(fmt::format("cannot write '{}'", trace_path));
    out << TraceToJson(trace).dump(2) << '\n';
  }
  return trace.certificate == Certificate::kIterationCap ? kExitIterationCap : kExitOk;
}

int Bounds(const InstanceArgs& instance) {
  const DSFunction ds = LoadInstance(instance);
  std::string line = fmt::format("lower_bound_1={} lower_bound_2={}",
                                 FormatValue(LowerBound1(ds)), FormatValue(LowerBound2(ds)));
  if (ds.n() <= kMaxBruteForceN) {
    line += fmt::format(" brute_force={}", FormatValue(BruteForceMinimize(ds).value));
  }
  std::cout << line << '\n';
  return kExitOk;
}

int Decompose(const InstanceArgs& instance, const std::string& out_path) {
  const DSFunction ds = LoadInstance(instance);
  const int n = ds.n();
  const TotallyNormalizedSplit sf = TotallyNormalize(ds.f);
  const TotallyNormalizedSplit sg = TotallyNormalize(ds.g);
  std::cout << fmt::format("k_f={}\n", fmt::join(sf.k.weights(), ","));
  std::cout << fmt::format("k_g={}\n", fmt::join(sg.k.weights(), ","));
  if (n <= 12) {
    const double alpha = BruteForceAlpha(*ds.AsOracle());
    std::cout << fmt::format("alpha={}\n", FormatValue(alpha));
  }
  if (n >= 3) std::cout << fmt::format("beta_sqrt={}\n", FormatValue(BetaSqrt(n)));
  if (!out_path.empty()) {
    if (n > kMaxBruteForceN) throw SizeError("tables are written for n <= 20 only");
    const DSFunction mono = MonotoneDS(ds);
    const nlohmann::json doc = {{"f", TableToJson(*mono.f)}, {"g", TableToJson(*mono.g)}};
    std::ofstream out(out_path);
    if (!out) throw ArgumentError(fmt::format("cannot write '{}'", out_path));
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int Featsel(const std::string& config_path, int jobs, std::optional<uint64_t> seed,
            const std::string& out_path, bool no_timing) {
  ExperimentConfig config = LoadExperimentConfig(config_path);
  if (seed) {
    config.seed = *seed;
    config.optimizer.seed = *seed;
  }
  const std::vector<ResultRow> rows = RunExperiment(config, jobs);
  const bool json = out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json";
  const std::string text =
      json ? ResultsToJson(rows, !no_timing).dump(2) + "\n" : ResultsToCsv(rows, !no_timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ArgumentError(fmt::format("cannot write '{}'", out_path));
    out << text;
    std::cout << fmt::format("rows={} out={}\n", rows.size(), out_path);
  }
  return kExitOk;
}

int Selftest(std::vector<int> ids, bool all, const std::string& data_dir, int jobs) {
  if (ids.empty()) {
    for (int id = 1; id <= kNumChecks; ++id) {
      if (all || !CheckNeedsData(id)) ids.push_back(id);
    }
  }
  bool ok = true;
  for (int id : ids) {
    const CheckResult r = RunCheck(id, {data_dir, jobs});
    std::cout << FormatCheck(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitSelftestFailed;
}

int Run(int argc, char** argv) {
  CLI::App app{"Difference-of-submodular minimization toolkit"};
  app.require_subcommand(1);

  InstanceArgs instance;
  OptimizerOptions options;
  std::string algorithm = "modmod";
  std::string strategy = "vgains";
  std::string bound_policy = "both";
  std::string constraint;
  std::string trace_path;
  CLI::App* minimize = app.add_subcommand("minimize", "Minimize f - g");
  AddInstanceOptions(minimize, instance);
  minimize->add_option("--alg", algorithm, "subsup | supsub | modmod");
  minimize->add_option("--epsilon", options.epsilon, "Approximate-descent factor")
      ->check(CLI::NonNegativeNumber);
  minimize->add_option("--strategy", strategy, "random | ggains | vgains | fgains");
  minimize->add_option("--bound-policy", bound_policy, "bound1 | bound2 | both | alternate");
  minimize->add_option("--max-iterations", options.max_iterations)->check(CLI::PositiveNumber);
  minimize->add_option("--constraint", constraint,
                       "card=K, card<=K, partition:PARTS:CAPS[:basis], tree:FILE, "
                       "knapsack:COSTS:BUDGET (modmod only)");
  minimize->add_option("--trace", trace_path, "Write the iterate trace as JSON");

  CLI::App* bounds = app.add_subcommand("bounds", "Lower bounds on min f - g");
  AddInstanceOptions(bounds, instance);

  std::string out_path;
  CLI::App* decompose = app.add_subcommand("decompose", "Modular parts, alpha, monotone split");
  AddInstanceOptions(decompose, instance);
  decompose->add_option("--out", out_path, "Write the monotone split tables as JSON");

  std::string config_path;
  int jobs = 1;
  std::optional<uint64_t> featsel_seed;
  bool no_timing = false;
  CLI::App* featsel = app.add_subcommand("featsel", "Run a feature-selection experiment");
  featsel->add_option("--config", config_path, "Experiment config JSON")->required();
  featsel->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  featsel->add_option("--seed", featsel_seed, "Override the config seed");
  featsel->add_option("--out", out_path, "Output file (.csv or .json); default stdout");
  featsel->add_flag("--no-timing", no_timing, "Write wall_ms as 0");

  std::vector<int> check_ids;
  bool all_checks = false;
  std::string data_dir = DSMIN_DATA_DIR;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--check", check_ids, "Suites to run (1-11)")
      ->check(CLI::Range(1, kNumChecks))
      ->delimiter(',');
  selftest->add_flag("--all", all_checks, "Include the dataset suites 9-11");
  selftest->add_option("--data-dir", data_dir, "Directory with datasets and configs");
  selftest->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*minimize) {
      return Minimize(instance, algorithm, options, strategy, bound_policy, constraint,
                      trace_path);
    }
    if (*bounds) return Bounds(instance);
    if (*decompose) return Decompose(instance, out_path);
    if (*featsel) return Featsel(config_path, jobs, featsel_seed, out_path, no_timing);
    if (*selftest) return Selftest(check_ids, all_checks, data_dir, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace
}  // namespace dsmin

int main(int argc, char** argv) { return dsmin::Run(argc, argv); }
