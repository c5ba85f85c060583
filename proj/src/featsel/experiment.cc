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

#include "dsmin/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "dsmin/errors.h"
#include "dsmin/naive_bayes.h"

namespace dsmin {

namespace {

using Clock = std::chrono::steady_clock;

template <typename T>
T Get(const nlohmann::json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(fmt::format("config key '{}': {}", key, e.what()));
  }
}

bool IsGreedy(const std::string& algorithm) {
  return algorithm == "GrF" || algorithm == "GrNF";
}

std::string CanonicalAlgorithm(const std::string& name) {
  for (const char* known : {"GrF", "GrNF"}) {
    if (name == known) return name;
  }
  return ToString(ParseAlgorithm(name));
}

struct Task {
  std::string algorithm;
  std::optional<double> lambda;
};

std::vector<ResultRow> RunTask(const ExperimentConfig& config,
                               const std::shared_ptr<const Dataset>& data, const Task& task) {
  const int n = static_cast<int>(data->columns.size());
  const auto score = [&](ResultRow& row) {
    row.dataset = config.dataset;
    row.algorithm = task.algorithm;
    row.cost = MakeCostFunction(MakeCostModel(config, n, 1.0), n)->Evaluate(row.set);
    row.accuracy = row.set.empty()
                       ? PriorOnlyAccuracy(*data, config.folds, config.seed)
                       : CrossValidateNB(*data, row.set, config.folds, config.seed,
                                         config.nb_alpha)
                             .accuracy;
  };

  std::vector<ResultRow> rows;
  const Clock::time_point start = Clock::now();
  if (IsGreedy(task.algorithm)) {
    const bool factored = task.algorithm == "GrF";
    DSFunction mi = MiObjective(data, factored, MakeCostModel(config, n, 0.0),
                                config.smoothing);
    auto f = std::make_shared<CountingView>(mi.f);
    auto g = std::make_shared<CountingView>(mi.g);
    const SetFunctionPtr objective = Minus(g, f);
    int max_budget = 0;
    for (int b : config.budgets) max_budget = std::max(max_budget, b);
    const GreedyResult greedy = GreedySelect(*objective, std::min(max_budget, n));
    const double wall =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (int b : config.budgets) {
      ResultRow row;
      row.budget = b;
      row.set = ElementSet(n);
      const int take = std::min<int>(b, static_cast<int>(greedy.order.size()));
      for (int i = 0; i < take; ++i) row.set.insert(greedy.order[i]);
      row.objective = take == 0 ? 0.0 : greedy.values[take - 1];
      row.oracle_calls_f = f->calls();
      row.oracle_calls_g = g->calls();
      row.wall_ms = wall;
      score(row);
      rows.push_back(std::move(row));
    }
    return rows;
  }

  const DSFunction ds = MiObjective(data, config.factored,
                                    MakeCostModel(config, n, *task.lambda), config.smoothing);
  const OptimizationTrace trace =
      Minimize(ds, ParseAlgorithm(task.algorithm), config.optimizer);
  ResultRow row;
  row.lambda = task.lambda;
  row.set = trace.final_set();
  row.objective = trace.final_value();
  row.oracle_calls_f = trace.oracle_calls_f;
  row.oracle_calls_g = trace.oracle_calls_g;
  row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  row.certificate = ToString(trace.certificate);
  row.steps = trace.steps;
  score(row);
  rows.push_back(std::move(row));
  return rows;
}

std::string FormatDouble(double x) { return fmt::format("{:.10g}", x); }

}  // namespace

ExperimentConfig ParseExperimentConfig(const nlohmann::json& doc, const std::string& base_dir) {
  if (!doc.is_object()) throw ArgumentError("experiment config must be a JSON object");
  ExperimentConfig c;
  c.dataset = Get<std::string>(doc, "dataset", c.dataset);
  c.path = Get<std::string>(doc, "path", "");
  if (c.path.empty()) throw ArgumentError("experiment config needs 'path'");
  if (!base_dir.empty() && std::filesystem::path(c.path).is_relative()) {
    c.path = (std::filesystem::path(base_dir) / c.path).string();
  }
  c.groups_path = Get<std::string>(doc, "groups", "");
  if (!c.groups_path.empty() && !base_dir.empty() &&
      std::filesystem::path(c.groups_path).is_relative()) {
    c.groups_path = (std::filesystem::path(base_dir) / c.groups_path).string();
  }
  c.format = ParseDataFormat(Get<std::string>(doc, "format", "sparse"));
  c.label_column = Get<std::string>(doc, "label_column", "");
  if (doc.contains("algorithms")) {
    c.algorithms.clear();
    for (const auto& name : Get<std::vector<std::string>>(doc, "algorithms", {})) {
      c.algorithms.push_back(CanonicalAlgorithm(name));
    }
  }
  if (doc.contains("cost")) {
    const nlohmann::json& cost = doc.at("cost");
    c.cost_kind = ParseCostKind(Get<std::string>(cost, "kind", "modular"));
    c.cost_groups = Get<int>(cost, "groups", c.cost_groups);
    c.cost_seed = Get<uint64_t>(cost, "seed", c.cost_seed);
    if (c.cost_groups < 1) throw ArgumentError("cost groups must be >= 1");
  }
  c.lambdas = Get<std::vector<double>>(doc, "lambdas", {});
  c.budgets = Get<std::vector<int>>(doc, "budgets", {});
  for (double l : c.lambdas) {
    if (!std::isfinite(l) || l < 0.0) throw ArgumentError("lambdas must be finite and >= 0");
  }
  for (int b : c.budgets) {
    if (b < 0) throw ArgumentError("budgets must be >= 0");
  }
  c.smoothing = Get<double>(doc, "smoothing", c.smoothing);
  if (!(c.smoothing >= 0.0)) throw ArgumentError("smoothing must be >= 0");
  c.nb_alpha = Get<double>(doc, "nb_alpha", c.nb_alpha);
  if (!(c.nb_alpha >= 0.0)) throw ArgumentError("nb_alpha must be >= 0");
  c.factored = Get<bool>(doc, "factored", c.factored);
  c.folds = Get<int>(doc, "folds", c.folds);
  if (c.folds < 2) throw ArgumentError("folds must be >= 2");
  c.seed = Get<uint64_t>(doc, "seed", c.seed);
  c.optimizer.seed = c.seed;
  if (doc.contains("optimizer")) {
    const nlohmann::json& o = doc.at("optimizer");
    c.optimizer.epsilon = Get<double>(o, "epsilon", c.optimizer.epsilon);
    c.optimizer.max_iterations = Get<int>(o, "max_iterations", c.optimizer.max_iterations);
    c.optimizer.max_stall_retries =
        Get<int>(o, "max_stall_retries", c.optimizer.max_stall_retries);
    if (o.contains("strategy")) {
      c.optimizer.strategy = ParseStrategy(Get<std::string>(o, "strategy", ""));
    }
    if (o.contains("bound_policy")) {
      c.optimizer.bound_policy = ParseBoundPolicy(Get<std::string>(o, "bound_policy", ""));
    }
  }
  return c;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read config '{}'", path), 0);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("config '{}': {}", path, e.what()), 0);
  }
  return ParseExperimentConfig(doc, std::filesystem::path(path).parent_path().string());
}

CostModel MakeCostModel(const ExperimentConfig& config, int n, double lambda) {
  switch (config.cost_kind) {
    case CostKind::kModular:
      return ModularCost(lambda);
    case CostKind::kSqrtGroup:
      return SqrtGroupCost(n, config.cost_groups, lambda, config.cost_seed);
    case CostKind::kSourceCount:
      return SourceCountCost(n, config.cost_groups, lambda, config.cost_seed);
  }
  throw ArgumentError("unknown cost kind");
}

double PriorOnlyAccuracy(const Dataset& data, int folds, uint64_t seed) {
  const std::vector<int> fold_of = AssignFolds(data.num_rows, folds, seed);
  const int classes = static_cast<int>(data.class_names.size());
  int correct = 0;
  for (int k = 0; k < folds; ++k) {
    std::vector<int> counts(classes, 0);
    for (int r = 0; r < data.num_rows; ++r) {
      if (fold_of[r] != k) ++counts[data.labels[r]];
    }
    const int majority =
        static_cast<int>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    for (int r = 0; r < data.num_rows; ++r) {
      if (fold_of[r] == k && data.labels[r] == majority) ++correct;
    }
  }
  return data.num_rows == 0 ? 0.0 : static_cast<double>(correct) / data.num_rows;
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config, const Dataset& data,
                                     int jobs) {
  if (jobs < 1) throw ArgumentError("jobs must be >= 1");
  auto shared = std::make_shared<const Dataset>(data);
  std::vector<Task> tasks;
  for (const std::string& algorithm : config.algorithms) {
    if (IsGreedy(algorithm)) {
      if (!config.budgets.empty()) tasks.push_back({algorithm, std::nullopt});
    } else {
      for (double lambda : config.lambdas) tasks.push_back({algorithm, lambda});
    }
  }
  std::vector<std::vector<ResultRow>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = RunTask(config, shared, tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<ResultRow> rows;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (ResultRow& row : results[i]) rows.push_back(std::move(row));
  }
  return rows;
}

Dataset LoadExperimentData(const ExperimentConfig& config) {
  Dataset data = LoadDataset(config.path, config.format, config.label_column);
  if (!config.groups_path.empty()) LoadFeatureGroups(config.groups_path, data);
  return data;
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& config, int jobs) {
  return RunExperiment(config, LoadExperimentData(config), jobs);
}

std::string ResultsToCsv(const std::vector<ResultRow>& rows, bool include_timing) {
  std::ostringstream out;
  out << "dataset,algorithm,lambda,budget,set_bitmask_hex,set_size,cost,accuracy,"
         "oracle_calls_f,oracle_calls_g,wall_ms\n";
  for (const ResultRow& r : rows) {
    out << r.dataset << ',' << r.algorithm << ','
        << (r.lambda ? FormatDouble(*r.lambda) : "") << ','
        << (r.budget ? std::to_string(*r.budget) : "") << ',' << r.set.ToHex() << ','
        << r.set.size() << ',' << FormatDouble(r.cost) << ',' << FormatDouble(r.accuracy)
        << ',' << r.oracle_calls_f << ',' << r.oracle_calls_g << ','
        << fmt::format("{:.3f}", include_timing ? r.wall_ms : 0.0) << '\n';
  }
  return out.str();
}

nlohmann::json ResultsToJson(const std::vector<ResultRow>& rows, bool include_timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const ResultRow& r : rows) {
    nlohmann::json row = {{"dataset", r.dataset},
                          {"algorithm", r.algorithm},
                          {"lambda", r.lambda ? nlohmann::json(*r.lambda) : nullptr},
                          {"budget", r.budget ? nlohmann::json(*r.budget) : nullptr},
                          {"set_bitmask_hex", r.set.ToHex()},
                          {"set_size", r.set.size()},
                          {"cost", r.cost},
                          {"accuracy", r.accuracy},
                          {"oracle_calls_f", r.oracle_calls_f},
                          {"oracle_calls_g", r.oracle_calls_g},
                          {"objective", r.objective}};
    if (!r.certificate.empty()) row["certificate"] = r.certificate;
    if (include_timing) row["wall_ms"] = r.wall_ms;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace dsmin
