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

// Feature-selection experiments: sweeps of lambda (DS procedures) and
// budgets (greedy baselines), each selection scored by cross-validated
// naive Bayes accuracy.

#ifndef DSMIN_EXPERIMENT_H_
#define DSMIN_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsmin/dataset.h"
#include "dsmin/dsopt.h"
#include "dsmin/objective.h"
#include "json.hpp"

namespace dsmin {

// Config JSON keys (all optional except path):
//   dataset, path, format ("sparse" | "csv"), label_column, groups (feature
//   group file for the classifier),
//   algorithms (subset of GrF, GrNF, SubSup, SupSub, ModMod),
//   cost {kind, groups, seed}, lambdas, budgets, smoothing (entropy
//   estimates), nb_alpha (classifier), factored,
//   folds, seed, optimizer {epsilon, max_iterations, strategy, bound_policy,
//   max_stall_retries}.
// A relative path is resolved against base_dir.
struct ExperimentConfig {
  std::string dataset = "dataset";
  std::string path;
  DataFormat format = DataFormat::kSparseBinary;
  std::string label_column;
  std::string groups_path;
  std::vector<std::string> algorithms = {"GrF", "GrNF", "SubSup", "SupSub", "ModMod"};
  CostKind cost_kind = CostKind::kModular;
  int cost_groups = 8;
  uint64_t cost_seed = 0;
  std::vector<double> lambdas;
  std::vector<int> budgets;
  double smoothing = 1.0;
  double nb_alpha = 1.0;
  bool factored = false;
  int folds = 10;
  uint64_t seed = 0;
  OptimizerOptions optimizer;
};

ExperimentConfig ParseExperimentConfig(const nlohmann::json& doc,
                                       const std::string& base_dir = "");
ExperimentConfig LoadExperimentConfig(const std::string& path);

struct ResultRow {
  std::string dataset;
  std::string algorithm;
  std::optional<double> lambda;
  std::optional<int> budget;
  ElementSet set;
  double cost = 0.0;
  double accuracy = 0.0;
  int64_t oracle_calls_f = 0;
  int64_t oracle_calls_g = 0;
  double wall_ms = 0.0;
  // Extra diagnostics, not part of the csv.
  double objective = 0.0;
  std::string certificate;
  std::vector<StepStats> steps;
};

// The cost model of the config at the given lambda, for n features.
CostModel MakeCostModel(const ExperimentConfig& config, int n, double lambda);

// The dataset with its feature groups attached, if configured.
Dataset LoadExperimentData(const ExperimentConfig& config);

// Rows are ordered by algorithm (config order) then sweep value. Sweep
// points run on up to `jobs` threads; results do not depend on jobs.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config, const Dataset& data,
                                     int jobs = 1);
std::vector<ResultRow> RunExperiment(const ExperimentConfig& config, int jobs = 1);

// Accuracy of the majority class of each training fold (used for {}).
double PriorOnlyAccuracy(const Dataset& data, int folds, uint64_t seed);

// With include_timing = false the wall_ms column is written as 0, so that
// seeded reruns are byte-identical.
std::string ResultsToCsv(const std::vector<ResultRow>& rows, bool include_timing = true);
nlohmann::json ResultsToJson(const std::vector<ResultRow>& rows, bool include_timing = true);

}  // namespace dsmin

#endif  // DSMIN_EXPERIMENT_H_
