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

// Mutual-information feature-selection objectives written as DS functions,
// feature cost models, and the forward greedy baseline.

#ifndef DSMIN_OBJECTIVE_H_
#define DSMIN_OBJECTIVE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dsmin/dataset.h"
#include "dsmin/set_function.h"

namespace dsmin {

enum class CostKind { kModular, kSqrtGroup, kSourceCount };

// Modular:     c(A) = |A|
// SqrtGroup:   c(A) = sum_i sqrt(m(A & S_i))
// SourceCount: c(A) = sum_i c_i min(|A & S_i|, 1)
struct CostModel {
  CostKind kind = CostKind::kModular;
  double lambda = 0.0;
  // Group of each feature (SqrtGroup and SourceCount).
  std::vector<int> group_of;
  // Per-feature m (SqrtGroup).
  std::vector<double> feature_weight;
  // Per-group c_i (SourceCount).
  std::vector<double> group_cost;
};

CostModel ModularCost(double lambda);
// The given number of contiguous, near-equal groups; weights drawn uniformly from
// [0.5, 1.5] with the given seed.
CostModel SqrtGroupCost(int n, int groups, double lambda, uint64_t seed);
CostModel SourceCountCost(int n, int groups, double lambda, uint64_t seed);
CostKind ParseCostKind(const std::string& name);
std::string ToString(CostKind kind);

// c(A), without the lambda factor. Submodular and normalized.
SetFunctionPtr MakeCostFunction(const CostModel& cost, int n);

// v(A) = [H(X_A | C) + lambda c(A)] - H(X_A), i.e. f = conditional part plus
// cost, g = joint entropy. With factored = true, H(X_A | C) is replaced by
// sum_{j in A} H(X_j | C), which makes f modular for the modular cost.
DSFunction MiObjective(std::shared_ptr<const Dataset> data, bool factored,
                       const CostModel& cost, double alpha);

// I(X_A; C) = H(X_A) - H(X_A | C), or the factored version; to be maximized.
SetFunctionPtr MutualInformation(std::shared_ptr<const Dataset> data, bool factored,
                                 double alpha);

struct GreedyResult {
  ElementSet set;
  // Selection order and the objective after each addition.
  std::vector<int> order;
  std::vector<double> values;
};

// Adds the element of largest gain (ties by index) until budget elements
// are chosen or no gain is positive. Throws ArgumentError if budget > n.
GreedyResult GreedySelect(const SetFunction& objective, int budget);

}  // namespace dsmin

#endif  // DSMIN_OBJECTIVE_H_
