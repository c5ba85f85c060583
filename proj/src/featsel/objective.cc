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

#include "dsmin/objective.h"

#include <fmt/format.h>

#include "dsmin/entropy.h"
#include "dsmin/errors.h"
#include "dsmin/random.h"
#include "dsmin/standard_functions.h"

namespace dsmin {

namespace {

std::vector<int> ContiguousGroups(int n, int groups) {
  if (groups < 1 || groups > n) {
    throw ArgumentError(fmt::format("need 1 <= groups <= n, got {} groups for n={}", groups, n));
  }
  std::vector<int> group_of(n);
  for (int j = 0; j < n; ++j) {
    group_of[j] = static_cast<int>(static_cast<int64_t>(j) * groups / n);
  }
  return group_of;
}

int NumGroups(const CostModel& cost) {
  int groups = 0;
  for (int g : cost.group_of) groups = std::max(groups, g + 1);
  return groups;
}

}  // namespace

CostModel ModularCost(double lambda) { return {CostKind::kModular, lambda, {}, {}, {}}; }

CostModel SqrtGroupCost(int n, int groups, double lambda, uint64_t seed) {
  CostModel cost{CostKind::kSqrtGroup, lambda, ContiguousGroups(n, groups), {}, {}};
  Rng rng(seed);
  cost.feature_weight.resize(n);
  for (double& w : cost.feature_weight) w = rng.Uniform(0.5, 1.5);
  return cost;
}

CostModel SourceCountCost(int n, int groups, double lambda, uint64_t seed) {
  CostModel cost{CostKind::kSourceCount, lambda, ContiguousGroups(n, groups), {}, {}};
  Rng rng(seed);
  cost.group_cost.resize(groups);
  for (double& c : cost.group_cost) c = rng.Uniform(0.5, 1.5);
  return cost;
}

CostKind ParseCostKind(const std::string& name) {
  if (name == "modular") return CostKind::kModular;
  if (name == "sqrt_group" || name == "sqrt-group") return CostKind::kSqrtGroup;
  if (name == "source_count" || name == "source-count") return CostKind::kSourceCount;
  throw ArgumentError(fmt::format("unknown cost model '{}'", name));
}

std::string ToString(CostKind kind) {
  switch (kind) {
    case CostKind::kModular:
      return "modular";
    case CostKind::kSqrtGroup:
      return "sqrt_group";
    case CostKind::kSourceCount:
      return "source_count";
  }
  return "?";
}

SetFunctionPtr MakeCostFunction(const CostModel& cost, int n) {
  if (cost.lambda < 0.0) throw ArgumentError("lambda must be >= 0");
  if (cost.kind == CostKind::kModular) {
    return MakeModular(ModularFunction(std::vector<double>(n, 1.0)));
  }
  if (static_cast<int>(cost.group_of.size()) != n) {
    throw ArgumentError("cost groups do not cover the features");
  }
  const int groups = NumGroups(cost);
  std::vector<std::pair<double, SetFunctionPtr>> terms;
  for (int i = 0; i < groups; ++i) {
    std::vector<double> w(n, 0.0);
    for (int j = 0; j < n; ++j) {
      if (cost.group_of[j] != i) continue;
      w[j] = cost.kind == CostKind::kSqrtGroup ? cost.feature_weight.at(j) : 1.0;
    }
    if (cost.kind == CostKind::kSqrtGroup) {
      terms.emplace_back(1.0, std::make_shared<ConcaveOfModular>(std::move(w), ConcaveKind::kSqrt));
    } else {
      if (cost.group_cost.at(i) < 0.0) throw ArgumentError("group costs must be >= 0");
      terms.emplace_back(cost.group_cost[i],
                         std::make_shared<ConcaveOfModular>(std::move(w), ConcaveKind::kMin, 1.0));
    }
  }
  return std::make_shared<LinearCombination>(n, std::move(terms));
}

DSFunction MiObjective(std::shared_ptr<const Dataset> data, bool factored,
                       const CostModel& cost, double alpha) {
  const int n = data->num_features();
  const SetFunctionPtr joint =
      std::make_shared<EntropyFunction>(data, EntropyFunction::Kind::kJoint, alpha);
  const SetFunctionPtr cost_fn = MakeCostFunction(cost, n);
  SetFunctionPtr f;
  if (factored) {
    ModularFunction conditional(SingletonConditionalEntropies(*data, alpha));
    if (cost.kind == CostKind::kModular) {
      f = MakeModular(conditional + cost.lambda * *cost_fn->AsModular());
    } else {
      f = std::make_shared<LinearCombination>(
          n, std::vector<std::pair<double, SetFunctionPtr>>{{cost.lambda, cost_fn}},
          std::move(conditional));
    }
  } else {
    const SetFunctionPtr conditional =
        std::make_shared<EntropyFunction>(data, EntropyFunction::Kind::kConditional, alpha);
    f = std::make_shared<LinearCombination>(
        n, std::vector<std::pair<double, SetFunctionPtr>>{{1.0, conditional},
                                                          {cost.lambda, cost_fn}});
  }
  return DSFunction(f, joint);
}

SetFunctionPtr MutualInformation(std::shared_ptr<const Dataset> data, bool factored,
                                 double alpha) {
  const DSFunction v = MiObjective(std::move(data), factored, ModularCost(0.0), alpha);
  return Minus(v.g, v.f);
}

GreedyResult GreedySelect(const SetFunction& objective, int budget) {
  const int n = objective.n();
  if (budget < 0 || budget > n) {
    throw ArgumentError(fmt::format("budget {} outside [0, {}]", budget, n));
  }
  GreedyResult out{ElementSet(n), {}, {}};
  double current = objective.Evaluate(out.set);
  while (static_cast<int>(out.order.size()) < budget) {
    int best = -1;
    double best_value = current;
    for (int j = 0; j < n; ++j) {
      if (out.set.contains(j)) continue;
      const double value = objective.Evaluate(out.set.With(j));
      if (value > best_value) {
        best = j;
        best_value = value;
      }
    }
    if (best < 0) break;
    out.set.insert(best);
    out.order.push_back(best);
    out.values.push_back(best_value);
    current = best_value;
  }
  return out;
}

}  // namespace dsmin
