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

#include "dsmin/naive_bayes.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "dsmin/errors.h"
#include "dsmin/random.h"

namespace dsmin {

namespace {

// One categorical input of the classifier: a single feature, or the joint
// value of the selected features sharing a group.
struct Variable {
  std::vector<int> code;
  int arity = 0;
};

std::vector<Variable> BuildVariables(const Dataset& data, const std::vector<int>& feats) {
  std::vector<std::vector<int>> members;
  std::unordered_map<int, size_t> slot;
  for (int j : feats) {
    if (data.feature_group.empty()) {
      members.push_back({j});
      continue;
    }
    const auto [it, inserted] = slot.emplace(data.feature_group[j], members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(j);
  }
  std::vector<Variable> vars(members.size());
  for (size_t v = 0; v < members.size(); ++v) {
    Variable& var = vars[v];
    var.code.assign(data.num_rows, 0);
    var.arity = 1;
    for (int j : members[v]) {
      const int64_t arity = data.arity[j];
      std::unordered_map<int64_t, int> remap;
      for (int r = 0; r < data.num_rows; ++r) {
        const int64_t key = var.code[r] * arity + data.columns[j][r];
        var.code[r] = remap.emplace(key, static_cast<int>(remap.size())).first->second;
      }
      var.arity = static_cast<int>(remap.size());
    }
  }
  return vars;
}

}  // namespace

std::vector<int> AssignFolds(int rows, int folds, uint64_t seed) {
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(std::span<int>(order));
  std::vector<int> fold_of(rows);
  for (int i = 0; i < rows; ++i) fold_of[order[i]] = i % folds;
  return fold_of;
}

CvResult CrossValidateNB(const Dataset& data, const ElementSet& features, int folds,
                         uint64_t seed, double alpha) {
  if (features.universe_size() != data.num_features()) {
    throw DomainError("feature set over a different ground set");
  }
  if (features.empty()) throw ArgumentError("naive Bayes needs at least one feature");
  if (folds < 2 || folds > data.num_rows) {
    throw ArgumentError(fmt::format("folds must be in [2, {}], got {}", data.num_rows, folds));
  }
  const std::vector<Variable> vars = BuildVariables(data, features.ToIndices());
  const int classes = data.num_classes();
  CvResult result;
  result.fold_of = AssignFolds(data.num_rows, folds, seed);
  result.predictions.assign(data.num_rows, 0);

  int correct = 0;
  for (int fold = 0; fold < folds; ++fold) {
    std::vector<int> class_count(classes, 0);
    // counts[f][c * arity + v]
    std::vector<std::vector<int>> counts(vars.size());
    for (size_t f = 0; f < vars.size(); ++f) {
      counts[f].assign(static_cast<size_t>(classes) * vars[f].arity, 0);
    }
    int train_rows = 0;
    for (int r = 0; r < data.num_rows; ++r) {
      if (result.fold_of[r] == fold) continue;
      const int c = data.labels[r];
      ++class_count[c];
      ++train_rows;
      for (size_t f = 0; f < vars.size(); ++f) {
        ++counts[f][c * vars[f].arity + vars[f].code[r]];
      }
    }
    // log P(x_j = v | c) tables.
    std::vector<std::vector<double>> log_p(vars.size());
    for (size_t f = 0; f < vars.size(); ++f) {
      const int arity = vars[f].arity;
      log_p[f].resize(counts[f].size());
      for (int c = 0; c < classes; ++c) {
        const double denom = class_count[c] + alpha * arity;
        for (int v = 0; v < arity; ++v) {
          log_p[f][c * arity + v] = std::log((counts[f][c * arity + v] + alpha) / denom);
        }
      }
    }
    std::vector<double> log_prior(classes);
    for (int c = 0; c < classes; ++c) {
      log_prior[c] = class_count[c] > 0
                         ? std::log(static_cast<double>(class_count[c]) / train_rows)
                         : -std::numeric_limits<double>::infinity();
    }
    for (int r = 0; r < data.num_rows; ++r) {
      if (result.fold_of[r] != fold) continue;
      int best = 0;
      double best_score = -std::numeric_limits<double>::infinity();
      for (int c = 0; c < classes; ++c) {
        double score = log_prior[c];
        for (size_t f = 0; f < vars.size(); ++f) {
          score += log_p[f][c * vars[f].arity + vars[f].code[r]];
        }
        if (score > best_score) {
          best_score = score;
          best = c;
        }
      }
      result.predictions[r] = best;
      if (best == data.labels[r]) ++correct;
    }
  }
  result.accuracy = static_cast<double>(correct) / data.num_rows;
  return result;
}

}  // namespace dsmin
