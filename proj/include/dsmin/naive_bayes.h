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

// Categorical naive Bayes with k-fold cross-validation.

#ifndef DSMIN_NAIVE_BAYES_H_
#define DSMIN_NAIVE_BAYES_H_

#include <cstdint>
#include <vector>

#include "dsmin/dataset.h"
#include "dsmin/element_set.h"

namespace dsmin {

struct CvResult {
  double accuracy = 0.0;
  // Predicted class per row (from the fold that held the row out).
  std::vector<int> predictions;
  // Fold of each row.
  std::vector<int> fold_of;
};

// Fold assignment: rows shuffled with the seed, then dealt round-robin.
std::vector<int> AssignFolds(int rows, int folds, uint64_t seed);

// Selected features sharing a group (Dataset::feature_group) form one
// variable whose values are their observed joint configurations; other
// features are variables on their own. Class-conditional estimates
// P(x_j = v | c) = (n_jcv + alpha) / (n_c + alpha * arity_j), with arity_j
// the number of observed values, empirical class prior, log-space scores. Ties go
// to the lower class code. Throws ArgumentError if features is empty or
// folds < 2 or folds > rows.
CvResult CrossValidateNB(const Dataset& data, const ElementSet& features, int folds,
                         uint64_t seed, double alpha = 1.0);

}  // namespace dsmin

#endif  // DSMIN_NAIVE_BAYES_H_
