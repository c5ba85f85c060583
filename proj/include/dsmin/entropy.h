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

// Plug-in entropy estimates (bits) of feature subsets with Laplace
// smoothing. Only realized configurations are counted; the K - d unobserved
// cells of the smoothed joint (K = product of arities, d = distinct observed
// configurations) contribute through a closed-form aggregate term.

#ifndef DSMIN_ENTROPY_H_
#define DSMIN_ENTROPY_H_

#include <atomic>
#include <memory>
#include <vector>

#include "dsmin/dataset.h"
#include "dsmin/set_function.h"

namespace dsmin {

// Above this many cells the smoothing term is dropped (alpha treated as 0).
inline constexpr double kMaxSmoothedCells = 1e12;

struct EntropyValue {
  double bits = 0.0;
  bool smoothing_dropped = false;
};

// H(X_A).
EntropyValue JointEntropy(const Dataset& data, const ElementSet& a, double alpha);
// H(X_A | C) = sum_c p(c) H(X_A | C = c), each class with its own smoothed
// joint.
EntropyValue ConditionalEntropy(const Dataset& data, const ElementSet& a, double alpha);

// Set-function oracles over the features of a dataset. Chains are evaluated
// incrementally by refining a row partition one feature at a time.
class EntropyFunction final : public SetFunction {
 public:
  enum class Kind { kJoint, kConditional };

  EntropyFunction(std::shared_ptr<const Dataset> data, Kind kind, double alpha);

  // Evaluations in which the smoothing term was dropped.
  int64_t smoothing_dropped() const { return dropped_.load(); }

 protected:
  double DoEvaluate(const ElementSet& a) const override;
  void DoEvaluateChain(std::span<const int> order, std::span<double> out) const override;

 private:
  std::shared_ptr<const Dataset> data_;
  Kind kind_;
  double alpha_;
  mutable std::atomic<int64_t> dropped_{0};
};

// H(X_j | C) for every feature j.
std::vector<double> SingletonConditionalEntropies(const Dataset& data, double alpha);

}  // namespace dsmin

#endif  // DSMIN_ENTROPY_H_
