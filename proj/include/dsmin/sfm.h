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

// Exact submodular function minimization with the Fujishige-Wolfe
// minimum-norm-point algorithm over the base polytope.

#ifndef DSMIN_SFM_H_
#define DSMIN_SFM_H_

#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

struct GreedyVertex {
  // Extreme point of the base polytope of f - f({}).
  std::vector<double> y;
  // Elements sorted by ascending weight (ties by index).
  std::vector<int> order;
  // f on the chain prefixes of order; prefix_values[0] = f({}).
  std::vector<double> prefix_values;
};

// Linear minimization of <weights, y> over the base polytope (Edmonds'
// greedy). Costs n + 1 evaluations.
GreedyVertex GreedyBaseVertex(const SetFunction& f, std::span<const double> weights);

struct SfmOptions {
  // Coordinates with |x_j| <= tol are treated as ambiguous; the duality gap
  // target is n * tol.
  double tol = 1e-10;
  // 0 means 10 * n^2.
  int max_major_cycles = 0;
  // Cross-check against exhaustive search when n <= 20.
  bool verify_brute_force = false;
};

struct SfmResult {
  ElementSet set;
  double value = 0.0;
  // Final min-norm iterate (empty on the modular bypass).
  std::vector<double> x;
  // ||x||^2 after each major cycle.
  std::vector<double> norm_history;
  int major_cycles = 0;
  int minor_cycles = 0;
  // f(set) - (f({}) + sum_j min(x_j, 0)).
  double gap = 0.0;
};

// Global minimizer of a submodular f. f need not be normalized. The result
// is always a local minimum w.r.t. single-element additions and removals.
// Throws ConvergenceError (with the best set so far) when the major-cycle cap
// is reached, and PreconditionError if brute-force verification disagrees
// (which means f is not submodular).
SfmResult MinimizeSubmodular(const SetFunction& f, const SfmOptions& options = {});

}  // namespace dsmin

#endif  // DSMIN_SFM_H_
