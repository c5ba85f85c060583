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

// Unconstrained maximization of (nonnegative) submodular functions.

#ifndef DSMIN_SUBMAX_H_
#define DSMIN_SUBMAX_H_

#include <cstdint>
#include <optional>

#include "dsmin/set_function.h"

namespace dsmin {

// Bi-directional greedy over elements in index order, keeping X within Y.
// Deterministic: include j iff a >= b. Randomized: include j with
// probability a+ / (a+ + b+), or by a >= b when both are nonpositive.
// At most 4n + 2 evaluations.
Solution DoubleGreedy(const SetFunction& f, bool randomized, uint64_t seed = 0);

// Best single add/remove move while it improves f by more than
// min_improvement. Throws ConvergenceError after max_moves (0: 10 n^2).
Solution LocalSearchMax(const SetFunction& f, const ElementSet& start,
                        int max_moves = 0, double min_improvement = 1e-12);

struct MaximizeOptions {
  uint64_t seed = 0;
  // Also run local search from this set (e.g. the current iterate).
  std::optional<ElementSet> warm_start;
};

// Best of deterministic double greedy, randomized double greedy, local
// search from {} and the optional warm start. Ties keep the earlier result.
Solution MaximizeSubmodular(const SetFunction& f, const MaximizeOptions& options = {});

}  // namespace dsmin

#endif  // DSMIN_SUBMAX_H_
