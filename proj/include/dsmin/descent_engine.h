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

// The shared acceptance loop behind every descent procedure. Exposed so
// that variants (e.g. constrained ModMod) can plug in their own step.

#ifndef DSMIN_DESCENT_ENGINE_H_
#define DSMIN_DESCENT_ENGINE_H_

#include <functional>
#include <string>

#include "dsmin/dsopt.h"

namespace dsmin {

struct StepContext {
  // Counting (and memoizing) views of the run's f and g.
  const SetFunctionPtr& f;
  const SetFunctionPtr& g;
  const ElementSet& x;
  double fx;
  double gx;
  // Null for procedures that do not use a permutation.
  const Permutation* sigma;
  // 1 or 2; 0 for procedures that do not use an upper bound of f.
  int bound;
  uint64_t seed;
};

struct DescentProcedure {
  std::string name;
  bool uses_permutation = true;
  bool uses_upper_bound = true;
  // Null when unconstrained. Infeasible neighbors are skipped when a stall
  // is examined; steps themselves must return feasible sets.
  std::function<bool(const ElementSet&)> feasible;
  std::function<ElementSet(const StepContext&)> step;
};

OptimizationTrace RunDescent(const DSFunction& ds, const OptimizerOptions& options,
                             const DescentProcedure& procedure);

}  // namespace dsmin

#endif  // DSMIN_DESCENT_ENGINE_H_
