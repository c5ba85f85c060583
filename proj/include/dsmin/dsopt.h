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

// Minimization of DS functions v = f - g by semigradient descent:
// SubSup (exact SFM of f minus a subgradient of g), SupSub (maximization of
// g minus an upper bound of f) and ModMod (modular bounds on both sides).

#ifndef DSMIN_DSOPT_H_
#define DSMIN_DSOPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsmin/bounds.h"
#include "dsmin/random.h"
#include "dsmin/set_function.h"
#include "dsmin/sfm.h"
#include "json.hpp"

namespace dsmin {

enum class Algorithm { kSubSup, kSupSub, kModMod };
enum class PermutationStrategy { kRandom, kGGains, kVGains, kFGains };
enum class UpperBoundPolicy { kBound1, kBound2, kBothParallel, kAlternate };
enum class Certificate { kLocalMin, kIterationCap, kEpsilonStall };

struct OptimizerOptions {
  // Steps must reach v - epsilon * |v|; 0 is plain descent.
  double epsilon = 0.0;
  int max_iterations = 100;
  PermutationStrategy strategy = PermutationStrategy::kVGains;
  UpperBoundPolicy bound_policy = UpperBoundPolicy::kBothParallel;
  uint64_t seed = 0;
  std::optional<ElementSet> start;
  // Boundary permutations tried when a step stalls; -1 means all n.
  int max_stall_retries = -1;
  SfmOptions sfm;
};

struct Iterate {
  ElementSet set;
  double value = 0.0;
  // Time and cumulative oracle calls when the iterate was accepted.
  double wall_ms = 0.0;
  int64_t calls_f = 0;
  int64_t calls_g = 0;
};

// Cost of one main step (excluding stall retries).
struct StepStats {
  double wall_ms = 0.0;
  int64_t calls_f = 0;
  int64_t calls_g = 0;
};

struct OptimizationTrace {
  std::string algorithm;
  std::vector<Iterate> iterates;
  std::vector<StepStats> steps;
  int64_t oracle_calls_f = 0;
  int64_t oracle_calls_g = 0;
  bool converged = false;
  Certificate certificate = Certificate::kIterationCap;
  int stall_retries = 0;
  // Steps taken to an improving neighbor after all retries failed; only
  // possible through floating-point rounding in the bounds.
  int neighbor_moves = 0;

  const ElementSet& final_set() const { return iterates.back().set; }
  double final_value() const { return iterates.back().value; }
  int accepted_iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

// sigma whose chain contains X. Random shuffles X and V\X; the gain
// strategies sort X by the gain of removing j (from X - j) and V\X by the
// gain of adding j (to X): GGains by g-gains descending, VGains by v-gains
// ascending, FGains by f-gains ascending. Ties by index.
Permutation PermutationHeuristic(const SetFunction& f, const SetFunction& g,
                                 const ElementSet& x, PermutationStrategy strategy,
                                 Rng& rng);
Permutation PermutationHeuristic(const DSFunction& ds, const ElementSet& x,
                                 PermutationStrategy strategy, uint64_t seed);

// Moves element j to the boundary of X's chain in sigma: position |X| when
// j is outside X, position |X| - 1 when inside.
Permutation BoundaryPermutation(const Permutation& sigma, const ElementSet& x, int j);

OptimizationTrace SubSup(const DSFunction& ds, const OptimizerOptions& options = {});
OptimizationTrace SupSub(const DSFunction& ds, const OptimizerOptions& options = {});
OptimizationTrace ModMod(const DSFunction& ds, const OptimizerOptions& options = {});
OptimizationTrace Minimize(const DSFunction& ds, Algorithm algorithm,
                           const OptimizerOptions& options = {});

// {j : w_j < 0}; zero weights are left out.
ElementSet ModularArgmin(const ModularFunction& m);

// No single addition or removal lowers v below v(X) - 1e-9. 2n + 2 calls.
bool CertifyLocalMin(const DSFunction& ds, const ElementSet& x);

// ceil(log(|M| / |m|) / log(1 + epsilon)): further accepted steps possible
// after a first iterate of value m < 0, given a lower bound M on min v.
// Returns 1 when m >= 0 and 0 when |M| <= |m|.
int IterationBound(double lower_bound, double first_value, double epsilon);
// Same with M taken from LowerBound2(ds).
int IterationBound(const DSFunction& ds, double first_value, double epsilon);

nlohmann::json TraceToJson(const OptimizationTrace& trace, bool include_timing = true);

std::string ToString(Algorithm a);
std::string ToString(PermutationStrategy s);
std::string ToString(UpperBoundPolicy p);
std::string ToString(Certificate c);
// Case-insensitive; throws ArgumentError on unknown names.
Algorithm ParseAlgorithm(const std::string& name);
PermutationStrategy ParseStrategy(const std::string& name);
UpperBoundPolicy ParseBoundPolicy(const std::string& name);

}  // namespace dsmin

#endif  // DSMIN_DSOPT_H_
