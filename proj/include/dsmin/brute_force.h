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

// Exhaustive reference routines for small ground sets (n <= 20). They are
// the test oracles for everything else in the library.

#ifndef DSMIN_BRUTE_FORCE_H_
#define DSMIN_BRUTE_FORCE_H_

#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

inline constexpr int kMaxBruteForceN = 20;
inline constexpr double kTolerance = 1e-9;

// Values of f on every subset, indexed by bitmask. Costs 2^n evaluations.
std::vector<double> Tabulate(const SetFunction& f);
// Tabulated copy of f; subsequent evaluations are table lookups.
std::shared_ptr<TableFunction> Tabulated(const SetFunction& f);

// f(X + i) + f(X + j) >= f(X + i + j) + f(X) - tol for all X and i, j not
// in X, which is equivalent to diminishing returns over nested pairs.
bool VerifySubmodular(const SetFunction& f, double tol = kTolerance);
bool VerifySubmodular(int n, const std::vector<double>& table,
                      double tol = kTolerance);

// f(X + j) >= f(X) - tol for all X, j.
bool VerifyMonotone(const SetFunction& f, double tol = kTolerance);
bool VerifyMonotone(int n, const std::vector<double>& table,
                    double tol = kTolerance);

// Exact minimizer / maximizer; ties go to the smallest bitmask.
Solution BruteForceMinimize(const SetFunction& f);
Solution BruteForceMaximize(const SetFunction& f);
Solution BruteForceMinimize(const DSFunction& v);

// Exact optimum restricted to subsets accepted by feasible(mask).
template <typename Pred>
Solution BruteForceMinimizeIf(int n, const std::vector<double>& table,
                              Pred&& feasible);

}  // namespace dsmin

#include "dsmin/brute_force_inl.h"

#endif  // DSMIN_BRUTE_FORCE_H_
