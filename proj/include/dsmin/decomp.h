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

// Decompositions of set functions into differences of submodular functions,
// and polynomial-time lower bounds on min v for DS functions.

#ifndef DSMIN_DECOMP_H_
#define DSMIN_DECOMP_H_

#include <vector>

#include "dsmin/set_function.h"
#include "dsmin/sfm.h"

namespace dsmin {

// f = fprime + k with k(j) = f(j | V - j). For submodular normalized f,
// fprime is a totally normalized polymatroid. fprime is evaluated lazily.
struct TotallyNormalizedSplit {
  SetFunctionPtr fprime;
  ModularFunction k;
};

// Costs n + 1 evaluations of f.
TotallyNormalizedSplit TotallyNormalize(const SetFunctionPtr& f);

// An equivalent pair of monotone non-decreasing submodular functions:
// f_mono = f' + k on V+, g_mono = g' - k on V-, with k = k_f - k_g and
// V+ = {j : k(j) >= 0}.
DSFunction MonotoneDS(const DSFunction& ds);

// Smallest gain drop of sqrt(|X|) over nested contexts:
// 2 sqrt(n - 1) - sqrt(n) - sqrt(n - 2). Requires n >= 3 (DomainError).
double BetaSqrt(int n);

// Same quantity for an arbitrary cardinality profile phi(0..n):
// min over 0 <= a < b <= n - 1 of (phi(a+1) - phi(a)) - (phi(b+1) - phi(b)).
double BetaFromProfile(const std::vector<double>& phi);

// Exact alpha = min over j and X strictly inside Y within V - j of
// v(j | X) - v(j | Y). Exponential; n <= 12 (SizeError).
double BruteForceAlpha(const SetFunction& v);

// (f, g) with g = (|a'| / beta) sqrt(|X|), f = v + g, a' = min(alpha_lower, 0).
// Returns (v, 0) when alpha_lower >= 0. alpha_lower must not exceed the true
// alpha of v; on n <= 12 this is checked and a violation throws
// PreconditionError. Requires n >= 3 when alpha_lower < 0.
DSFunction DsFromAlpha(const SetFunctionPtr& v, double alpha_lower);

// Same with g = (|a'| / beta) phi(|X|) for a strictly concave profile
// phi(0..n) with phi(0) = 0.
DSFunction DsFromAlpha(const SetFunctionPtr& v, double alpha_lower,
                       const std::vector<double>& phi);

// min_X f'(X) + k(X) - g'(V), via one submodular minimization. Valid lower
// bound on min v for submodular normalized f and g.
double LowerBound1(const DSFunction& ds, const SfmOptions& options = {});

// f'({}) - g'(V) + sum_j min(k(j), 0). Closed form; never above LowerBound1.
double LowerBound2(const DSFunction& ds);

}  // namespace dsmin

#endif  // DSMIN_DECOMP_H_
