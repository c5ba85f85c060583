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

#include "dsmin/submax.h"

#include <algorithm>

#include <fmt/format.h>

#include "dsmin/errors.h"
#include "dsmin/random.h"

namespace dsmin {

Solution DoubleGreedy(const SetFunction& f, bool randomized, uint64_t seed) {
  const int n = f.n();
  Rng rng(seed);
  ElementSet x(n);
  ElementSet y = ElementSet::Full(n);
  double fx = f.Evaluate(x);
  double fy = f.Evaluate(y);
  for (int j = 0; j < n; ++j) {
    const ElementSet x_plus = x.With(j);
    const ElementSet y_minus = y.Without(j);
    const double f_x_plus = f.Evaluate(x_plus);
    const double f_y_minus = f.Evaluate(y_minus);
    const double a = f_x_plus - fx;
    const double b = f_y_minus - fy;
    bool include;
    if (randomized) {
      const double ap = std::max(a, 0.0);
      const double bp = std::max(b, 0.0);
      include = ap + bp == 0.0 ? a >= b : rng.Uniform() < ap / (ap + bp);
    } else {
      include = a >= b;
    }
    if (include) {
      x = x_plus;
      fx = f_x_plus;
    } else {
      y = y_minus;
      fy = f_y_minus;
    }
  }
  return {x, fx};
}

Solution LocalSearchMax(const SetFunction& f, const ElementSet& start, int max_moves,
                        double min_improvement) {
  const int n = f.n();
  const int cap = max_moves > 0 ? max_moves : 10 * n * n;
  Solution current{start, f.Evaluate(start)};
  for (int move = 0; move < cap; ++move) {
    Solution next = current;
    for (int j = 0; j < n; ++j) {
      const ElementSet moved =
          current.set.contains(j) ? current.set.Without(j) : current.set.With(j);
      const double value = f.Evaluate(moved);
      if (value > next.value) next = {moved, value};
    }
    if (next.value <= current.value + min_improvement) return current;
    current = next;
  }
  throw ConvergenceError(fmt::format("local search exceeded {} moves", cap),
                         current.set, current.value);
}

Solution MaximizeSubmodular(const SetFunction& f, const MaximizeOptions& options) {
  Solution best = DoubleGreedy(f, false);
  auto consider = [&](const Solution& s) {
    if (s.value > best.value) best = s;
  };
  consider(DoubleGreedy(f, true, options.seed));
  consider(LocalSearchMax(f, ElementSet(f.n())));
  if (options.warm_start) consider(LocalSearchMax(f, *options.warm_start));
  return best;
}

}  // namespace dsmin
