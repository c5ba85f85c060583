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

#include <algorithm>

#include "dsmin/dsopt.h"
#include "dsmin/errors.h"

namespace dsmin {

namespace {

// Gain of removing j from X (j in X) or adding j to X (j not in X).
double BoundaryGain(const SetFunction& h, const ElementSet& x, double hx, int j) {
  return x.contains(j) ? hx - h.Evaluate(x.Without(j)) : h.Evaluate(x.With(j)) - hx;
}

}  // namespace

Permutation PermutationHeuristic(const SetFunction& f, const SetFunction& g,
                                 const ElementSet& x, PermutationStrategy strategy,
                                 Rng& rng) {
  const int n = f.n();
  std::vector<int> inner = x.ToIndices();
  std::vector<int> outer = x.Complement().ToIndices();
  if (strategy == PermutationStrategy::kRandom) {
    rng.Shuffle(std::span<int>(inner));
    rng.Shuffle(std::span<int>(outer));
    return ChainPermutation(x, inner, outer);
  }
  std::vector<double> key(n, 0.0);
  const bool need_f = strategy != PermutationStrategy::kGGains;
  const bool need_g = strategy != PermutationStrategy::kFGains;
  const double fx = need_f ? f.Evaluate(x) : 0.0;
  const double gx = need_g ? g.Evaluate(x) : 0.0;
  for (int j = 0; j < n; ++j) {
    switch (strategy) {
      case PermutationStrategy::kGGains:
        key[j] = -BoundaryGain(g, x, gx, j);
        break;
      case PermutationStrategy::kVGains:
        key[j] = BoundaryGain(f, x, fx, j) - BoundaryGain(g, x, gx, j);
        break;
      case PermutationStrategy::kFGains:
        key[j] = BoundaryGain(f, x, fx, j);
        break;
      case PermutationStrategy::kRandom:
        break;
    }
  }
  auto by_key = [&](int a, int b) { return key[a] < key[b]; };
  std::stable_sort(inner.begin(), inner.end(), by_key);
  std::stable_sort(outer.begin(), outer.end(), by_key);
  return ChainPermutation(x, inner, outer);
}

Permutation PermutationHeuristic(const DSFunction& ds, const ElementSet& x,
                                 PermutationStrategy strategy, uint64_t seed) {
  Rng rng(seed);
  return PermutationHeuristic(*ds.f, *ds.g, x, strategy, rng);
}

Permutation BoundaryPermutation(const Permutation& sigma, const ElementSet& x, int j) {
  if (!sigma.ChainContains(x)) throw ArgumentError("chain of sigma does not contain X");
  std::vector<int> order(sigma.order().begin(), sigma.order().end());
  const auto it = std::find(order.begin(), order.end(), j);
  if (it == order.end()) throw DomainError("element not in permutation");
  order.erase(it);
  const int target = x.contains(j) ? x.size() - 1 : x.size();
  order.insert(order.begin() + target, j);
  return Permutation(std::move(order));
}

}  // namespace dsmin
