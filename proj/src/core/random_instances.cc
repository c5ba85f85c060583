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

#include "dsmin/random_instances.h"

#include "dsmin/random.h"
#include "dsmin/standard_functions.h"

namespace dsmin {

namespace {

double Draw(Rng& rng, bool dyadic, double lo, double hi) {
  if (!dyadic) return rng.Uniform(lo, hi);
  const auto k_lo = static_cast<int64_t>(lo * 8);
  const auto k_hi = static_cast<int64_t>(hi * 8);
  return static_cast<double>(rng.UniformInt(k_lo, k_hi)) / 8.0;
}

}  // namespace

SetFunctionPtr RandomSubmodular(int n, uint64_t seed,
                                const RandomInstanceOptions& options) {
  Rng rng(seed);
  const bool dyadic = options.dyadic;
  std::vector<std::pair<double, SetFunctionPtr>> terms;

  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(0.4)) edges.push_back({u, v, Draw(rng, dyadic, 0.0, 1.0)});
    }
  }
  terms.emplace_back(1.0, std::make_shared<CutFunction>(n, std::move(edges)));

  std::vector<double> weights(n);
  for (double& w : weights) w = Draw(rng, dyadic, 0.0, 2.0);
  ConcaveKind kind = ConcaveKind::kMin;
  if (!dyadic) {
    kind = static_cast<ConcaveKind>(rng.UniformInt(0, 2));
  }
  const double tau = Draw(rng, dyadic, 0.5, 4.0);
  terms.emplace_back(1.0, std::make_shared<ConcaveOfModular>(std::move(weights), kind, tau));

  const int items = 2 * n;
  std::vector<std::vector<int>> covers(n);
  for (auto& c : covers) {
    for (int item = 0; item < items; ++item) {
      if (rng.Bernoulli(0.25)) c.push_back(item);
    }
  }
  std::vector<double> item_weights(items);
  for (double& w : item_weights) w = Draw(rng, dyadic, 0.0, 0.5);
  terms.emplace_back(1.0, std::make_shared<CoverageFunction>(std::move(covers),
                                                            std::move(item_weights)));

  std::optional<ModularFunction> shift;
  if (options.modular_shift) {
    std::vector<double> m(n);
    for (double& w : m) w = Draw(rng, dyadic, -2.0, 1.0);
    shift = ModularFunction(std::move(m));
  }
  return std::make_shared<LinearCombination>(n, std::move(terms), std::move(shift));
}

SetFunctionPtr RandomNonnegativeSubmodular(int n, uint64_t seed, bool dyadic) {
  return RandomSubmodular(n, seed, {.dyadic = dyadic, .modular_shift = false});
}

DSFunction RandomDS(int n, uint64_t seed, bool dyadic) {
  return DSFunction(
      RandomSubmodular(n, DeriveSeed(seed, 0), {.dyadic = dyadic, .modular_shift = true}),
      RandomSubmodular(n, DeriveSeed(seed, 1), {.dyadic = dyadic, .modular_shift = false}));
}

}  // namespace dsmin
