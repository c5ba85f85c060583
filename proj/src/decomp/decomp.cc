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

#include "dsmin/decomp.h"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dsmin/brute_force.h"
#include "dsmin/errors.h"

namespace dsmin {

namespace {

constexpr int kMaxAlphaN = 12;

ModularFunction LastGains(const SetFunction& f) {
  const int n = f.n();
  const ElementSet full = ElementSet::Full(n);
  const double f_full = f.Evaluate(full);
  std::vector<double> k(n);
  for (int j = 0; j < n; ++j) k[j] = f_full - f.Evaluate(full.Without(j));
  return ModularFunction(std::move(k));
}

SetFunctionPtr CardinalityProfile(int n, std::vector<double> phi, double scale) {
  return std::make_shared<LambdaFunction>(
      n, [phi = std::move(phi), scale](const ElementSet& x) { return scale * phi[x.size()]; });
}

DSFunction FromProfile(const SetFunctionPtr& v, double alpha, std::vector<double> phi,
                       double beta) {
  const int n = v->n();
  const SetFunctionPtr g = CardinalityProfile(n, std::move(phi), std::abs(alpha) / beta);
  DSFunction out(Sum(v, g), g);
  if (n <= kMaxAlphaN && !VerifySubmodular(*out.f)) {
    throw PreconditionError(fmt::format(
        "alpha_lower {} exceeds the true alpha: v + g is not submodular", alpha));
  }
  return out;
}

}  // namespace

TotallyNormalizedSplit TotallyNormalize(const SetFunctionPtr& f) {
  ModularFunction k = LastGains(*f);
  return {Plus(f, -1.0 * k), std::move(k)};
}

DSFunction MonotoneDS(const DSFunction& ds) {
  const int n = ds.n();
  const ModularFunction kf = LastGains(*ds.f);
  const ModularFunction kg = LastGains(*ds.g);
  std::vector<double> f_shift(n);
  std::vector<double> g_shift(n);
  for (int j = 0; j < n; ++j) {
    const double k = kf.weight(j) - kg.weight(j);
    // f_mono = f - kf + k on V+, g_mono = g - kg - k on V-.
    f_shift[j] = k >= 0.0 ? -kf.weight(j) + k : -kf.weight(j);
    g_shift[j] = k >= 0.0 ? -kg.weight(j) : -kg.weight(j) - k;
  }
  return DSFunction(Plus(ds.f, ModularFunction(std::move(f_shift))),
                    Plus(ds.g, ModularFunction(std::move(g_shift))));
}

double BetaSqrt(int n) {
  if (n < 3) throw DomainError(fmt::format("beta for sqrt(|X|) needs n >= 3, got {}", n));
  return 2.0 * std::sqrt(n - 1.0) - std::sqrt(static_cast<double>(n)) -
         std::sqrt(n - 2.0);
}

double BetaFromProfile(const std::vector<double>& phi) {
  const int n = static_cast<int>(phi.size()) - 1;
  if (n < 2) throw DomainError("profile needs n >= 2");
  double beta = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      beta = std::min(beta, (phi[a + 1] - phi[a]) - (phi[b + 1] - phi[b]));
    }
  }
  return beta;
}

double BruteForceAlpha(const SetFunction& v) {
  const int n = v.n();
  if (n > kMaxAlphaN) {
    throw SizeError(fmt::format("exhaustive alpha refused for n={} > {}", n, kMaxAlphaN));
  }
  if (n < 2) return std::numeric_limits<double>::infinity();
  const std::vector<double> t = Tabulate(v);
  double alpha = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const uint64_t bj = uint64_t{1} << j;
    const uint64_t rest = ((uint64_t{1} << n) - 1) & ~bj;
    // Enumerate Y within V - j, then X strictly inside Y.
    for (uint64_t y = rest;; y = (y - 1) & rest) {
      const double gain_y = t[y | bj] - t[y];
      if (y != 0) {
        for (uint64_t x = (y - 1) & y;; x = (x - 1) & y) {
          alpha = std::min(alpha, (t[x | bj] - t[x]) - gain_y);
          if (x == 0) break;
        }
      }
      if (y == 0) break;
    }
  }
  return alpha;
}

DSFunction DsFromAlpha(const SetFunctionPtr& v, double alpha_lower,
                       const std::vector<double>& phi) {
  const int n = v->n();
  if (static_cast<int>(phi.size()) != n + 1) {
    throw ArgumentError("profile must have n + 1 values");
  }
  if (alpha_lower >= 0.0) return DSFunction(v, MakeModular(ModularFunction::Zero(n)));
  const double beta = BetaFromProfile(phi);
  if (!(beta > 0.0)) throw ArgumentError("profile is not strictly concave");
  return FromProfile(v, alpha_lower, phi, beta);
}

DSFunction DsFromAlpha(const SetFunctionPtr& v, double alpha_lower) {
  const int n = v->n();
  if (alpha_lower >= 0.0) return DSFunction(v, MakeModular(ModularFunction::Zero(n)));
  std::vector<double> phi(n + 1);
  for (int i = 0; i <= n; ++i) phi[i] = std::sqrt(static_cast<double>(i));
  return FromProfile(v, alpha_lower, std::move(phi), BetaSqrt(n));
}

double LowerBound1(const DSFunction& ds, const SfmOptions& options) {
  const ModularFunction kg = LastGains(*ds.g);
  const double g_full = ds.g->Evaluate(ElementSet::Full(ds.n()));
  // f' + k = f - k_g.
  const SfmResult inner = MinimizeSubmodular(*Plus(ds.f, -1.0 * kg), options);
  return inner.value - (g_full - kg(ElementSet::Full(ds.n())));
}

double LowerBound2(const DSFunction& ds) {
  const int n = ds.n();
  const ModularFunction kf = LastGains(*ds.f);
  const ModularFunction kg = LastGains(*ds.g);
  const ElementSet full = ElementSet::Full(n);
  double bound = ds.f->Evaluate(ElementSet(n)) -
                 (ds.g->Evaluate(full) - kg(full));
  for (int j = 0; j < n; ++j) bound += std::min(kf.weight(j) - kg.weight(j), 0.0);
  return bound;
}

}  // namespace dsmin
