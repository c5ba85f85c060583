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

#include "dsmin/brute_force.h"

#include <fmt/format.h>

#include "dsmin/errors.h"

namespace dsmin {

namespace {

void RequireSmall(int n) {
  if (n > kMaxBruteForceN) {
    throw SizeError(fmt::format("exhaustive routine refused for n={} > {}", n,
                                kMaxBruteForceN));
  }
}

Solution ArgBest(int n, const std::vector<double>& table, bool minimize) {
  uint64_t best = 0;
  for (uint64_t mask = 1; mask < table.size(); ++mask) {
    if (minimize ? table[mask] < table[best] : table[mask] > table[best]) best = mask;
  }
  return {ElementSet::FromMask(n, best), table[best]};
}

}  // namespace

std::vector<double> Tabulate(const SetFunction& f) {
  RequireSmall(f.n());
  std::vector<double> table(size_t{1} << f.n());
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.Evaluate(ElementSet::FromMask(f.n(), mask));
  }
  return table;
}

std::shared_ptr<TableFunction> Tabulated(const SetFunction& f) {
  return std::make_shared<TableFunction>(f.n(), Tabulate(f));
}

bool VerifySubmodular(int n, const std::vector<double>& table, double tol) {
  RequireSmall(n);
  for (uint64_t x = 0; x < table.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      const uint64_t bi = uint64_t{1} << i;
      if (x & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const uint64_t bj = uint64_t{1} << j;
        if (x & bj) continue;
        if (table[x | bi] + table[x | bj] < table[x | bi | bj] + table[x] - tol) {
          return false;
        }
      }
    }
  }
  return true;
}

bool VerifySubmodular(const SetFunction& f, double tol) {
  return VerifySubmodular(f.n(), Tabulate(f), tol);
}

bool VerifyMonotone(int n, const std::vector<double>& table, double tol) {
  RequireSmall(n);
  for (uint64_t x = 0; x < table.size(); ++x) {
    for (int j = 0; j < n; ++j) {
      const uint64_t bj = uint64_t{1} << j;
      if (!(x & bj) && table[x | bj] < table[x] - tol) return false;
    }
  }
  return true;
}

bool VerifyMonotone(const SetFunction& f, double tol) {
  return VerifyMonotone(f.n(), Tabulate(f), tol);
}

Solution BruteForceMinimize(const SetFunction& f) {
  return ArgBest(f.n(), Tabulate(f), true);
}

Solution BruteForceMaximize(const SetFunction& f) {
  return ArgBest(f.n(), Tabulate(f), false);
}

Solution BruteForceMinimize(const DSFunction& v) {
  RequireSmall(v.n());
  const std::vector<double> f = Tabulate(*v.f);
  const std::vector<double> g = Tabulate(*v.g);
  std::vector<double> table(f.size());
  for (size_t i = 0; i < f.size(); ++i) table[i] = f[i] - g[i];
  return ArgBest(v.n(), table, true);
}

}  // namespace dsmin
