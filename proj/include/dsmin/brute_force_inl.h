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

#ifndef DSMIN_BRUTE_FORCE_INL_H_
#define DSMIN_BRUTE_FORCE_INL_H_

#include <cstdint>
#include <limits>

#include "dsmin/errors.h"

namespace dsmin {

template <typename Pred>
Solution BruteForceMinimizeIf(int n, const std::vector<double>& table,
                              Pred&& feasible) {
  if (table.size() != (size_t{1} << n)) throw ArgumentError("table size mismatch");
  double best = std::numeric_limits<double>::infinity();
  uint64_t best_mask = 0;
  bool found = false;
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    if (!feasible(mask)) continue;
    if (!found || table[mask] < best) {
      best = table[mask];
      best_mask = mask;
      found = true;
    }
  }
  if (!found) throw InfeasibleError("no feasible subset");
  return {ElementSet::FromMask(n, best_mask), best};
}

}  // namespace dsmin

#endif  // DSMIN_BRUTE_FORCE_INL_H_
