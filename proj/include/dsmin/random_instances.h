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

// Seeded generators of random submodular and DS instances for property
// tests: sums of a random cut, a concave-of-modular term, a weighted
// coverage function and (optionally) a signed modular shift.

#ifndef DSMIN_RANDOM_INSTANCES_H_
#define DSMIN_RANDOM_INSTANCES_H_

#include <cstdint>

#include "dsmin/set_function.h"

namespace dsmin {

struct RandomInstanceOptions {
  // Restrict every parameter to multiples of 1/8 and use only the min(., tau)
  // concave function, so all values are exactly representable sums of
  // dyadic rationals and identities can be asserted bitwise.
  bool dyadic = false;
  // Add a modular term with weights in [-2, 1]; makes the function signed.
  bool modular_shift = true;
};

SetFunctionPtr RandomSubmodular(int n, uint64_t seed,
                                const RandomInstanceOptions& options = {});

// Nonnegative (no modular shift), generally non-monotone because of the cut.
SetFunctionPtr RandomNonnegativeSubmodular(int n, uint64_t seed, bool dyadic = false);

// f with a modular shift, g without; both from independent seed streams.
DSFunction RandomDS(int n, uint64_t seed, bool dyadic = false);

}  // namespace dsmin

#endif  // DSMIN_RANDOM_INSTANCES_H_
