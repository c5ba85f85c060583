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

#ifndef DSMIN_RANDOM_H_
#define DSMIN_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace dsmin {

// Seeded generator with portable derived distributions. The standard
// <random> distributions are implementation-defined, which would make
// seeded results differ across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform in [lo, hi], unbiased (rejection sampling).
  int64_t UniformInt(int64_t lo, int64_t hi) {
    const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(engine_());
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % range);
    uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<int64_t>(r % range);
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t k = static_cast<size_t>(UniformInt(0, static_cast<int64_t>(i) - 1));
      std::swap(items[i - 1], items[k]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Mixes a base seed with a stream index so that sub-tasks get independent,
// reproducible generators.
inline uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace dsmin

#endif  // DSMIN_RANDOM_H_
