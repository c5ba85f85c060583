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

// Modular lower bounds (chain subgradients) and the two tight modular upper
// bounds of a submodular function.

#ifndef DSMIN_BOUNDS_H_
#define DSMIN_BOUNDS_H_

#include <optional>
#include <span>
#include <vector>

#include "dsmin/set_function.h"

namespace dsmin {

// An ordering sigma of V. Prefix(i) is the chain set {sigma(0..i-1)}.
class Permutation {
 public:
  Permutation() = default;
  // Throws ArgumentError unless order is a bijection onto {0, ..., n-1}.
  explicit Permutation(std::vector<int> order);
  static Permutation Identity(int n);

  int n() const { return static_cast<int>(order_.size()); }
  int operator[](int i) const { return order_[i]; }
  std::span<const int> order() const { return order_; }
  ElementSet Prefix(int i) const;
  // True iff y equals the prefix of length |y|.
  bool ChainContains(const ElementSet& y) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> order_;
};

// sigma = inner_order followed by outer_order. inner_order must enumerate y
// and outer_order its complement, otherwise ArgumentError.
Permutation ChainPermutation(const ElementSet& y, std::span<const int> inner_order,
                             std::span<const int> outer_order);

// h(sigma(i)) = f(S_i) - f(S_{i-1}) with offset f({}). Exact on every chain
// prefix and a lower bound everywhere when f is submodular. Costs n + 1
// evaluations. Throws ArgumentError if sigma's chain does not contain y.
ModularFunction Subgradient(const SetFunction& f, const ElementSet& y,
                            const Permutation& sigma);

// m(Y) = f(X) - sum_{j in X\Y} f(j | X-j) + sum_{j in Y\X} f(j | {}).
// Tight at X and at every X - j. Costs n + 2 evaluations, or n + 1 when f(X)
// is supplied.
ModularFunction UpperBound1(const SetFunction& f, const ElementSet& x,
                            std::optional<double> fx = std::nullopt);

// m(Y) = f(X) - sum_{j in X\Y} f(j | V-j) + sum_{j in Y\X} f(j | X).
// Tight at X and at every X + j. Same cost as UpperBound1.
ModularFunction UpperBound2(const SetFunction& f, const ElementSet& x,
                            std::optional<double> fx = std::nullopt);

// y(V) = f(V) and y(S) <= f(S) + tol for all S. Exhaustive, n <= 20.
bool IsBasePoint(const SetFunction& f, std::span<const double> y,
                 double tol = 1e-9);

}  // namespace dsmin

#endif  // DSMIN_BOUNDS_H_
