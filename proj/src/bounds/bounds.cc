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

#include "dsmin/bounds.h"

#include <cmath>

#include <fmt/format.h>

#include "dsmin/brute_force.h"
#include "dsmin/errors.h"

namespace dsmin {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  std::vector<char> seen(n, 0);
  for (int j : order_) {
    if (j < 0 || j >= n || seen[j]) {
      throw ArgumentError(
          fmt::format("not a permutation of 0..{}: bad entry {}", n - 1, j));
    }
    seen[j] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return Permutation(std::move(order));
}

ElementSet Permutation::Prefix(int i) const {
  if (i < 0 || i > n()) {
    throw ArgumentError(fmt::format("prefix length {} out of range", i));
  }
  ElementSet s(n());
  for (int k = 0; k < i; ++k) s.insert(order_[k]);
  return s;
}

bool Permutation::ChainContains(const ElementSet& y) const {
  if (y.universe_size() != n()) return false;
  const int k = y.size();
  for (int i = 0; i < k; ++i) {
    if (!y.contains(order_[i])) return false;
  }
  return true;
}

Permutation ChainPermutation(const ElementSet& y, std::span<const int> inner_order,
                             std::span<const int> outer_order) {
  const int n = y.universe_size();
  if (static_cast<int>(inner_order.size()) != y.size() ||
      static_cast<int>(inner_order.size() + outer_order.size()) != n) {
    throw ArgumentError("inner/outer orders do not partition the ground set");
  }
  std::vector<int> order;
  order.reserve(n);
  for (int j : inner_order) {
    if (j < 0 || j >= n || !y.contains(j)) {
      throw ArgumentError(fmt::format("inner order element {} not in Y", j));
    }
    order.push_back(j);
  }
  for (int j : outer_order) {
    if (j < 0 || j >= n || y.contains(j)) {
      throw ArgumentError(fmt::format("outer order element {} is in Y", j));
    }
    order.push_back(j);
  }
  return Permutation(std::move(order));
}

ModularFunction Subgradient(const SetFunction& f, const ElementSet& y,
                            const Permutation& sigma) {
  if (sigma.n() != f.n()) throw DomainError("permutation over a different ground set");
  if (!sigma.ChainContains(y)) {
    throw ArgumentError(
        fmt::format("chain of sigma does not contain {}", y.ToString()));
  }
  const std::vector<double> values = f.EvaluateChain(sigma.order());
  std::vector<double> w(f.n());
  for (int i = 0; i < f.n(); ++i) w[sigma[i]] = values[i + 1] - values[i];
  return ModularFunction(std::move(w), values[0]);
}

ModularFunction UpperBound1(const SetFunction& f, const ElementSet& x,
                            std::optional<double> fx) {
  const int n = f.n();
  const double f_x = fx ? *fx : f.Evaluate(x);
  const double f_empty = f.Evaluate(ElementSet(n));
  std::vector<double> w(n);
  double offset = f_x;
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      w[j] = f_x - f.Evaluate(x.Without(j));
      offset -= w[j];
    } else {
      w[j] = f.Evaluate(ElementSet::FromIndices(n, {j})) - f_empty;
    }
  }
  return ModularFunction(std::move(w), offset);
}

ModularFunction UpperBound2(const SetFunction& f, const ElementSet& x,
                            std::optional<double> fx) {
  const int n = f.n();
  const double f_x = fx ? *fx : f.Evaluate(x);
  const ElementSet full = ElementSet::Full(n);
  const double f_full = f.Evaluate(full);
  std::vector<double> w(n);
  double offset = f_x;
  for (int j = 0; j < n; ++j) {
    if (x.contains(j)) {
      w[j] = f_full - f.Evaluate(full.Without(j));
      offset -= w[j];
    } else {
      w[j] = f.Evaluate(x.With(j)) - f_x;
    }
  }
  return ModularFunction(std::move(w), offset);
}

bool IsBasePoint(const SetFunction& f, std::span<const double> y, double tol) {
  if (static_cast<int>(y.size()) != f.n()) throw DomainError("vector size mismatch");
  const std::vector<double> table = Tabulate(f);
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    double sum = 0.0;
    for (int j = 0; j < f.n(); ++j) {
      if ((mask >> j) & 1) sum += y[j];
    }
    if (sum > table[mask] + tol) return false;
    if (mask == table.size() - 1 && std::abs(sum - table[mask]) > tol) return false;
  }
  return true;
}

}  // namespace dsmin
