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

// Set-function oracles over a ground set V = {0, ..., n-1}.
//
// A SetFunction is immutable after construction apart from its evaluation
// counter (atomic) and an optional memo cache (mutex-guarded), so a single
// oracle may be evaluated from several threads at once.

#ifndef DSMIN_SET_FUNCTION_H_
#define DSMIN_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsmin/element_set.h"

namespace dsmin {

// m(X) = offset + sum_{j in X} weights[j].
class ModularFunction {
 public:
  ModularFunction() = default;
  explicit ModularFunction(std::vector<double> weights, double offset = 0.0);
  static ModularFunction Zero(int n) {
    return ModularFunction(std::vector<double>(n, 0.0));
  }

  int n() const { return static_cast<int>(weights_.size()); }
  double weight(int j) const { return weights_.at(j); }
  std::span<const double> weights() const { return weights_; }
  double offset() const { return offset_; }

  double operator()(const ElementSet& x) const;

  ModularFunction& operator+=(const ModularFunction& other);
  ModularFunction& operator-=(const ModularFunction& other);
  ModularFunction& operator*=(double c);
  friend ModularFunction operator+(ModularFunction a, const ModularFunction& b) {
    return a += b;
  }
  friend ModularFunction operator-(ModularFunction a, const ModularFunction& b) {
    return a -= b;
  }
  friend ModularFunction operator*(double c, ModularFunction a) { return a *= c; }

  // Restricts the weights to `keep`, zeroing the rest; the offset is kept.
  ModularFunction Restricted(const ElementSet& keep) const;

  friend bool operator==(const ModularFunction&, const ModularFunction&) = default;

 private:
  std::vector<double> weights_;
  double offset_ = 0.0;
};

class SetFunction {
 public:
  explicit SetFunction(int n);
  virtual ~SetFunction() = default;
  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  int n() const { return n_; }

  // Throws DomainError if x is not over this function's ground set.
  double Evaluate(const ElementSet& x) const;
  double operator()(const ElementSet& x) const { return Evaluate(x); }

  // Values on the chain {} c {o[0]} c {o[0],o[1]} c ...; returns
  // order.size() + 1 values and counts that many evaluations. Elements of
  // `order` must be distinct.
  std::vector<double> EvaluateChain(std::span<const int> order) const;

  // f(x + j) - f(x); zero (and no evaluation) when j is already in x.
  double Gain(int j, const ElementSet& x) const;

  // Number of oracle calls so far (cache hits are not counted).
  int64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void ResetCalls() const { calls_.store(0, std::memory_order_relaxed); }

  // Memoization of Evaluate; off by default.
  void set_caching(bool enabled) const;
  bool caching() const { return caching_.load(); }

  // Declared modular structure, if any. Algorithms use it to bypass
  // general-purpose routines; it is never inferred from values.
  virtual std::optional<ModularFunction> AsModular() const { return std::nullopt; }

 protected:
  virtual double DoEvaluate(const ElementSet& x) const = 0;
  // Default: one DoEvaluate per prefix. Overridden by oracles that can
  // update incrementally along a chain.
  virtual void DoEvaluateChain(std::span<const int> order,
                               std::span<double> out) const;

 private:
  int n_;
  mutable std::atomic<int64_t> calls_{0};
  mutable std::atomic<bool> caching_{false};
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<ElementSet, double, ElementSetHash> cache_;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

class ModularOracle final : public SetFunction {
 public:
  explicit ModularOracle(ModularFunction m);
  std::optional<ModularFunction> AsModular() const override { return m_; }
  const ModularFunction& modular() const { return m_; }

 protected:
  double DoEvaluate(const ElementSet& x) const override { return m_(x); }

 private:
  ModularFunction m_;
};

class LambdaFunction final : public SetFunction {
 public:
  LambdaFunction(int n, std::function<double(const ElementSet&)> fn)
      : SetFunction(n), fn_(std::move(fn)) {}

 protected:
  double DoEvaluate(const ElementSet& x) const override { return fn_(x); }

 private:
  std::function<double(const ElementSet&)> fn_;
};

// Exhaustive value table indexed by bitmask (element 0 = least significant
// bit). Limited to n <= 30.
class TableFunction final : public SetFunction {
 public:
  TableFunction(int n, std::vector<double> values);
  std::span<const double> values() const { return values_; }

 protected:
  double DoEvaluate(const ElementSet& x) const override;

 private:
  std::vector<double> values_;
};

// sum_i c_i * f_i(X) + m(X). Chain evaluation is delegated to the terms, so
// incremental oracles stay incremental under composition.
class LinearCombination final : public SetFunction {
 public:
  LinearCombination(int n, std::vector<std::pair<double, SetFunctionPtr>> terms,
                    std::optional<ModularFunction> modular = std::nullopt);
  std::optional<ModularFunction> AsModular() const override;

 protected:
  double DoEvaluate(const ElementSet& x) const override;
  void DoEvaluateChain(std::span<const int> order,
                       std::span<double> out) const override;

 private:
  std::vector<std::pair<double, SetFunctionPtr>> terms_;
  std::optional<ModularFunction> modular_;
};

SetFunctionPtr MakeModular(ModularFunction m);
// f + m
SetFunctionPtr Plus(SetFunctionPtr f, ModularFunction m);
// c * f
SetFunctionPtr Scaled(double c, SetFunctionPtr f);
// f - g
SetFunctionPtr Minus(SetFunctionPtr f, SetFunctionPtr g);
// f + g
SetFunctionPtr Sum(SetFunctionPtr f, SetFunctionPtr g);

// Forwards to an inner oracle while keeping a private call counter, so a
// single optimizer run can report its own oracle usage even when the
// underlying oracle is shared.
class CountingView final : public SetFunction {
 public:
  explicit CountingView(SetFunctionPtr inner);
  std::optional<ModularFunction> AsModular() const override {
    return inner_->AsModular();
  }

 protected:
  double DoEvaluate(const ElementSet& x) const override;
  void DoEvaluateChain(std::span<const int> order,
                       std::span<double> out) const override;

 private:
  SetFunctionPtr inner_;
};

// A set together with the objective value attained there.
struct Solution {
  ElementSet set;
  double value = 0.0;
};

// v(X) = f(X) - g(X) with f, g submodular.
struct DSFunction {
  SetFunctionPtr f;
  SetFunctionPtr g;

  DSFunction() = default;
  DSFunction(SetFunctionPtr f_in, SetFunctionPtr g_in);

  int n() const { return f->n(); }
  double Evaluate(const ElementSet& x) const {
    return f->Evaluate(x) - g->Evaluate(x);
  }
  double operator()(const ElementSet& x) const { return Evaluate(x); }
  SetFunctionPtr AsOracle() const { return Minus(f, g); }
};

}  // namespace dsmin

#endif  // DSMIN_SET_FUNCTION_H_
