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

#include "dsmin/set_function.h"

#include <algorithm>

#include <fmt/format.h>

#include "dsmin/errors.h"

namespace dsmin {

ModularFunction::ModularFunction(std::vector<double> weights, double offset)
    : weights_(std::move(weights)), offset_(offset) {}

double ModularFunction::operator()(const ElementSet& x) const {
  if (x.universe_size() != n()) {
    throw DomainError(fmt::format("modular function over n={} evaluated on n={}",
                                  n(), x.universe_size()));
  }
  double sum = offset_;
  x.ForEach([&](int j) { sum += weights_[j]; });
  return sum;
}

ModularFunction& ModularFunction::operator+=(const ModularFunction& other) {
  if (other.n() != n()) throw DomainError("modular size mismatch");
  for (int j = 0; j < n(); ++j) weights_[j] += other.weights_[j];
  offset_ += other.offset_;
  return *this;
}

ModularFunction& ModularFunction::operator-=(const ModularFunction& other) {
  if (other.n() != n()) throw DomainError("modular size mismatch");
  for (int j = 0; j < n(); ++j) weights_[j] -= other.weights_[j];
  offset_ -= other.offset_;
  return *this;
}

ModularFunction& ModularFunction::operator*=(double c) {
  for (double& w : weights_) w *= c;
  offset_ *= c;
  return *this;
}

ModularFunction ModularFunction::Restricted(const ElementSet& keep) const {
  std::vector<double> w(weights_.size(), 0.0);
  keep.ForEach([&](int j) { w[j] = weights_[j]; });
  return ModularFunction(std::move(w), offset_);
}

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 1) throw DomainError(fmt::format("ground set size must be >= 1, got {}", n));
}

double SetFunction::Evaluate(const ElementSet& x) const {
  if (x.universe_size() != n_) {
    throw DomainError(fmt::format("set over n={} passed to function over n={}",
                                  x.universe_size(), n_));
  }
  if (caching_.load(std::memory_order_relaxed)) {
    {
      std::lock_guard<std::mutex> lock(cache_mu_);
      auto it = cache_.find(x);
      if (it != cache_.end()) return it->second;
    }
    const double value = DoEvaluate(x);
    calls_.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(cache_mu_);
    cache_.emplace(x, value);
    return value;
  }
  calls_.fetch_add(1, std::memory_order_relaxed);
  return DoEvaluate(x);
}

std::vector<double> SetFunction::EvaluateChain(std::span<const int> order) const {
  ElementSet seen(n_);
  for (int j : order) {
    if (seen.contains(j)) {
      throw ArgumentError(fmt::format("element {} repeated in chain order", j));
    }
    seen.insert(j);
  }
  std::vector<double> out(order.size() + 1);
  DoEvaluateChain(order, out);
  calls_.fetch_add(static_cast<int64_t>(out.size()), std::memory_order_relaxed);
  return out;
}

void SetFunction::DoEvaluateChain(std::span<const int> order,
                                  std::span<double> out) const {
  ElementSet prefix(n_);
  out[0] = DoEvaluate(prefix);
  for (size_t i = 0; i < order.size(); ++i) {
    prefix.insert(order[i]);
    out[i + 1] = DoEvaluate(prefix);
  }
}

double SetFunction::Gain(int j, const ElementSet& x) const {
  if (x.contains(j)) return 0.0;
  return Evaluate(x.With(j)) - Evaluate(x);
}

void SetFunction::set_caching(bool enabled) const {
  caching_.store(enabled);
  if (!enabled) {
    std::lock_guard<std::mutex> lock(cache_mu_);
    cache_.clear();
  }
}

ModularOracle::ModularOracle(ModularFunction m) : SetFunction(m.n()), m_(std::move(m)) {}

TableFunction::TableFunction(int n, std::vector<double> values)
    : SetFunction(n), values_(std::move(values)) {
  if (n > 30) throw SizeError("table functions are limited to n <= 30");
  if (values_.size() != (size_t{1} << n)) {
    throw ArgumentError(fmt::format("table for n={} needs {} values, got {}", n,
                                    size_t{1} << n, values_.size()));
  }
}

double TableFunction::DoEvaluate(const ElementSet& x) const {
  return values_[x.ToMask()];
}

LinearCombination::LinearCombination(
    int n, std::vector<std::pair<double, SetFunctionPtr>> terms,
    std::optional<ModularFunction> modular)
    : SetFunction(n), terms_(std::move(terms)), modular_(std::move(modular)) {
  for (const auto& [c, f] : terms_) {
    if (!f || f->n() != n) throw DomainError("term over a different ground set");
  }
  if (modular_ && modular_->n() != n) throw DomainError("modular term size mismatch");
}

std::optional<ModularFunction> LinearCombination::AsModular() const {
  ModularFunction total = modular_ ? *modular_ : ModularFunction::Zero(n());
  for (const auto& [c, f] : terms_) {
    auto m = f->AsModular();
    if (!m) return std::nullopt;
    total += c * *m;
  }
  return total;
}

double LinearCombination::DoEvaluate(const ElementSet& x) const {
  double sum = modular_ ? (*modular_)(x) : 0.0;
  for (const auto& [c, f] : terms_) sum += c * f->Evaluate(x);
  return sum;
}

void LinearCombination::DoEvaluateChain(std::span<const int> order,
                                        std::span<double> out) const {
  if (modular_) {
    out[0] = modular_->offset();
    for (size_t i = 0; i < order.size(); ++i) {
      out[i + 1] = out[i] + modular_->weight(order[i]);
    }
  } else {
    std::fill(out.begin(), out.end(), 0.0);
  }
  for (const auto& [c, f] : terms_) {
    const std::vector<double> values = f->EvaluateChain(order);
    for (size_t i = 0; i < out.size(); ++i) out[i] += c * values[i];
  }
}

SetFunctionPtr MakeModular(ModularFunction m) {
  return std::make_shared<ModularOracle>(std::move(m));
}

SetFunctionPtr Plus(SetFunctionPtr f, ModularFunction m) {
  const int n = f->n();
  return std::make_shared<LinearCombination>(
      n, std::vector<std::pair<double, SetFunctionPtr>>{{1.0, std::move(f)}},
      std::move(m));
}

SetFunctionPtr Scaled(double c, SetFunctionPtr f) {
  const int n = f->n();
  return std::make_shared<LinearCombination>(
      n, std::vector<std::pair<double, SetFunctionPtr>>{{c, std::move(f)}});
}

SetFunctionPtr Minus(SetFunctionPtr f, SetFunctionPtr g) {
  const int n = f->n();
  return std::make_shared<LinearCombination>(
      n, std::vector<std::pair<double, SetFunctionPtr>>{{1.0, std::move(f)},
                                                        {-1.0, std::move(g)}});
}

SetFunctionPtr Sum(SetFunctionPtr f, SetFunctionPtr g) {
  const int n = f->n();
  return std::make_shared<LinearCombination>(
      n, std::vector<std::pair<double, SetFunctionPtr>>{{1.0, std::move(f)},
                                                        {1.0, std::move(g)}});
}

CountingView::CountingView(SetFunctionPtr inner)
    : SetFunction(inner->n()), inner_(std::move(inner)) {}

double CountingView::DoEvaluate(const ElementSet& x) const {
  return inner_->Evaluate(x);
}

void CountingView::DoEvaluateChain(std::span<const int> order,
                                   std::span<double> out) const {
  const std::vector<double> values = inner_->EvaluateChain(order);
  std::copy(values.begin(), values.end(), out.begin());
}

DSFunction::DSFunction(SetFunctionPtr f_in, SetFunctionPtr g_in)
    : f(std::move(f_in)), g(std::move(g_in)) {
  if (!f || !g) throw ArgumentError("DS function needs both f and g");
  if (f->n() != g->n()) {
    throw DomainError(fmt::format("f over n={} but g over n={}", f->n(), g->n()));
  }
}

}  // namespace dsmin
