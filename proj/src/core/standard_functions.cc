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

#include "dsmin/standard_functions.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "dsmin/errors.h"
#include "dsmin/fixture.h"
#include "dsmin/random.h"

namespace dsmin {

namespace {

void RequireFiniteNonnegative(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw ArgumentError(fmt::format("{} must be finite and >= 0, got {}", what, w));
  }
}

template <typename T>
T Param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key)) {
    throw ArgumentError(fmt::format("missing parameter '{}'", key));
  }
  try {
    return params.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(fmt::format("parameter '{}': {}", key, e.what()));
  }
}

template <typename T>
T ParamOr(const nlohmann::json& params, const char* key, T fallback) {
  return params.contains(key) ? Param<T>(params, key) : fallback;
}

int RowCount(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ArgumentError("similarity matrix has no rows");
  return static_cast<int>(rows.size());
}

}  // namespace

CutFunction::CutFunction(int n, std::vector<WeightedEdge> edges, bool directed)
    : SetFunction(n), edges_(std::move(edges)), directed_(directed) {
  for (const WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ArgumentError(fmt::format("edge ({}, {}) outside n={}", e.u, e.v, n));
    }
    RequireFiniteNonnegative(e.weight, "edge weight");
  }
}

double CutFunction::DoEvaluate(const ElementSet& x) const {
  double total = 0.0;
  for (const WeightedEdge& e : edges_) {
    const bool in_u = x.contains(e.u);
    const bool in_v = x.contains(e.v);
    if (directed_ ? (in_u && !in_v) : (in_u != in_v)) total += e.weight;
  }
  return total;
}

ConcaveOfModular::ConcaveOfModular(std::vector<double> weights, ConcaveKind kind,
                                   double threshold)
    : SetFunction(static_cast<int>(weights.size())),
      weights_(std::move(weights)),
      kind_(kind),
      threshold_(threshold) {
  for (double w : weights_) RequireFiniteNonnegative(w, "concave-of-modular weight");
  if (kind_ == ConcaveKind::kMin) RequireFiniteNonnegative(threshold_, "tau");
}

double ConcaveOfModular::Phi(double t) const {
  switch (kind_) {
    case ConcaveKind::kSqrt:
      return std::sqrt(t);
    case ConcaveKind::kLog1p:
      return std::log1p(t);
    case ConcaveKind::kMin:
      return std::min(t, threshold_);
  }
  return 0.0;
}

double ConcaveOfModular::DoEvaluate(const ElementSet& x) const {
  double t = 0.0;
  x.ForEach([&](int j) { t += weights_[j]; });
  return Phi(t);
}

void ConcaveOfModular::DoEvaluateChain(std::span<const int> order,
                                       std::span<double> out) const {
  double t = 0.0;
  out[0] = Phi(0.0);
  for (size_t i = 0; i < order.size(); ++i) {
    t += weights_[order[i]];
    out[i + 1] = Phi(t);
  }
}

FacilityLocation::FacilityLocation(std::vector<std::vector<double>> similarity)
    : SetFunction(RowCount(similarity)), similarity_(std::move(similarity)) {
  const size_t cols = similarity_[0].size();
  for (const auto& row : similarity_) {
    if (row.size() != cols) throw ArgumentError("ragged similarity matrix");
    for (double s : row) RequireFiniteNonnegative(s, "similarity");
  }
}

double FacilityLocation::DoEvaluate(const ElementSet& x) const {
  if (x.empty()) return 0.0;
  const size_t cols = similarity_[0].size();
  std::vector<double> best(cols, 0.0);
  x.ForEach([&](int i) {
    for (size_t c = 0; c < cols; ++c) best[c] = std::max(best[c], similarity_[i][c]);
  });
  double total = 0.0;
  for (double b : best) total += b;
  return total;
}

CoverageFunction::CoverageFunction(std::vector<std::vector<int>> covers,
                                   std::vector<double> item_weights)
    : SetFunction(static_cast<int>(covers.size())),
      covers_(std::move(covers)),
      item_weights_(std::move(item_weights)) {
  for (double w : item_weights_) RequireFiniteNonnegative(w, "item weight");
  for (const auto& items : covers_) {
    for (int item : items) {
      if (item < 0 || item >= static_cast<int>(item_weights_.size())) {
        throw ArgumentError(fmt::format("covered item {} out of range", item));
      }
    }
  }
}

double CoverageFunction::DoEvaluate(const ElementSet& x) const {
  std::vector<char> covered(item_weights_.size(), 0);
  x.ForEach([&](int j) {
    for (int item : covers_[j]) covered[item] = 1;
  });
  double total = 0.0;
  for (size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += item_weights_[i];
  }
  return total;
}

ConcaveKind ParseConcaveKind(const std::string& name) {
  if (name == "sqrt") return ConcaveKind::kSqrt;
  if (name == "log1p" || name == "log") return ConcaveKind::kLog1p;
  if (name == "min") return ConcaveKind::kMin;
  throw ArgumentError(fmt::format("unknown concave function '{}'", name));
}

SetFunctionPtr MakeStandard(const std::string& kind, const nlohmann::json& params) {
  if (!params.is_object()) throw ArgumentError("parameters must be a JSON object");
  if (kind == "cut") {
    const int n = Param<int>(params, "n");
    std::vector<WeightedEdge> edges;
    for (const auto& e : Param<std::vector<std::vector<double>>>(params, "edges")) {
      if (e.size() != 2 && e.size() != 3) {
        throw ArgumentError("edges must be [u, v] or [u, v, w]");
      }
      edges.push_back({static_cast<int>(e[0]), static_cast<int>(e[1]),
                       e.size() == 3 ? e[2] : 1.0});
    }
    return std::make_shared<CutFunction>(n, std::move(edges),
                                         ParamOr<bool>(params, "directed", false));
  }
  if (kind == "concave_modular") {
    return std::make_shared<ConcaveOfModular>(
        Param<std::vector<double>>(params, "weights"),
        ParseConcaveKind(ParamOr<std::string>(params, "concave", "sqrt")),
        ParamOr<double>(params, "tau", 1.0));
  }
  if (kind == "concave_cardinality") {
    const int n = Param<int>(params, "n");
    if (n < 1) throw ArgumentError("n must be >= 1");
    return std::make_shared<ConcaveOfModular>(
        std::vector<double>(n, 1.0),
        ParseConcaveKind(ParamOr<std::string>(params, "concave", "sqrt")),
        ParamOr<double>(params, "tau", 1.0));
  }
  if (kind == "facility_location") {
    return std::make_shared<FacilityLocation>(
        Param<std::vector<std::vector<double>>>(params, "similarity"));
  }
  if (kind == "coverage") {
    auto covers = Param<std::vector<std::vector<int>>>(params, "covers");
    int items = 0;
    for (const auto& c : covers) {
      for (int item : c) items = std::max(items, item + 1);
    }
    auto weights = ParamOr<std::vector<double>>(params, "item_weights",
                                                std::vector<double>(items, 1.0));
    return std::make_shared<CoverageFunction>(std::move(covers), std::move(weights));
  }
  if (kind == "random_coverage") {
    const int n = Param<int>(params, "n");
    const int items = ParamOr<int>(params, "items", 2 * n);
    const double density = ParamOr<double>(params, "density", 0.3);
    if (n < 1 || items < 1 || density < 0.0 || density > 1.0) {
      throw ArgumentError("random_coverage needs n, items >= 1 and density in [0, 1]");
    }
    Rng rng(ParamOr<uint64_t>(params, "seed", 0));
    std::vector<std::vector<int>> covers(n);
    for (auto& c : covers) {
      for (int item = 0; item < items; ++item) {
        if (rng.Bernoulli(density)) c.push_back(item);
      }
    }
    std::vector<double> weights(items);
    for (double& w : weights) w = rng.Uniform(0.5, 1.5);
    return std::make_shared<CoverageFunction>(std::move(covers), std::move(weights));
  }
  if (kind == "modular") {
    return MakeModular(ModularFunction(Param<std::vector<double>>(params, "weights"),
                                       ParamOr<double>(params, "offset", 0.0)));
  }
  if (kind == "table") {
    return ParseTable(params);
  }
  throw ArgumentError(fmt::format("unknown function kind '{}'", kind));
}

}  // namespace dsmin
