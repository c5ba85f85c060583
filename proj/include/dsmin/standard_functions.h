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

// A small library of classic submodular functions. All of them are
// normalized (f({}) = 0) and reject parameters that would break
// submodularity (negative weights, ...) with ArgumentError.

#ifndef DSMIN_STANDARD_FUNCTIONS_H_
#define DSMIN_STANDARD_FUNCTIONS_H_

#include <string>
#include <vector>

#include "dsmin/set_function.h"
#include "json.hpp"

namespace dsmin {

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

// Undirected: sum of weights of edges with exactly one endpoint in X.
// Directed: sum of weights of edges (u, v) with u in X and v not in X.
class CutFunction final : public SetFunction {
 public:
  CutFunction(int n, std::vector<WeightedEdge> edges, bool directed = false);

 protected:
  double DoEvaluate(const ElementSet& x) const override;

 private:
  std::vector<WeightedEdge> edges_;
  bool directed_;
};

enum class ConcaveKind { kSqrt, kLog1p, kMin };

// phi(m(X)) for a nonnegative modular m and concave phi with phi(0) = 0.
class ConcaveOfModular final : public SetFunction {
 public:
  ConcaveOfModular(std::vector<double> weights, ConcaveKind kind,
                   double threshold = 1.0);

  double Phi(double t) const;

 protected:
  double DoEvaluate(const ElementSet& x) const override;
  void DoEvaluateChain(std::span<const int> order,
                       std::span<double> out) const override;

 private:
  std::vector<double> weights_;
  ConcaveKind kind_;
  double threshold_;
};

// sum over clients c of max_{i in X} similarity[i][c]; 0 on the empty set.
class FacilityLocation final : public SetFunction {
 public:
  explicit FacilityLocation(std::vector<std::vector<double>> similarity);

 protected:
  double DoEvaluate(const ElementSet& x) const override;

 private:
  std::vector<std::vector<double>> similarity_;
};

// Weighted coverage: element j covers items covers[j]; value is the total
// weight of covered items.
class CoverageFunction final : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<int>> covers,
                   std::vector<double> item_weights);

 protected:
  double DoEvaluate(const ElementSet& x) const override;

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
};

// Builds a function from a kind name and JSON parameters:
//   "cut"                {"n", "edges": [[u, v, w], ...], "directed"}
//   "concave_modular"    {"weights", "concave": "sqrt"|"log1p"|"min", "tau"}
//   "concave_cardinality"{"n", "concave", "tau"}
//   "facility_location"  {"similarity": [[...], ...]}
//   "coverage"           {"covers": [[...], ...], "item_weights"}
//   "random_coverage"    {"n", "items", "density", "seed"}
//   "modular"            {"weights", "offset"}
//   "table"              {"n", "values": {bitstring: value}}
// Throws ArgumentError on unknown kinds or invalid parameters.
SetFunctionPtr MakeStandard(const std::string& kind, const nlohmann::json& params);

ConcaveKind ParseConcaveKind(const std::string& name);

}  // namespace dsmin

#endif  // DSMIN_STANDARD_FUNCTIONS_H_
