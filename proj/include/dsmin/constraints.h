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

// Exact minimization of modular functions under combinatorial constraints,
// and ModMod restricted to a constraint family.

#ifndef DSMIN_CONSTRAINTS_H_
#define DSMIN_CONSTRAINTS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dsmin/dsopt.h"
#include "dsmin/set_function.h"

namespace dsmin {

struct CardinalityEq {
  int k;
};

struct CardinalityAtMost {
  int k;
};

// part_of[j] is the part of element j; caps[p] bounds |X & part p|. With
// basis = true exactly caps[p] elements are taken from every part.
struct PartitionMatroid {
  std::vector<int> part_of;
  std::vector<int> caps;
  bool basis = false;
};

// Elements are the edges; X must form a spanning tree.
struct SpanningTree {
  int num_vertices;
  std::vector<std::pair<int, int>> edges;
};

// sum of costs over X <= budget.
struct Knapsack {
  std::vector<int64_t> costs;
  int64_t budget;
};

using Constraint =
    std::variant<CardinalityEq, CardinalityAtMost, PartitionMatroid, SpanningTree, Knapsack>;

// Real costs and budget scaled by resolution and rounded to integers.
Knapsack KnapsackFromReal(const std::vector<double>& costs, double budget,
                          double resolution = 1e3);

// Parses "u v" per line (blank lines and '#' comments skipped); element i is
// the i-th edge. Vertices are 0-based; the vertex count is max index + 1.
SpanningTree ParseEdgeList(const std::string& text);
SpanningTree LoadEdgeList(const std::string& path);

// Throws ArgumentError if the constraint is malformed for a ground set of
// size n, InfeasibleError if no set satisfies it.
void ValidateConstraint(const Constraint& c, int n);

bool IsFeasible(const Constraint& c, const ElementSet& x);

// Exact minimizer of m over the feasible sets. Ties prefer lower indices.
ElementSet MinModularConstrained(const ModularFunction& m, const Constraint& c);

// ModMod whose modular step is solved under c. The start (default: the
// constrained minimizer of the zero function) must be feasible, otherwise
// InfeasibleError. Every iterate is feasible.
OptimizationTrace ConstrainedModMod(const DSFunction& ds, const Constraint& c,
                                    const OptimizerOptions& options = {});

std::string ConstraintName(const Constraint& c);

}  // namespace dsmin

#endif  // DSMIN_CONSTRAINTS_H_
