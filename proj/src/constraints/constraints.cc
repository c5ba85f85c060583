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

#include "dsmin/constraints.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "dsmin/descent_engine.h"
#include "dsmin/errors.h"

namespace dsmin {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int64_t kMaxKnapsackCells = 200'000'000;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Element indices sorted by weight, ties by index.
std::vector<int> SortedByWeight(const ModularFunction& m, const std::vector<int>& items) {
  std::vector<int> order = items;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.weight(a) < m.weight(b); });
  return order;
}

std::vector<int> AllElements(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

ElementSet SolveCardinality(const ModularFunction& m, int k, bool exact) {
  ElementSet x(m.n());
  int taken = 0;
  for (int j : SortedByWeight(m, AllElements(m.n()))) {
    if (taken == k) break;
    if (!exact && m.weight(j) >= 0.0) break;
    x.insert(j);
    ++taken;
  }
  return x;
}

ElementSet SolvePartition(const ModularFunction& m, const PartitionMatroid& c) {
  std::vector<std::vector<int>> parts(c.caps.size());
  for (int j = 0; j < m.n(); ++j) parts[c.part_of[j]].push_back(j);
  ElementSet x(m.n());
  for (size_t p = 0; p < parts.size(); ++p) {
    int taken = 0;
    for (int j : SortedByWeight(m, parts[p])) {
      if (taken == c.caps[p]) break;
      if (!c.basis && m.weight(j) >= 0.0) break;
      x.insert(j);
      ++taken;
    }
  }
  return x;
}

ElementSet SolveSpanningTree(const ModularFunction& m, const SpanningTree& c) {
  DisjointSets components(c.num_vertices);
  ElementSet x(m.n());
  for (int e : SortedByWeight(m, AllElements(m.n()))) {
    if (components.Union(c.edges[e].first, c.edges[e].second)) x.insert(e);
  }
  if (x.size() != c.num_vertices - 1) throw InfeasibleError("graph is not connected");
  return x;
}

ElementSet SolveKnapsack(const ModularFunction& m, const Knapsack& c) {
  const int n = m.n();
  std::vector<int> items;
  int64_t total_cost = 0;
  for (int j = 0; j < n; ++j) {
    if (m.weight(j) < 0.0) {
      items.push_back(j);
      total_cost += c.costs[j];
    }
  }
  const int64_t cap = std::min(c.budget, total_cost);
  ElementSet x(n);
  if (items.empty()) return x;
  if (static_cast<int64_t>(items.size()) * (cap + 1) > kMaxKnapsackCells) {
    throw ArgumentError(fmt::format(
        "knapsack table {} x {} too large; lower the cost resolution", items.size(),
        cap + 1));
  }
  // best[b]: largest total |weight| with cost <= b; take[i][b] for backtracking.
  std::vector<double> best(cap + 1, 0.0);
  std::vector<std::vector<char>> take(items.size(), std::vector<char>(cap + 1, 0));
  for (size_t i = 0; i < items.size(); ++i) {
    const int64_t cost = c.costs[items[i]];
    const double gain = -m.weight(items[i]);
    for (int64_t b = cap; b >= cost; --b) {
      const double with = best[b - cost] + gain;
      if (with > best[b]) {
        best[b] = with;
        take[i][b] = 1;
      }
    }
  }
  int64_t b = cap;
  for (size_t i = items.size(); i-- > 0;) {
    if (take[i][b]) {
      x.insert(items[i]);
      b -= c.costs[items[i]];
    }
  }
  return x;
}

}  // namespace

Knapsack KnapsackFromReal(const std::vector<double>& costs, double budget,
                          double resolution) {
  if (!(resolution > 0.0)) throw ArgumentError("resolution must be > 0");
  Knapsack k;
  for (double c : costs) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ArgumentError("costs must be finite and >= 0");
    k.costs.push_back(std::llround(c * resolution));
  }
  if (!std::isfinite(budget)) throw ArgumentError("budget must be finite");
  k.budget = std::llround(std::floor(budget * resolution + 1e-9));
  return k;
}

SpanningTree ParseEdgeList(const std::string& text) {
  SpanningTree tree{0, {}};
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    int u;
    int v;
    if (!(fields >> u)) continue;
    std::string extra;
    if (!(fields >> v) || (fields >> extra) || u < 0 || v < 0) {
      throw ParseError("expected 'u v' with nonnegative vertex ids", line_no);
    }
    tree.edges.emplace_back(u, v);
    tree.num_vertices = std::max({tree.num_vertices, u + 1, v + 1});
  }
  return tree;
}

SpanningTree LoadEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

void ValidateConstraint(const Constraint& c, int n) {
  std::visit(
      Overloaded{
          [n](const CardinalityEq& k) {
            if (k.k < 0) throw ArgumentError("cardinality must be >= 0");
            if (k.k > n) throw InfeasibleError(fmt::format("k={} > n={}", k.k, n));
          },
          [](const CardinalityAtMost& k) {
            if (k.k < 0) throw ArgumentError("cardinality must be >= 0");
          },
          [n](const PartitionMatroid& p) {
            if (static_cast<int>(p.part_of.size()) != n) {
              throw ArgumentError("part_of must list a part for every element");
            }
            std::vector<int> sizes(p.caps.size(), 0);
            for (int part : p.part_of) {
              if (part < 0 || part >= static_cast<int>(p.caps.size())) {
                throw ArgumentError(fmt::format("part id {} out of range", part));
              }
              ++sizes[part];
            }
            for (size_t i = 0; i < p.caps.size(); ++i) {
              if (p.caps[i] < 0) throw ArgumentError("caps must be >= 0");
              if (p.caps[i] > sizes[i]) {
                throw InfeasibleError(fmt::format("cap {} exceeds size {} of part {}",
                                                  p.caps[i], sizes[i], i));
              }
            }
          },
          [n](const SpanningTree& t) {
            if (static_cast<int>(t.edges.size()) != n) {
              throw ArgumentError(fmt::format("graph has {} edges but n={}", t.edges.size(), n));
            }
            if (t.num_vertices < 1) throw ArgumentError("graph needs a vertex");
            DisjointSets components(t.num_vertices);
            int merged = 0;
            for (const auto& [u, v] : t.edges) {
              if (u < 0 || v < 0 || u >= t.num_vertices || v >= t.num_vertices) {
                throw ArgumentError(fmt::format("edge ({}, {}) out of range", u, v));
              }
              if (components.Union(u, v)) ++merged;
            }
            if (merged != t.num_vertices - 1) throw InfeasibleError("graph is not connected");
          },
          [n](const Knapsack& k) {
            if (static_cast<int>(k.costs.size()) != n) {
              throw ArgumentError("knapsack needs one cost per element");
            }
            for (int64_t cost : k.costs) {
              if (cost < 0) throw ArgumentError("knapsack costs must be >= 0");
            }
            if (k.budget < 0) throw InfeasibleError("negative knapsack budget");
          },
      },
      c);
}

bool IsFeasible(const Constraint& c, const ElementSet& x) {
  return std::visit(
      Overloaded{
          [&](const CardinalityEq& k) { return x.size() == k.k; },
          [&](const CardinalityAtMost& k) { return x.size() <= k.k; },
          [&](const PartitionMatroid& p) {
            std::vector<int> used(p.caps.size(), 0);
            x.ForEach([&](int j) { ++used[p.part_of[j]]; });
            for (size_t i = 0; i < used.size(); ++i) {
              if (p.basis ? used[i] != p.caps[i] : used[i] > p.caps[i]) return false;
            }
            return true;
          },
          [&](const SpanningTree& t) {
            if (x.size() != t.num_vertices - 1) return false;
            DisjointSets components(t.num_vertices);
            bool acyclic = true;
            x.ForEach([&](int e) {
              if (!components.Union(t.edges[e].first, t.edges[e].second)) acyclic = false;
            });
            return acyclic;
          },
          [&](const Knapsack& k) {
            int64_t total = 0;
            x.ForEach([&](int j) { total += k.costs[j]; });
            return total <= k.budget;
          },
      },
      c);
}

ElementSet MinModularConstrained(const ModularFunction& m, const Constraint& c) {
  ValidateConstraint(c, m.n());
  return std::visit(
      Overloaded{
          [&](const CardinalityEq& k) { return SolveCardinality(m, k.k, true); },
          [&](const CardinalityAtMost& k) { return SolveCardinality(m, k.k, false); },
          [&](const PartitionMatroid& p) { return SolvePartition(m, p); },
          [&](const SpanningTree& t) { return SolveSpanningTree(m, t); },
          [&](const Knapsack& k) { return SolveKnapsack(m, k); },
      },
      c);
}

OptimizationTrace ConstrainedModMod(const DSFunction& ds, const Constraint& c,
                                    const OptimizerOptions& options) {
  const int n = ds.n();
  ValidateConstraint(c, n);
  OptimizerOptions opts = options;
  if (!opts.start) opts.start = MinModularConstrained(ModularFunction::Zero(n), c);
  if (!IsFeasible(c, *opts.start)) {
    throw InfeasibleError(fmt::format("start set {} violates the {} constraint",
                                      opts.start->ToString(), ConstraintName(c)));
  }
  DescentProcedure proc;
  proc.name = "ModMod";
  proc.feasible = [&c](const ElementSet& x) { return IsFeasible(c, x); };
  proc.step = [&c](const StepContext& ctx) {
    const ModularFunction mf = ctx.bound == 2 ? UpperBound2(*ctx.f, ctx.x, ctx.fx)
                                              : UpperBound1(*ctx.f, ctx.x, ctx.fx);
    const ModularFunction hg = Subgradient(*ctx.g, ctx.x, *ctx.sigma);
    return MinModularConstrained(mf - hg, c);
  };
  return RunDescent(ds, opts, proc);
}

std::string ConstraintName(const Constraint& c) {
  return std::visit(Overloaded{
                        [](const CardinalityEq& k) { return fmt::format("card=={}", k.k); },
                        [](const CardinalityAtMost& k) { return fmt::format("card<={}", k.k); },
                        [](const PartitionMatroid&) { return std::string("partition"); },
                        [](const SpanningTree&) { return std::string("spanning-tree"); },
                        [](const Knapsack& k) { return fmt::format("knapsack<={}", k.budget); },
                    },
                    c);
}

}  // namespace dsmin
