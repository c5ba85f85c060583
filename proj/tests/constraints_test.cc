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

#include <algorithm>
#include <bit>
#include <vector>

#include "dsmin/brute_force.h"
#include "dsmin/constraints.h"
#include "dsmin/errors.h"
#include "dsmin/random.h"
#include "dsmin/random_instances.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::Set2;
using ::dsmin::testing::V1;

ElementSet Set3(std::initializer_list<int> elems) {
  return ElementSet::FromIndices(3, elems);
}

TEST(MinModularConstrainedTest, Examples) {
  const ModularFunction m({3.0, 1.0, 2.0});
  EXPECT_EQ(MinModularConstrained(m, CardinalityEq{2}), Set3({1, 2}));
  const SpanningTree triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_EQ(MinModularConstrained(ModularFunction({1.0, 2.0, 3.0}), triangle), Set3({0, 1}));
  const ModularFunction neg({-5.0, -4.0, -3.0});
  const ElementSet x = MinModularConstrained(neg, Knapsack{{4, 3, 2}, 5});
  EXPECT_EQ(x, Set3({1, 2}));
  EXPECT_EQ(neg(x), -7.0);
}

TEST(MinModularConstrainedTest, OtherKinds) {
  const ModularFunction m({-1.0, 2.0, -3.0, -0.5});
  EXPECT_EQ(MinModularConstrained(m, CardinalityAtMost{1}), ElementSet::FromIndices(4, {2}));
  EXPECT_EQ(MinModularConstrained(m, CardinalityAtMost{4}),
            ElementSet::FromIndices(4, {0, 2, 3}));
  PartitionMatroid pm{{0, 0, 1, 1}, {1, 1}, false};
  EXPECT_EQ(MinModularConstrained(m, pm), ElementSet::FromIndices(4, {0, 2}));
  pm.caps = {1, 2};
  pm.basis = true;
  EXPECT_EQ(MinModularConstrained(ModularFunction({1.0, 2.0, 3.0, 4.0}), pm),
            ElementSet::FromIndices(4, {0, 2, 3}));
}

TEST(MinModularConstrainedTest, Errors) {
  const ModularFunction m({1.0, 2.0});
  EXPECT_THROW(MinModularConstrained(m, CardinalityEq{3}), InfeasibleError);
  EXPECT_THROW(MinModularConstrained(m, SpanningTree{4, {{0, 1}, {2, 3}}}), InfeasibleError);
  EXPECT_THROW(MinModularConstrained(m, PartitionMatroid{{0, 0}, {3}, true}),
               InfeasibleError);
  EXPECT_THROW(MinModularConstrained(m, Knapsack{{1, -1}, 3}), ArgumentError);
}

TEST(KnapsackTest, FromRealScalesAndRounds) {
  const Knapsack k = KnapsackFromReal({0.5, 1.2345}, 2.0, 100);
  EXPECT_EQ(k.costs, (std::vector<int64_t>{50, 123}));
  EXPECT_EQ(k.budget, 200);
}

TEST(EdgeListTest, Parses) {
  const SpanningTree t = ParseEdgeList("# triangle\n0 1\n\n1 2\n0 2\n");
  EXPECT_EQ(t.num_vertices, 3);
  EXPECT_EQ(t.edges.size(), 3u);
  EXPECT_EQ(t.edges[2], std::make_pair(0, 2));
  EXPECT_THROW(ParseEdgeList("0 x\n"), ParseError);
}

// Independent feasibility predicates, so the solver is not checked against
// its own notion of feasibility.
bool TreeCheck(const SpanningTree& t, uint64_t mask) {
  std::vector<int> comp(t.num_vertices);
  for (int i = 0; i < t.num_vertices; ++i) comp[i] = i;
  int edges = 0;
  for (size_t e = 0; e < t.edges.size(); ++e) {
    if (!(mask >> e & 1)) continue;
    ++edges;
    const int a = comp[t.edges[e].first];
    const int b = comp[t.edges[e].second];
    if (a == b) return false;
    for (int& c : comp) {
      if (c == b) c = a;
    }
  }
  return edges == t.num_vertices - 1;
}

TEST(MinModularConstrainedTest, MatchesBruteForce) {
  for (int trial = 0; trial < 120; ++trial) {
    Rng rng(DeriveSeed(17, trial));
    const int n = 3 + trial % 10;
    std::vector<double> w(n);
    for (double& x : w) x = rng.Uniform(-2, 2);
    const ModularFunction m(w);
    ModularOracle oracle(m);
    const std::vector<double> table = Tabulate(oracle);
    auto check = [&](const Constraint& c, auto&& pred) {
      const ElementSet x = MinModularConstrained(m, c);
      EXPECT_TRUE(pred(x.ToMask())) << ConstraintName(c);
      EXPECT_TRUE(IsFeasible(c, x));
      EXPECT_NEAR(m(x), BruteForceMinimizeIf(n, table, pred).value, 1e-12)
          << ConstraintName(c) << " trial " << trial;
    };
    const int k = static_cast<int>(rng.UniformInt(0, n));
    check(CardinalityEq{k}, [&](uint64_t s) { return std::popcount(s) == k; });
    check(CardinalityAtMost{k}, [&](uint64_t s) { return std::popcount(s) <= k; });
    PartitionMatroid pm;
    pm.caps.assign(3, 0);
    std::vector<int> part_size(3, 0);
    for (int j = 0; j < n; ++j) {
      pm.part_of.push_back(static_cast<int>(rng.UniformInt(0, 2)));
      ++part_size[pm.part_of.back()];
    }
    for (int p = 0; p < 3; ++p) pm.caps[p] = static_cast<int>(rng.UniformInt(0, part_size[p]));
    for (bool basis : {false, true}) {
      pm.basis = basis;
      check(pm, [&](uint64_t s) {
        std::vector<int> cnt(3, 0);
        for (int j = 0; j < n; ++j) cnt[pm.part_of[j]] += s >> j & 1;
        for (int p = 0; p < 3; ++p) {
          if (basis ? cnt[p] != pm.caps[p] : cnt[p] > pm.caps[p]) return false;
        }
        return true;
      });
    }
    Knapsack ks;
    for (int j = 0; j < n; ++j) ks.costs.push_back(rng.UniformInt(0, 6));
    ks.budget = rng.UniformInt(0, 12);
    check(ks, [&](uint64_t s) {
      int64_t total = 0;
      for (int j = 0; j < n; ++j) total += (s >> j & 1) * ks.costs[j];
      return total <= ks.budget;
    });
    // Random connected multigraph: a random spanning path plus extra edges.
    const int verts = 2 + static_cast<int>(rng.UniformInt(0, std::min(n - 1, 4)));
    SpanningTree tree{verts, {}};
    for (int v = 1; v < verts; ++v) tree.edges.emplace_back(static_cast<int>(rng.UniformInt(0, v - 1)), v);
    while (static_cast<int>(tree.edges.size()) < n) {
      tree.edges.emplace_back(static_cast<int>(rng.UniformInt(0, verts - 1)),
                              static_cast<int>(rng.UniformInt(0, verts - 1)));
    }
    check(tree, [&](uint64_t s) { return TreeCheck(tree, s); });
  }
}

TEST(ConstrainedModModTest, FixtureCardinalityOne) {
  OptimizerOptions options;
  options.start = Set2({1});
  const OptimizationTrace t = ConstrainedModMod(V1(), CardinalityEq{1}, options);
  for (const Iterate& it : t.iterates) EXPECT_EQ(it.set.size(), 1);
  EXPECT_EQ(t.final_value(), 0.0);
  EXPECT_EQ(t.final_set(), Set2({1}));
}

TEST(ConstrainedModModTest, VacuousConstraintMatchesModMod) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 8;
    const DSFunction ds = RandomDS(n, DeriveSeed(19, trial));
    const OptimizationTrace a = ConstrainedModMod(ds, CardinalityAtMost{n});
    const OptimizationTrace b = ModMod(ds);
    ASSERT_EQ(a.iterates.size(), b.iterates.size());
    for (size_t i = 0; i < a.iterates.size(); ++i) {
      EXPECT_EQ(a.iterates[i].set, b.iterates[i].set);
      EXPECT_EQ(a.iterates[i].value, b.iterates[i].value);
    }
  }
}

TEST(ConstrainedModModTest, SpanningTreeIteratesStayFeasible) {
  const SpanningTree k4{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}}};
  for (int trial = 0; trial < 40; ++trial) {
    const DSFunction ds = RandomDS(6, DeriveSeed(23, trial));
    const OptimizationTrace t = ConstrainedModMod(ds, k4);
    for (size_t i = 0; i < t.iterates.size(); ++i) {
      EXPECT_TRUE(TreeCheck(k4, t.iterates[i].set.ToMask()));
      if (i > 0) EXPECT_LE(t.iterates[i].value, t.iterates[i - 1].value);
    }
  }
}

TEST(ConstrainedModModTest, InfeasibleStartThrows) {
  OptimizerOptions options;
  options.start = Set2({0, 1});
  EXPECT_THROW(ConstrainedModMod(V1(), CardinalityEq{1}, options), InfeasibleError);
}

}  // namespace
}  // namespace dsmin
