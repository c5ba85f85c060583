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

#include <vector>

#include "dsmin/brute_force.h"
#include "dsmin/random.h"
#include "dsmin/random_instances.h"
#include "dsmin/submax.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::F3;
using ::dsmin::testing::G1;
using ::dsmin::testing::Set2;

TEST(DoubleGreedyTest, Examples) {
  Solution s = DoubleGreedy(*G1(), /*randomized=*/false);
  EXPECT_EQ(s.set, Set2({0, 1}));
  EXPECT_EQ(s.value, 1.5);
  s = DoubleGreedy(ModularOracle(ModularFunction::Zero(3)), false);
  EXPECT_EQ(s.set, ElementSet::Full(3));
  EXPECT_EQ(s.value, 0.0);
  s = DoubleGreedy(ModularOracle(ModularFunction({3.0, -1.0})), false);
  EXPECT_EQ(s.set, Set2({0}));
  EXPECT_EQ(s.value, 3.0);
}

TEST(LocalSearchMaxTest, Examples) {
  Solution s = LocalSearchMax(*G1(), Set2({}));
  EXPECT_EQ(s.set, Set2({0, 1}));
  EXPECT_EQ(s.value, 1.5);
  s = LocalSearchMax(*F3(), Set2({}));
  EXPECT_EQ(s.set, Set2({1}));
  EXPECT_EQ(s.value, 1.0);
  s = LocalSearchMax(*G1(), Set2({0, 1}));
  EXPECT_EQ(s.set, Set2({0, 1}));
}

TEST(MaximizeSubmodularTest, Examples) {
  Solution s = MaximizeSubmodular(*G1());
  EXPECT_EQ(s.set, Set2({0, 1}));
  EXPECT_EQ(s.value, 1.5);
  EXPECT_EQ(MaximizeSubmodular(ModularOracle(ModularFunction::Zero(4))).value, 0.0);
}

TEST(DoubleGreedyTest, CallBudgetAndDeterminism) {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 10;
    auto f = RandomNonnegativeSubmodular(n, trial);
    for (bool randomized : {false, true}) {
      f->ResetCalls();
      const Solution a = DoubleGreedy(*f, randomized, 99);
      EXPECT_LE(f->calls(), 4 * n + 2);
      EXPECT_EQ(a.set, DoubleGreedy(*f, randomized, 99).set);
    }
  }
}

TEST(MaximizeSubmodularTest, ThirdOfOptimum) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 11;
    auto f = RandomNonnegativeSubmodular(n, DeriveSeed(8, trial));
    const double opt = BruteForceMaximize(*f).value;
    EXPECT_GE(DoubleGreedy(*f, false).value, opt / 3 - 1e-9);
    const Solution best = MaximizeSubmodular(*f, {.seed = static_cast<uint64_t>(trial)});
    EXPECT_GE(best.value, opt / 3 - 1e-9);
    EXPECT_NEAR(best.value, f->Evaluate(best.set), 1e-12);
  }
}

TEST(MaximizeSubmodularTest, RandomizedMeanNearHalf) {
  for (int trial = 0; trial < 10; ++trial) {
    auto f = RandomNonnegativeSubmodular(8, DeriveSeed(9, trial));
    const double opt = BruteForceMaximize(*f).value;
    double total = 0.0;
    for (uint64_t seed = 0; seed < 500; ++seed) total += DoubleGreedy(*f, true, seed).value;
    EXPECT_GE(total / 500, 0.45 * opt);
  }
}

}  // namespace
}  // namespace dsmin
