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

#include <cmath>
#include <memory>
#include <vector>

#include "dsmin/brute_force.h"
#include "dsmin/element_set.h"
#include "dsmin/errors.h"
#include "dsmin/fixture.h"
#include "dsmin/random.h"
#include "dsmin/random_instances.h"
#include "dsmin/set_function.h"
#include "dsmin/standard_functions.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::F1;
using ::dsmin::testing::F3;
using ::dsmin::testing::G1;
using ::dsmin::testing::Set2;
using ::dsmin::testing::V1;
using json = nlohmann::json;

TEST(ElementSetTest, BasicOperations) {
  ElementSet x = ElementSet::FromIndices(70, {0, 4, 69});
  EXPECT_EQ(x.size(), 3);
  EXPECT_TRUE(x.contains(69));
  EXPECT_FALSE(x.contains(1));
  EXPECT_EQ(x.ToString(), "{0,4,69}");
  EXPECT_EQ(x.Without(69).ToHex(), "11");
  EXPECT_EQ(ElementSet(5).ToHex(), "0");
  EXPECT_EQ(x.Complement().size(), 67);
  EXPECT_THROW(x.insert(70), DomainError);
  EXPECT_THROW(x | ElementSet(3), DomainError);
  EXPECT_LT(ElementSet::FromMask(3, 0b011), ElementSet::FromMask(3, 0b100));
}

TEST(EvaluateTest, FixtureAndModular) {
  EXPECT_EQ(F1()->Evaluate(Set2({0})), 2.0);
  EXPECT_EQ(F1()->Evaluate(Set2({})), 0.0);
  ModularOracle m(ModularFunction({1.0, -2.0}));
  EXPECT_EQ(m.Evaluate(Set2({0, 1})), -1.0);
  EXPECT_THROW(m.Evaluate(ElementSet(3)), DomainError);
}

TEST(GainTest, Examples) {
  EXPECT_EQ(F1()->Gain(1, Set2({0})), 0.5);
  EXPECT_EQ(F1()->Gain(0, Set2({0})), 0.0);
  ModularOracle m(ModularFunction({1.0, -2.0}));
  EXPECT_EQ(m.Gain(1, Set2({})), -2.0);
}

TEST(VerifySubmodularTest, Examples) {
  EXPECT_TRUE(VerifySubmodular(*F1()));
  LambdaFunction square(3, [](const ElementSet& x) {
    return static_cast<double>(x.size() * x.size());
  });
  EXPECT_FALSE(VerifySubmodular(square));
  EXPECT_TRUE(VerifySubmodular(ModularOracle(ModularFunction({3.0, -1.0, 0.5}))));
  ModularOracle big(ModularFunction(std::vector<double>(21, 1.0)));
  EXPECT_THROW(VerifySubmodular(big), SizeError);
}

TEST(MakeStandardTest, Examples) {
  auto sqrt_card =
      MakeStandard("concave_cardinality", json{{"n", 4}, {"concave", "sqrt"}});
  EXPECT_NEAR(sqrt_card->Evaluate(ElementSet::FromIndices(4, {1, 2})), 1.41421356, 1e-8);
  auto cut = MakeStandard("cut", json{{"n", 2}, {"edges", {{0, 1, 3.0}}}});
  EXPECT_EQ(cut->Evaluate(Set2({0})), 3.0);
  auto fl = MakeStandard("facility_location",
                         json{{"similarity", {{1.0, 0.0}, {0.0, 1.0}}}});
  EXPECT_EQ(fl->Evaluate(Set2({1})), 1.0);
  EXPECT_THROW(MakeStandard("nonsense", json::object()), ArgumentError);
  EXPECT_THROW(MakeStandard("cut", json{{"n", 2}, {"edges", {{0, 1, -1.0}}}}),
               ArgumentError);
}

TEST(MakeStandardTest, RandomParametersAreSubmodularAndNormalized) {
  Rng rng(11);
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 2 + seed % 9;
    std::vector<SetFunctionPtr> fns;
    std::vector<std::vector<double>> edges;
    for (int e = 0; e < n; ++e) {
      edges.push_back({static_cast<double>(rng.UniformInt(0, n - 1)),
                       static_cast<double>(rng.UniformInt(0, n - 1)), rng.Uniform(0, 2)});
    }
    fns.push_back(MakeStandard("cut", json{{"n", n}, {"edges", edges}}));
    fns.push_back(MakeStandard("cut", json{{"n", n}, {"edges", edges}, {"directed", true}}));
    std::vector<double> w(n);
    for (double& x : w) x = rng.Uniform(0, 3);
    fns.push_back(MakeStandard("concave_modular", json{{"weights", w}, {"concave", "log1p"}}));
    fns.push_back(MakeStandard("concave_modular",
                               json{{"weights", w}, {"concave", "min"}, {"tau", 2.0}}));
    std::vector<std::vector<double>> sim(n, std::vector<double>(3));
    for (auto& row : sim) {
      for (double& x : row) x = rng.Uniform(0, 1);
    }
    fns.push_back(MakeStandard("facility_location", json{{"similarity", sim}}));
    fns.push_back(MakeStandard(
        "random_coverage",
        json{{"n", n}, {"items", 6}, {"density", 0.4}, {"seed", seed}}));
    for (const auto& f : fns) {
      EXPECT_EQ(f->Evaluate(ElementSet(n)), 0.0);
      EXPECT_TRUE(VerifySubmodular(*f)) << "seed " << seed;
    }
  }
}

TEST(BruteForceTest, Examples) {
  Solution s = BruteForceMinimize(V1());
  EXPECT_EQ(s.set, Set2({}));
  EXPECT_EQ(s.value, 0.0);
  s = BruteForceMinimize(ModularOracle(ModularFunction({-1.0, 2.0})));
  EXPECT_EQ(s.set, Set2({0}));
  EXPECT_EQ(s.value, -1.0);
  s = BruteForceMinimize(*F3());
  EXPECT_EQ(s.set, Set2({0}));
  EXPECT_EQ(s.value, -1.0);
  s = BruteForceMaximize(*G1());
  EXPECT_EQ(s.set, Set2({0, 1}));
}

TEST(BruteForceTest, TiesGoToSmallestMask) {
  ModularOracle zero(ModularFunction::Zero(3));
  EXPECT_EQ(BruteForceMinimize(zero).set, ElementSet(3));
}

TEST(ModularTest, ExactLatticeIdentity) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 12;
    std::vector<double> w(n);
    // Dyadic weights keep every partial sum exact.
    for (double& x : w) x = rng.UniformInt(-80, 80) / 8.0;
    ModularFunction m(w, rng.UniformInt(-8, 8) / 8.0);
    const ElementSet x = ElementSet::FromMask(n, rng.UniformInt(0, 4095));
    const ElementSet y = ElementSet::FromMask(n, rng.UniformInt(0, 4095));
    EXPECT_EQ(m(x | y) + m(x & y), m(x) + m(y));
  }
}

TEST(CounterTest, CountsDistinctEvaluations) {
  auto f = F1();
  f->ResetCalls();
  for (uint64_t mask = 0; mask < 4; ++mask) f->Evaluate(ElementSet::FromMask(2, mask));
  EXPECT_EQ(f->calls(), 4);
  f->Evaluate(Set2({0}));
  EXPECT_EQ(f->calls(), 5);
}

TEST(CounterTest, CacheHitsAreNotCounted) {
  auto f = F1();
  f->set_caching(true);
  f->ResetCalls();
  f->Evaluate(Set2({0}));
  f->Evaluate(Set2({0}));
  f->Evaluate(Set2({1}));
  EXPECT_EQ(f->calls(), 2);
}

TEST(CounterTest, ChainCountsEveryPrefix) {
  auto f = RandomSubmodular(6, 3);
  f->ResetCalls();
  const std::vector<int> order = {3, 1, 5};
  const std::vector<double> vals = f->EvaluateChain(order);
  ASSERT_EQ(vals.size(), 4u);
  EXPECT_EQ(f->calls(), 4);
  EXPECT_NEAR(vals[3], f->Evaluate(ElementSet::FromIndices(6, {1, 3, 5})), 1e-12);
}

TEST(CountingViewTest, KeepsPrivateCount) {
  auto inner = F1();
  CountingView view(inner);
  view.Evaluate(Set2({0}));
  view.Evaluate(Set2({1}));
  EXPECT_EQ(view.calls(), 2);
  EXPECT_EQ(view.Evaluate(Set2({0, 1})), 2.5);
}

TEST(CompositionTest, MinusAndPlus) {
  auto v = Minus(F1(), G1());
  EXPECT_EQ(v->Evaluate(Set2({0})), 1.0);
  auto p = Plus(F1(), ModularFunction({-1.0, 1.0}));
  EXPECT_EQ(p->Evaluate(Set2({0, 1})), 2.5);
  EXPECT_EQ(Scaled(2.0, G1())->Evaluate(Set2({0, 1})), 3.0);
  EXPECT_TRUE(MakeModular(ModularFunction({1.0}))->AsModular().has_value());
}

TEST(RandomInstancesTest, NormalizedSubmodularAndReproducible) {
  for (int seed = 0; seed < 100; ++seed) {
    const int n = 3 + seed % 8;
    auto f = RandomSubmodular(n, seed, {.dyadic = seed % 2 == 0});
    EXPECT_EQ(f->Evaluate(ElementSet(n)), 0.0);
    EXPECT_TRUE(VerifySubmodular(*f));
    EXPECT_EQ(Tabulate(*f), Tabulate(*RandomSubmodular(n, seed, {.dyadic = seed % 2 == 0})));
  }
}

TEST(FixtureTest, TableRoundTrip) {
  auto f = LoadFunction(testing::DataPath("fixtures/f1.json"));
  EXPECT_EQ(Tabulate(*f), (std::vector<double>{0.0, 2.0, 1.0, 2.5}));
  EXPECT_EQ(BitString(Set2({0})), "01");
  auto back = FunctionFromJson(TableToJson(*f));
  EXPECT_EQ(Tabulate(*back), Tabulate(*f));
  EXPECT_THROW(LoadFunction("/nonexistent/file.json"), ParseError);
  EXPECT_THROW(FunctionFromJson(json{{"n", 2}, {"values", {{"00", 0}}}}), ArgumentError);
}

}  // namespace
}  // namespace dsmin
