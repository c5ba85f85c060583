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
#include <vector>

#include "dsmin/brute_force.h"
#include "dsmin/decomp.h"
#include "dsmin/errors.h"
#include "dsmin/random.h"
#include "dsmin/random_instances.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::F1;
using ::dsmin::testing::G1;
using ::dsmin::testing::V1;

std::vector<double> Diff(const DSFunction& ds) {
  std::vector<double> f = Tabulate(*ds.f);
  const std::vector<double> g = Tabulate(*ds.g);
  for (size_t i = 0; i < f.size(); ++i) f[i] -= g[i];
  return f;
}

SetFunctionPtr Square(int n) {
  return std::make_shared<LambdaFunction>(
      n, [](const ElementSet& x) { return static_cast<double>(x.size() * x.size()); });
}

TEST(TotallyNormalizeTest, Examples) {
  TotallyNormalizedSplit s = TotallyNormalize(F1());
  EXPECT_EQ(s.k, ModularFunction({1.5, 0.5}));
  EXPECT_EQ(Tabulate(*s.fprime), (std::vector<double>{0.0, 0.5, 0.5, 0.5}));
  s = TotallyNormalize(G1());
  EXPECT_EQ(s.k, ModularFunction({0.5, 0.5}));
  EXPECT_EQ(Tabulate(*s.fprime), (std::vector<double>{0.0, 0.5, 0.5, 0.5}));
  ModularFunction m({1.0, -3.0, 0.5});
  s = TotallyNormalize(MakeModular(m));
  EXPECT_EQ(s.k, m);
  EXPECT_EQ(Tabulate(*s.fprime), std::vector<double>(8, 0.0));
}

TEST(TotallyNormalizeTest, PolymatroidOnRandomInstances) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    auto f = RandomSubmodular(n, DeriveSeed(3, trial), {.dyadic = true});
    const TotallyNormalizedSplit s = TotallyNormalize(f);
    const std::vector<double> fp = Tabulate(*s.fprime);
    const std::vector<double> ft = Tabulate(*f);
    for (uint64_t mask = 0; mask < ft.size(); ++mask) {
      EXPECT_EQ(ft[mask], fp[mask] + s.k(ElementSet::FromMask(n, mask)));
    }
    EXPECT_TRUE(VerifyMonotone(n, fp));
    EXPECT_TRUE(VerifySubmodular(n, fp));
    const ElementSet full = ElementSet::Full(n);
    for (int j = 0; j < n; ++j) EXPECT_EQ(s.fprime->Gain(j, full.Without(j)), 0.0);
  }
}

TEST(MonotoneDsTest, Fixture) {
  const DSFunction m = MonotoneDS(V1());
  EXPECT_EQ(Tabulate(*m.f), (std::vector<double>{0.0, 1.5, 0.5, 1.5}));
  EXPECT_EQ(Tabulate(*m.g), (std::vector<double>{0.0, 0.5, 0.5, 0.5}));
  EXPECT_EQ(Diff(m), Diff(V1()));
}

TEST(MonotoneDsTest, RandomInstancesExact) {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 8;
    const DSFunction ds = RandomDS(n, DeriveSeed(4, trial), /*dyadic=*/true);
    const DSFunction m = MonotoneDS(ds);
    EXPECT_EQ(Diff(m), Diff(ds));
    for (const auto& h : {m.f, m.g}) {
      EXPECT_TRUE(VerifyMonotone(*h));
      EXPECT_TRUE(VerifySubmodular(*h));
    }
  }
}

TEST(BetaSqrtTest, ClosedFormAndProfile) {
  EXPECT_NEAR(BetaSqrt(4), 2 * std::sqrt(3.0) - 2 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(BetaSqrt(4), 0.0499, 1e-4);
  EXPECT_NEAR(BetaSqrt(3), 0.09638, 1e-5);
  EXPECT_THROW(BetaSqrt(2), DomainError);
  for (int n = 3; n <= 10; ++n) {
    std::vector<double> phi(n + 1);
    for (int i = 0; i <= n; ++i) phi[i] = std::sqrt(static_cast<double>(i));
    EXPECT_NEAR(BetaFromProfile(phi), BetaSqrt(n), 1e-12);
    auto sqrt_card = std::make_shared<LambdaFunction>(
        n, [](const ElementSet& x) { return std::sqrt(static_cast<double>(x.size())); });
    EXPECT_NEAR(BruteForceAlpha(*sqrt_card), BetaSqrt(n), 1e-12);
  }
}

TEST(BruteForceAlphaTest, Examples) {
  EXPECT_EQ(BruteForceAlpha(*Square(4)), -6.0);
  EXPECT_EQ(BruteForceAlpha(*Square(3)), -4.0);
  EXPECT_EQ(BruteForceAlpha(ModularOracle(ModularFunction({1.0, -2.0, 3.0}))), 0.0);
  EXPECT_GE(BruteForceAlpha(*F1()), 0.0);
  EXPECT_THROW(BruteForceAlpha(*Square(13)), SizeError);
}

TEST(DsFromAlphaTest, SquareOfCardinality) {
  const DSFunction ds = DsFromAlpha(Square(4), -6.0);
  EXPECT_TRUE(VerifySubmodular(*ds.f));
  EXPECT_TRUE(VerifySubmodular(*ds.g));
  const std::vector<double> d = Diff(ds);
  const std::vector<double> v = Tabulate(*Square(4));
  for (size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(d[i], v[i], 1e-12);
  EXPECT_THROW(DsFromAlpha(Square(4), -1.0), PreconditionError);
}

TEST(DsFromAlphaTest, SubmodularInputIsReturnedAsIs) {
  const DSFunction ds = DsFromAlpha(F1(), 0.0);
  EXPECT_EQ(Tabulate(*ds.f), Tabulate(*F1()));
  EXPECT_EQ(Tabulate(*ds.g), std::vector<double>(4, 0.0));
  auto v1 = V1().AsOracle();
  const DSFunction back = DsFromAlpha(v1, BruteForceAlpha(*v1));
  EXPECT_EQ(Diff(back), Tabulate(*v1));
}

TEST(DsFromAlphaTest, RandomSetFunctions) {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 6;
    const DSFunction src = RandomDS(n, DeriveSeed(6, trial));
    auto v = std::make_shared<TableFunction>(n, Diff(src));
    const double alpha = BruteForceAlpha(*v);
    const DSFunction ds = DsFromAlpha(v, alpha);
    EXPECT_TRUE(VerifySubmodular(*ds.f, 1e-7));
    EXPECT_TRUE(VerifySubmodular(*ds.g));
    const std::vector<double> d = Diff(ds);
    for (size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d[i], v->values()[i], 1e-9);
  }
}

TEST(LowerBoundTest, Fixture) {
  EXPECT_DOUBLE_EQ(LowerBound1(V1()), -0.5);
  EXPECT_DOUBLE_EQ(LowerBound2(V1()), -0.5);
}

TEST(LowerBoundTest, ZeroGAndModular) {
  for (int trial = 0; trial < 20; ++trial) {
    auto f = RandomSubmodular(7, trial);
    DSFunction ds(f, MakeModular(ModularFunction::Zero(7)));
    EXPECT_NEAR(LowerBound1(ds), BruteForceMinimize(*f).value, 1e-7);
  }
  ModularFunction m({1.0, -2.0, -0.5, 3.0});
  DSFunction ds(MakeModular(m), MakeModular(ModularFunction::Zero(4)));
  EXPECT_DOUBLE_EQ(LowerBound2(ds), -2.5);
  EXPECT_NEAR(LowerBound1(ds), -2.5, 1e-12);
}

TEST(LowerBoundTest, SoundOnRandomInstances) {
  for (int trial = 0; trial < 200; ++trial) {
    const DSFunction ds = RandomDS(3 + trial % 10, DeriveSeed(7, trial));
    const double lb1 = LowerBound1(ds);
    const double lb2 = LowerBound2(ds);
    EXPECT_LE(lb2, lb1 + 1e-9);
    EXPECT_LE(lb1, BruteForceMinimize(ds).value + 1e-9);
  }
}

}  // namespace
}  // namespace dsmin
