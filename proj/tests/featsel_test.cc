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
#include <string>
#include <vector>

#include "dsmin/brute_force.h"
#include "dsmin/dataset.h"
#include "dsmin/entropy.h"
#include "dsmin/errors.h"
#include "dsmin/experiment.h"
#include "dsmin/naive_bayes.h"
#include "dsmin/objective.h"
#include "dsmin/random.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::DataPath;
using json = nlohmann::json;

double PlugIn(std::vector<double> counts) {
  double total = 0.0;
  for (double c : counts) total += c;
  double h = 0.0;
  for (double c : counts) {
    if (c > 0) h -= c / total * std::log2(c / total);
  }
  return h;
}

// Feature 0 equals the label, feature 1 is independent of it.
std::shared_ptr<const Dataset> LabelCopy() {
  return std::make_shared<Dataset>(
      ParseCsv("x1,x2,c\n0,0,0\n0,1,0\n1,0,1\n1,1,1\n"));
}

std::shared_ptr<const Dataset> Synthetic(int rows, int features, uint64_t seed) {
  Rng rng(seed);
  std::string csv;
  for (int j = 0; j < features; ++j) csv += "x" + std::to_string(j) + ",";
  csv += "label\n";
  for (int r = 0; r < rows; ++r) {
    const int label = static_cast<int>(rng.UniformInt(0, 1));
    for (int j = 0; j < features; ++j) {
      const double p = j < features / 2 ? 0.2 + 0.6 * label : 0.5;
      csv += std::to_string(static_cast<int>(rng.Bernoulli(p)) +
                            (j % 3 == 0 ? static_cast<int>(rng.UniformInt(0, 1)) : 0));
      csv += ",";
    }
    csv += std::to_string(label) + "\n";
  }
  return std::make_shared<Dataset>(ParseCsv(csv));
}

Dataset SubsetColumns(const Dataset& data, const std::vector<int>& cols) {
  Dataset out;
  out.num_rows = data.num_rows;
  out.labels = data.labels;
  out.class_names = data.class_names;
  for (int j : cols) {
    out.columns.push_back(data.columns[j]);
    out.arity.push_back(data.arity[j]);
    out.feature_names.push_back(data.feature_names[j]);
  }
  return out;
}

const Dataset& Mushroom() {
  static const Dataset* data = [] {
    auto* d = new Dataset(LoadDataset(DataPath("mushroom.svm"), DataFormat::kSparseBinary));
    LoadFeatureGroups(DataPath("mushroom.svm.groups"), *d);
    return d;
  }();
  return *data;
}

TEST(DatasetTest, ParseCsv) {
  const Dataset d = ParseCsv("a,b,y\n0,1,no\n1,1,yes\n0,0,no\n");
  EXPECT_EQ(d.num_rows, 3);
  EXPECT_EQ(d.num_features(), 2);
  EXPECT_EQ(d.arity, (std::vector<int>{2, 2}));
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"no", "yes"}));
  EXPECT_EQ(d.labels, (std::vector<int>{0, 1, 0}));
  const Dataset m = ParseCsv("a,y,b\n?,1,x\n,0,y\n", "y");
  EXPECT_EQ(m.arity, (std::vector<int>{1, 2}));
  EXPECT_THROW(ParseCsv("a,y\n1,2,3\n"), ParseError);
}

TEST(DatasetTest, ParseSparseBinary) {
  const Dataset d = ParseSparseBinary("+1 3:1 7:1\n-1 1:1\n");
  EXPECT_EQ(d.num_features(), 7);
  EXPECT_EQ(d.class_names, (std::vector<std::string>{"-1", "1"}));
  EXPECT_EQ(d.labels[0], 1);
  EXPECT_EQ(d.columns[2][0], 1);
  EXPECT_EQ(d.columns[6][0], 1);
  EXPECT_EQ(d.columns[0][0], 0);
  EXPECT_EQ(d.columns[0][1], 1);
  try {
    ParseSparseBinary("1 2:1\n1 oops\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(DatasetTest, FeatureGroups) {
  EXPECT_EQ(ParseFeatureGroups("1 cap\n2 cap\n4 odor\n", 5),
            (std::vector<int>{0, 0, 2, 1, 3}));
  EXPECT_THROW(ParseFeatureGroups("6 cap\n", 5), ParseError);
  EXPECT_THROW(ParseFeatureGroups("1 a\n1 b\n", 5), ParseError);
}

TEST(DatasetTest, MushroomShape) {
  EXPECT_EQ(Mushroom().num_rows, 8124);
  EXPECT_EQ(Mushroom().num_features(), 112);
  EXPECT_EQ(Mushroom().num_classes(), 2);
  EXPECT_THROW(LoadDataset("/nonexistent.svm", DataFormat::kSparseBinary), ParseError);
}

TEST(EntropyTest, Examples) {
  const Dataset twins = ParseCsv("x1,x2,c\n0,0,0\n1,1,0\n0,0,1\n1,1,1\n");
  EXPECT_DOUBLE_EQ(JointEntropy(twins, ElementSet::FromIndices(2, {0}), 0).bits, 1.0);
  EXPECT_DOUBLE_EQ(JointEntropy(twins, ElementSet::Full(2), 0).bits, 1.0);
  EXPECT_EQ(JointEntropy(twins, ElementSet(2), 1.0).bits, 0.0);
  const Dataset constant = ParseCsv("x,c\n1,0\n1,1\n1,0\n");
  EXPECT_EQ(JointEntropy(constant, ElementSet::Full(1), 0).bits, 0.0);
  const Dataset skewed = ParseCsv("x,c\n0,0\n0,0\n0,1\n1,1\n");
  EXPECT_NEAR(JointEntropy(skewed, ElementSet::Full(1), 0).bits, 0.8113, 1e-4);
}

TEST(EntropyTest, SmoothedSingleton) {
  // Counts (3, 1) with alpha = 1 over a declared arity of 2: (4, 2) / 6.
  const Dataset skewed = ParseCsv("x,c\n0,0\n0,0\n0,1\n1,1\n");
  EXPECT_NEAR(JointEntropy(skewed, ElementSet::Full(1), 1.0).bits, PlugIn({4, 2}), 1e-12);
}

TEST(ConditionalEntropyTest, Examples) {
  const auto d = LabelCopy();
  const ElementSet first = ElementSet::FromIndices(2, {0});
  const ElementSet second = ElementSet::FromIndices(2, {1});
  EXPECT_EQ(ConditionalEntropy(*d, first, 0).bits, 0.0);
  EXPECT_DOUBLE_EQ(ConditionalEntropy(*d, second, 0).bits,
                   JointEntropy(*d, second, 0).bits);
  const Dataset hand = ParseCsv("x,c\n0,0\n0,0\n1,0\n1,1\n");
  EXPECT_NEAR(ConditionalEntropy(hand, ElementSet::Full(1), 0).bits,
              0.75 * PlugIn({2, 1}) + 0.25 * PlugIn({1}), 1e-12);
}

TEST(EntropyPropertyTest, AxiomsOnMushroomSubsamples) {
  Rng rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<int> cols;
    for (int j = 0; j < 112; ++j) cols.push_back(j);
    rng.Shuffle(std::span<int>(cols));
    cols.resize(8);
    auto sub = std::make_shared<const Dataset>(SubsetColumns(Mushroom(), cols));
    const EntropyFunction joint(sub, EntropyFunction::Kind::kJoint, 0.0);
    const EntropyFunction cond(sub, EntropyFunction::Kind::kConditional, 0.0);
    const std::vector<double> h = Tabulate(joint);
    const std::vector<double> hc = Tabulate(cond);
    EXPECT_TRUE(VerifySubmodular(8, h));
    EXPECT_TRUE(VerifyMonotone(8, h));
    EXPECT_TRUE(VerifySubmodular(8, hc));
    for (size_t m = 0; m < h.size(); ++m) {
      EXPECT_GE(h[m], -1e-12);
      EXPECT_GE(h[m] - hc[m], -1e-9);
      const ElementSet a = ElementSet::FromMask(8, m);
      EXPECT_NEAR(h[m], JointEntropy(*sub, a, 0).bits, 1e-9);
    }
  }
}

TEST(EntropyFunctionTest, ChainMatchesPointwise) {
  auto data = std::make_shared<const Dataset>(Mushroom());
  const EntropyFunction joint(data, EntropyFunction::Kind::kJoint, 1.0);
  const std::vector<int> order = {5, 17, 40, 3, 99, 64};
  const std::vector<double> chain = joint.EvaluateChain(order);
  ElementSet a(112);
  for (size_t i = 0; i < order.size(); ++i) {
    a.insert(order[i]);
    EXPECT_NEAR(chain[i + 1], JointEntropy(*data, a, 1.0).bits, 1e-9);
  }
}

TEST(MiObjectiveTest, Examples) {
  const auto d = LabelCopy();
  const DSFunction v = MiObjective(d, false, ModularCost(0.5), 0.0);
  EXPECT_EQ(v(ElementSet(2)), 0.0);
  EXPECT_DOUBLE_EQ(v(ElementSet::FromIndices(2, {0})), -0.5);
  const DSFunction factored = MiObjective(d, true, ModularCost(0.5), 0.0);
  EXPECT_TRUE(factored.f->AsModular().has_value());
  EXPECT_DOUBLE_EQ(factored(ElementSet::FromIndices(2, {0})), -0.5);
}

TEST(MiObjectiveTest, NonnegativeMutualInformation) {
  auto data = Synthetic(200, 8, 4);
  const std::vector<double> mi = Tabulate(*MutualInformation(data, false, 0.0));
  for (double x : mi) EXPECT_GE(x, -1e-9);
}

TEST(CostModelTest, SubmodularAndNormalized) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    for (const CostModel& c : {SqrtGroupCost(9, 3, 1.0, seed), SourceCountCost(9, 4, 1.0, seed)}) {
      auto f = MakeCostFunction(c, 9);
      EXPECT_EQ(f->Evaluate(ElementSet(9)), 0.0);
      EXPECT_TRUE(VerifySubmodular(*f));
    }
  }
  auto modular = MakeCostFunction(ModularCost(1.0), 5);
  EXPECT_EQ(modular->Evaluate(ElementSet::FromIndices(5, {0, 3, 4})), 3.0);
  EXPECT_EQ(ParseCostKind(ToString(CostKind::kSqrtGroup)), CostKind::kSqrtGroup);
}

TEST(GreedySelectTest, Examples) {
  ModularOracle m(ModularFunction({3.0, 1.0, 2.0}));
  EXPECT_EQ(GreedySelect(m, 2).set, ElementSet::FromIndices(3, {0, 2}));
  EXPECT_EQ(GreedySelect(m, 2).order, (std::vector<int>{0, 2}));
  EXPECT_EQ(GreedySelect(m, 0).set, ElementSet(3));
  EXPECT_THROW(GreedySelect(m, 4), ArgumentError);
  ModularOracle neg(ModularFunction({-1.0, 2.0}));
  EXPECT_EQ(GreedySelect(neg, 2).set, ElementSet::FromIndices(2, {1}));
  auto mi = MutualInformation(LabelCopy(), false, 0.0);
  EXPECT_EQ(GreedySelect(*mi, 1).order[0], 0);
}

TEST(NaiveBayesTest, Examples) {
  std::string csv = "x,c\n";
  for (int r = 0; r < 40; ++r) csv += std::to_string(r % 2) + "," + std::to_string(r % 2) + "\n";
  const Dataset perfect = ParseCsv(csv);
  EXPECT_EQ(CrossValidateNB(perfect, ElementSet::Full(1), 10, 1).accuracy, 1.0);
  csv = "x,c\n";
  for (int r = 0; r < 1000; ++r) csv += "1," + std::to_string(r % 2) + "\n";
  const Dataset constant = ParseCsv(csv);
  EXPECT_NEAR(CrossValidateNB(constant, ElementSet::Full(1), 10, 1).accuracy, 0.5, 0.1);
  EXPECT_THROW(CrossValidateNB(constant, ElementSet(1), 10, 1), ArgumentError);
  EXPECT_THROW(CrossValidateNB(constant, ElementSet::Full(1), 1, 1), ArgumentError);
}

TEST(NaiveBayesTest, FoldsAreBalancedAndSeeded) {
  const std::vector<int> folds = AssignFolds(103, 10, 5);
  std::vector<int> sizes(10, 0);
  for (int f : folds) ++sizes[f];
  for (int s : sizes) EXPECT_TRUE(s == 10 || s == 11);
  EXPECT_EQ(folds, AssignFolds(103, 10, 5));
  EXPECT_NE(folds, AssignFolds(103, 10, 6));
}

TEST(NaiveBayesTest, DeterministicPredictions) {
  const ElementSet a = ElementSet::FromIndices(112, {3, 20, 50, 77});
  const CvResult r1 = CrossValidateNB(Mushroom(), a, 10, 9);
  const CvResult r2 = CrossValidateNB(Mushroom(), a, 10, 9);
  EXPECT_EQ(r1.predictions, r2.predictions);
  EXPECT_EQ(r1.fold_of, r2.fold_of);
}

TEST(NaiveBayesTest, MushroomAllFeatures) {
  const double acc = CrossValidateNB(Mushroom(), ElementSet::Full(112), 10, 20260117).accuracy;
  EXPECT_NEAR(acc, 0.955, 0.02);
}

ExperimentConfig SmallConfig() {
  return ParseExperimentConfig(json{
      {"dataset", "synthetic"},
      {"path", "unused.csv"},
      {"lambdas", {0.0, 0.05}},
      {"budgets", {1, 2, 3}},
      {"smoothing", 0.0},
      {"folds", 3},
      {"seed", 4},
      {"optimizer", {{"max_iterations", 20}}}});
}

TEST(ExperimentTest, RowsAndDeterminism) {
  const auto data = Synthetic(120, 6, 8);
  const ExperimentConfig config = SmallConfig();
  const std::vector<ResultRow> rows = RunExperiment(config, *data, 1);
  ASSERT_EQ(rows.size(), 2 * 3 + 3 * 2u);
  EXPECT_EQ(rows[0].algorithm, "GrF");
  EXPECT_EQ(rows[0].budget, 1);
  EXPECT_EQ(rows.back().algorithm, "ModMod");
  EXPECT_EQ(rows.back().lambda, 0.05);
  for (const ResultRow& r : rows) {
    EXPECT_GE(r.accuracy, 0.0);
    EXPECT_LE(r.accuracy, 1.0);
    if (r.budget) EXPECT_LE(r.set.size(), *r.budget);
  }
  const std::string csv = ResultsToCsv(rows, false);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "dataset,algorithm,lambda,budget,set_bitmask_hex,set_size,cost,accuracy,"
            "oracle_calls_f,oracle_calls_g,wall_ms");
  EXPECT_EQ(csv, ResultsToCsv(RunExperiment(config, *data, 1), false));
  EXPECT_EQ(csv, ResultsToCsv(RunExperiment(config, *data, 3), false));
  EXPECT_EQ(ResultsToJson(rows, false).size(), rows.size());
}

TEST(ExperimentTest, ConfigErrors) {
  EXPECT_THROW(ParseExperimentConfig(json{{"path", "d.svm"}, {"algorithms", {"SVM"}}}),
               ArgumentError);
  EXPECT_THROW(ParseExperimentConfig(json{{"lambdas", {0.1}}}), ArgumentError);
  EXPECT_THROW(LoadExperimentConfig("/nonexistent.json"), ParseError);
  const ExperimentConfig c = ParseExperimentConfig(
      json{{"path", "d.svm"}, {"cost", {{"kind", "sqrt_group"}, {"groups", 4}}}}, "/base");
  EXPECT_EQ(c.path, "/base/d.svm");
  EXPECT_EQ(c.cost_kind, CostKind::kSqrtGroup);
  EXPECT_EQ(MakeCostModel(c, 12, 0.5).group_of.size(), 12u);
}

}  // namespace
}  // namespace dsmin
