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

// Categorical datasets for feature selection.

#ifndef DSMIN_DATASET_H_
#define DSMIN_DATASET_H_

#include <cstdint>
#include <string>
#include <vector>

namespace dsmin {

// Column-major categorical table. Category and class codes are dense,
// starting at 0.
struct Dataset {
  int num_rows = 0;
  std::vector<std::vector<uint16_t>> columns;
  std::vector<int> arity;
  std::vector<std::string> feature_names;
  std::vector<int> labels;
  std::vector<std::string> class_names;
  // Source attribute of each feature (dense codes), or empty when every
  // feature stands alone. Used by naive Bayes to model indicators of one
  // attribute as a single categorical variable.
  std::vector<int> feature_group;

  int num_features() const { return static_cast<int>(columns.size()); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

enum class DataFormat { kCsv, kSparseBinary };

inline constexpr int kMaxArity = 10000;

// CSV with a header row; the label is the column named label_column, or the
// last column when label_column is empty. Empty and "?" cells become a
// dedicated "?" category. Categories are coded in sorted order.
Dataset ParseCsv(const std::string& text, const std::string& label_column = "");

// Lines "label idx:val ..." with 1-based indices; a feature is 1 when its
// value is nonzero. The number of features is the largest index seen; names
// are the original indices. Labels "+1" and "1" are the same class.
Dataset ParseSparseBinary(const std::string& text);

// Throws ParseError with a line number on malformed input.
Dataset LoadDataset(const std::string& path, DataFormat format,
                    const std::string& label_column = "");

DataFormat ParseDataFormat(const std::string& name);

// Lines "idx attribute" with 1-based feature indices; features not listed
// get a group of their own. Groups are coded in order of first appearance.
std::vector<int> ParseFeatureGroups(const std::string& text, int num_features);
void LoadFeatureGroups(const std::string& path, Dataset& data);

}  // namespace dsmin

#endif  // DSMIN_DATASET_H_
