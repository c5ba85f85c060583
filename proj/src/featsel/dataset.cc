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

#include "dsmin/dataset.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "dsmin/errors.h"

namespace dsmin {

namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(Trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(Trim(cell));
  return cells;
}

std::string NormalizeLabel(const std::string& label) {
  if (label.size() > 1 && label[0] == '+') return label.substr(1);
  return label;
}

// Codes raw strings in sorted order.
std::vector<int> Encode(const std::vector<std::string>& raw,
                        std::vector<std::string>& names) {
  std::map<std::string, int> codes;
  for (const auto& s : raw) codes.emplace(s, 0);
  names.clear();
  for (auto& [name, code] : codes) {
    code = static_cast<int>(names.size());
    names.push_back(name);
  }
  std::vector<int> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) out[i] = codes[raw[i]];
  return out;
}

}  // namespace

Dataset ParseCsv(const std::string& text, const std::string& label_column) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) header = SplitCsvLine(line);
  }
  if (header.size() < 2) throw ParseError("csv needs a header with >= 2 columns", line_no);
  int label_index = static_cast<int>(header.size()) - 1;
  if (!label_column.empty()) {
    const auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end()) {
      throw ParseError(fmt::format("label column '{}' not in header", label_column), 1);
    }
    label_index = static_cast<int>(it - header.begin());
  }
  std::vector<std::vector<std::string>> raw(header.size());
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    std::vector<std::string> cells = SplitCsvLine(line);
    if (cells.size() != header.size()) {
      throw ParseError(fmt::format("expected {} cells, got {}", header.size(), cells.size()),
                       line_no);
    }
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) cells[c] = "?";
      raw[c].push_back(std::move(cells[c]));
    }
  }
  if (raw[0].empty()) throw ParseError("csv has no data rows", line_no);

  Dataset data;
  data.num_rows = static_cast<int>(raw[0].size());
  for (size_t c = 0; c < header.size(); ++c) {
    if (static_cast<int>(c) == label_index) continue;
    std::vector<std::string> names;
    const std::vector<int> codes = Encode(raw[c], names);
    if (static_cast<int>(names.size()) > kMaxArity) {
      throw ParseError(fmt::format("column '{}' has {} categories (> {})", header[c],
                                   names.size(), kMaxArity),
                       0);
    }
    data.columns.emplace_back(codes.begin(), codes.end());
    data.arity.push_back(static_cast<int>(names.size()));
    data.feature_names.push_back(header[c]);
  }
  std::vector<std::string> labels = raw[label_index];
  for (auto& l : labels) l = NormalizeLabel(l);
  data.labels = Encode(labels, data.class_names);
  return data;
}

Dataset ParseSparseBinary(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> active;
  int max_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string label;
    if (!(tokens >> label)) continue;
    std::vector<int> row;
    std::string token;
    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) {
        throw ParseError(fmt::format("token '{}' is not idx:value", token), line_no);
      }
      int index = 0;
      const char* begin = token.data();
      const auto [end, ec] = std::from_chars(begin, begin + colon, index);
      if (ec != std::errc() || end != begin + colon || index < 1) {
        throw ParseError(fmt::format("bad feature index in '{}'", token), line_no);
      }
      double value = 0.0;
      try {
        value = std::stod(token.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError(fmt::format("bad feature value in '{}'", token), line_no);
      }
      if (value != 0.0) row.push_back(index - 1);
      max_index = std::max(max_index, index);
    }
    labels.push_back(NormalizeLabel(label));
    active.push_back(std::move(row));
  }
  if (labels.empty()) throw ParseError("no data rows", line_no);

  Dataset data;
  data.num_rows = static_cast<int>(labels.size());
  data.columns.assign(max_index, std::vector<uint16_t>(data.num_rows, 0));
  data.arity.assign(max_index, 2);
  for (int j = 0; j < max_index; ++j) data.feature_names.push_back(std::to_string(j + 1));
  for (int r = 0; r < data.num_rows; ++r) {
    for (int j : active[r]) data.columns[j][r] = 1;
  }
  data.labels = Encode(labels, data.class_names);
  return data;
}

namespace {

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path), 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Dataset LoadDataset(const std::string& path, DataFormat format,
                    const std::string& label_column) {
  const std::string text = ReadText(path);
  return format == DataFormat::kCsv ? ParseCsv(text, label_column) : ParseSparseBinary(text);
}

std::vector<int> ParseFeatureGroups(const std::string& text, int num_features) {
  std::vector<int> group(num_features, -1);
  std::map<std::string, int> code;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    int index = 0;
    std::string name;
    if (!(fields >> index)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("expected 'index attribute'", line_no);
    }
    if (!(fields >> name)) throw ParseError("missing attribute name", line_no);
    if (index < 1 || index > num_features) {
      throw ParseError(fmt::format("feature index {} outside 1..{}", index, num_features),
                       line_no);
    }
    if (group[index - 1] >= 0) {
      throw ParseError(fmt::format("feature {} listed twice", index), line_no);
    }
    const auto [it, inserted] = code.emplace(name, static_cast<int>(code.size()));
    group[index - 1] = it->second;
  }
  int next = static_cast<int>(code.size());
  for (int& g : group) {
    if (g < 0) g = next++;
  }
  return group;
}

void LoadFeatureGroups(const std::string& path, Dataset& data) {
  data.feature_group = ParseFeatureGroups(ReadText(path), data.num_features());
}

DataFormat ParseDataFormat(const std::string& name) {
  if (name == "csv") return DataFormat::kCsv;
  if (name == "sparse" || name == "sparse-binary" || name == "svm" || name == "libsvm") {
    return DataFormat::kSparseBinary;
  }
  throw ArgumentError(fmt::format("unknown data format '{}'", name));
}

}  // namespace dsmin
