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

#include "dsmin/fixture.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dsmin/brute_force.h"
#include "dsmin/errors.h"
#include "dsmin/standard_functions.h"

namespace dsmin {

std::string BitString(const ElementSet& x) {
  std::string out(x.universe_size(), '0');
  x.ForEach([&](int j) { out[out.size() - 1 - j] = '1'; });
  return out;
}

std::shared_ptr<TableFunction> ParseTable(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
    throw ArgumentError("table needs 'n' and 'values'");
  }
  if (!doc["n"].is_number_integer()) throw ArgumentError("'n' must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 20) throw ArgumentError(fmt::format("table n={} not in [1, 20]", n));
  const auto& values = doc["values"];
  if (!values.is_object()) throw ArgumentError("'values' must be an object");
  const size_t count = size_t{1} << n;
  std::vector<double> table(count, 0.0);
  std::vector<char> seen(count, 0);
  for (const auto& [key, value] : values.items()) {
    if (static_cast<int>(key.size()) != n ||
        key.find_first_not_of("01") != std::string::npos) {
      throw ArgumentError(fmt::format("bad subset key '{}' for n={}", key, n));
    }
    if (!value.is_number()) {
      throw ArgumentError(fmt::format("value for '{}' is not a number", key));
    }
    const size_t mask = std::stoull(key, nullptr, 2);
    if (seen[mask]) throw ArgumentError(fmt::format("duplicate key '{}'", key));
    seen[mask] = 1;
    table[mask] = value.get<double>();
  }
  for (size_t mask = 0; mask < count; ++mask) {
    if (!seen[mask]) {
      throw ArgumentError(fmt::format(
          "missing value for subset {}",
          BitString(ElementSet::FromMask(n, mask))));
    }
  }
  return std::make_shared<TableFunction>(n, std::move(table));
}

SetFunctionPtr FunctionFromJson(const nlohmann::json& doc) {
  if (doc.is_object() && doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ArgumentError("'kind' must be a string");
    return MakeStandard(doc["kind"].get<std::string>(),
                        doc.value("params", nlohmann::json::object()));
  }
  return ParseTable(doc);
}

SetFunctionPtr LoadFunction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path), 0);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("'{}': {}", path, e.what()), 0);
  }
  return FunctionFromJson(doc);
}

nlohmann::json TableToJson(const SetFunction& f) {
  const std::vector<double> table = Tabulate(f);
  nlohmann::json values = nlohmann::json::object();
  for (size_t mask = 0; mask < table.size(); ++mask) {
    values[BitString(ElementSet::FromMask(f.n(), mask))] = table[mask];
  }
  return {{"n", f.n()}, {"values", values}};
}

}  // namespace dsmin
