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

// JSON serialization of set functions.
//
// Table form: {"n": 2, "values": {"00": 0, "01": 2, "10": 1, "11": 2.5}}.
// Keys are n-character bit strings with element 0 as the rightmost
// character. Every one of the 2^n subsets must be present.
//
// Standard form: {"kind": "cut", "params": {...}}, see MakeStandard.

#ifndef DSMIN_FIXTURE_H_
#define DSMIN_FIXTURE_H_

#include <memory>
#include <string>

#include "dsmin/set_function.h"
#include "json.hpp"

namespace dsmin {

std::shared_ptr<TableFunction> ParseTable(const nlohmann::json& doc);

// Accepts either form. Throws ArgumentError on malformed documents.
SetFunctionPtr FunctionFromJson(const nlohmann::json& doc);

// Throws ParseError if the file cannot be read or is not valid JSON.
SetFunctionPtr LoadFunction(const std::string& path);

// Tabulates f (n <= 20) into table form.
nlohmann::json TableToJson(const SetFunction& f);

// "0101"-style key for x, element 0 rightmost.
std::string BitString(const ElementSet& x);

}  // namespace dsmin

#endif  // DSMIN_FIXTURE_H_
