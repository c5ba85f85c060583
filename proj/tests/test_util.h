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

// Shared two-element fixtures. Values are listed by bitmask: {}, {a}, {b},
// {a, b} with a = element 0.

#ifndef DSMIN_TESTS_TEST_UTIL_H_
#define DSMIN_TESTS_TEST_UTIL_H_

#include <memory>
#include <string>
#include <vector>

#include "dsmin/set_function.h"

namespace dsmin::testing {

inline SetFunctionPtr Table2(double a, double b, double ab) {
  return std::make_shared<TableFunction>(2, std::vector<double>{0.0, a, b, ab});
}

inline SetFunctionPtr F1() { return Table2(2.0, 1.0, 2.5); }
inline SetFunctionPtr G1() { return Table2(1.0, 1.0, 1.5); }
inline SetFunctionPtr F3() { return Table2(-1.0, 1.0, -0.5); }
inline DSFunction V1() { return DSFunction(F1(), G1()); }

inline ElementSet Set2(std::initializer_list<int> elems) {
  return ElementSet::FromIndices(2, elems);
}

inline std::string DataPath(const std::string& rel) {
  return std::string(DSMIN_DATA_DIR) + "/" + rel;
}

}  // namespace dsmin::testing

#endif  // DSMIN_TESTS_TEST_UTIL_H_
