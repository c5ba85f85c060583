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

// Runs every acceptance suite and prints one PASS/FAIL line per criterion.
// Usage: acceptance_test [data_dir] [criterion ...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "dsmin/checks.h"

int main(int argc, char** argv) {
  dsmin::CheckOptions options;
  options.data_dir = argc > 1 ? argv[1] : DSMIN_DATA_DIR;
  std::vector<int> ids;
  for (int i = 2; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= dsmin::kNumChecks; ++id) ids.push_back(id);
  }
  int failed = 0;
  for (int id : ids) {
    const dsmin::CheckResult result = dsmin::RunCheck(id, options);
    std::cout << dsmin::FormatCheck(result) << std::endl;
    if (!result.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
