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

// Executable property suites, one per acceptance criterion. Shared by the
// acceptance test binary and the `selftest` subcommand.

#ifndef DSMIN_CHECKS_H_
#define DSMIN_CHECKS_H_

#include <string>
#include <vector>

namespace dsmin {

inline constexpr int kNumChecks = 11;

struct CheckOptions {
  // Holds mushroom.svm, adult.svm and configs/.
  std::string data_dir;
  int jobs = 1;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Checks 1 to 8 need no data files.
bool CheckNeedsData(int id);
std::string CheckName(int id);
CheckResult RunCheck(int id, const CheckOptions& options);

// "[PASS] 3 double_greedy (12.1 s): ..." style line.
std::string FormatCheck(const CheckResult& result);

}  // namespace dsmin

#endif  // DSMIN_CHECKS_H_
