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

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "dsmin/dsopt.h"
#include "dsmin/errors.h"

namespace dsmin {

namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

}  // namespace

std::string ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kSubSup:
      return "SubSup";
    case Algorithm::kSupSub:
      return "SupSub";
    case Algorithm::kModMod:
      return "ModMod";
  }
  return "?";
}

std::string ToString(PermutationStrategy s) {
  switch (s) {
    case PermutationStrategy::kRandom:
      return "Random";
    case PermutationStrategy::kGGains:
      return "GGains";
    case PermutationStrategy::kVGains:
      return "VGains";
    case PermutationStrategy::kFGains:
      return "FGains";
  }
  return "?";
}

std::string ToString(UpperBoundPolicy p) {
  switch (p) {
    case UpperBoundPolicy::kBound1:
      return "Bound1";
    case UpperBoundPolicy::kBound2:
      return "Bound2";
    case UpperBoundPolicy::kBothParallel:
      return "BothParallel";
    case UpperBoundPolicy::kAlternate:
      return "Alternate";
  }
  return "?";
}

std::string ToString(Certificate c) {
  switch (c) {
    case Certificate::kLocalMin:
      return "LocalMin";
    case Certificate::kIterationCap:
      return "IterationCap";
    case Certificate::kEpsilonStall:
      return "EpsilonStall";
  }
  return "?";
}

Algorithm ParseAlgorithm(const std::string& name) {
  const std::string s = Lower(name);
  if (s == "subsup") return Algorithm::kSubSup;
  if (s == "supsub") return Algorithm::kSupSub;
  if (s == "modmod") return Algorithm::kModMod;
  throw ArgumentError(fmt::format("unknown algorithm '{}'", name));
}

PermutationStrategy ParseStrategy(const std::string& name) {
  const std::string s = Lower(name);
  if (s == "random") return PermutationStrategy::kRandom;
  if (s == "ggains") return PermutationStrategy::kGGains;
  if (s == "vgains") return PermutationStrategy::kVGains;
  if (s == "fgains") return PermutationStrategy::kFGains;
  throw ArgumentError(fmt::format("unknown permutation strategy '{}'", name));
}

UpperBoundPolicy ParseBoundPolicy(const std::string& name) {
  const std::string s = Lower(name);
  if (s == "bound1" || s == "1") return UpperBoundPolicy::kBound1;
  if (s == "bound2" || s == "2") return UpperBoundPolicy::kBound2;
  if (s == "both" || s == "bothparallel") return UpperBoundPolicy::kBothParallel;
  if (s == "alternate") return UpperBoundPolicy::kAlternate;
  throw ArgumentError(fmt::format("unknown bound policy '{}'", name));
}

nlohmann::json TraceToJson(const OptimizationTrace& trace, bool include_timing) {
  nlohmann::json iterates = nlohmann::json::array();
  for (const Iterate& it : trace.iterates) {
    nlohmann::json entry = {{"set", it.set.ToHex()},
                            {"size", it.set.size()},
                            {"value", it.value},
                            {"calls_f", it.calls_f},
                            {"calls_g", it.calls_g}};
    if (include_timing) entry["wall_ms"] = it.wall_ms;
    iterates.push_back(std::move(entry));
  }
  nlohmann::json out = {{"algorithm", trace.algorithm},
                        {"iterates", std::move(iterates)},
                        {"oracle_calls_f", trace.oracle_calls_f},
                        {"oracle_calls_g", trace.oracle_calls_g},
                        {"converged", trace.converged},
                        {"certificate", ToString(trace.certificate)},
                        {"accepted_iterations", trace.accepted_iterations()},
                        {"stall_retries", trace.stall_retries},
                        {"neighbor_moves", trace.neighbor_moves}};
  if (include_timing) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepStats& s : trace.steps) {
      steps.push_back({{"wall_ms", s.wall_ms}, {"calls_f", s.calls_f}, {"calls_g", s.calls_g}});
    }
    out["steps"] = std::move(steps);
  }
  return out;
}

}  // namespace dsmin
