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

#ifndef DSMIN_ERRORS_H_
#define DSMIN_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

#include "dsmin/element_set.h"

namespace dsmin {

// Element index outside the ground set, or sets over different ground sets.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive routine refused because the ground set is too large.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed arguments (bad permutation, invalid parameters, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-certified precondition turned out to be false.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An iterative routine hit its iteration cap. Carries the best set found.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, ElementSet best, double value)
      : std::runtime_error(what), best_(std::move(best)), value_(value) {}
  const ElementSet& best() const { return best_; }
  double value() const { return value_; }

 private:
  ElementSet best_;
  double value_;
};

}  // namespace dsmin

#endif  // DSMIN_ERRORS_H_
