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

#ifndef DSMIN_ELEMENT_SET_H_
#define DSMIN_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dsmin {

// A subset of the ground set V = {0, ..., n-1}, stored as a dense bitmask.
//
// Binary set operations require both operands to live on the same ground set
// and throw DomainError otherwise. Ordering compares the sets as unsigned
// integers (element 0 is the least significant bit), which is the
// "lexicographically smallest bitmask" order used for deterministic ties.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n);

  static ElementSet Full(int n);
  // Requires n <= 64.
  static ElementSet FromMask(int n, uint64_t mask);
  static ElementSet FromIndices(int n, std::span<const int> indices);
  static ElementSet FromIndices(int n, std::initializer_list<int> indices);

  int universe_size() const { return n_; }
  int size() const;
  bool empty() const;

  bool contains(int j) const;
  void insert(int j);
  void erase(int j);
  void clear();

  ElementSet With(int j) const;
  ElementSet Without(int j) const;
  ElementSet Complement() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool IsSubsetOf(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

  // Requires n <= 64.
  uint64_t ToMask() const;
  std::vector<int> ToIndices() const;
  // Big-endian hex of the bitmask, e.g. {0, 4} -> "11". Empty set -> "0".
  std::string ToHex() const;
  // "{0,4}"
  std::string ToString() const;

  std::span<const uint64_t> words() const { return words_; }
  size_t Hash() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void CheckIndex(int j) const;
  void CheckSameUniverse(const ElementSet& other) const;

  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace dsmin

#endif  // DSMIN_ELEMENT_SET_H_
