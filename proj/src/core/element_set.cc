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

#include "dsmin/element_set.h"

#include <bit>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "dsmin/errors.h"

namespace dsmin {

namespace {

size_t WordCount(int n) { return (static_cast<size_t>(n) + 63) / 64; }

}  // namespace

ElementSet::ElementSet(int n) : n_(n), words_(WordCount(n), 0) {
  if (n < 0) throw DomainError("negative ground set size");
}

ElementSet ElementSet::Full(int n) {
  ElementSet s(n);
  for (auto& w : s.words_) w = ~uint64_t{0};
  if (n % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (uint64_t{1} << (n % 64)) - 1;
  }
  return s;
}

ElementSet ElementSet::FromMask(int n, uint64_t mask) {
  if (n > 64) throw DomainError("FromMask requires n <= 64");
  ElementSet s(n);
  if (n < 64 && (mask >> n) != 0) {
    throw DomainError(fmt::format("mask {:#x} has bits outside n={}", mask, n));
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

ElementSet ElementSet::FromIndices(int n, std::span<const int> indices) {
  ElementSet s(n);
  for (int j : indices) s.insert(j);
  return s;
}

ElementSet ElementSet::FromIndices(int n, std::initializer_list<int> indices) {
  return FromIndices(n, std::span<const int>(indices.begin(), indices.size()));
}

int ElementSet::size() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool ElementSet::empty() const {
  for (uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void ElementSet::CheckIndex(int j) const {
  if (j < 0 || j >= n_) {
    throw DomainError(fmt::format("element {} outside ground set of size {}", j, n_));
  }
}

void ElementSet::CheckSameUniverse(const ElementSet& other) const {
  if (n_ != other.n_) {
    throw DomainError(
        fmt::format("ground set mismatch: {} vs {}", n_, other.n_));
  }
}

bool ElementSet::contains(int j) const {
  CheckIndex(j);
  return (words_[j >> 6] >> (j & 63)) & 1;
}

void ElementSet::insert(int j) {
  CheckIndex(j);
  words_[j >> 6] |= uint64_t{1} << (j & 63);
}

void ElementSet::erase(int j) {
  CheckIndex(j);
  words_[j >> 6] &= ~(uint64_t{1} << (j & 63));
}

void ElementSet::clear() {
  for (auto& w : words_) w = 0;
}

ElementSet ElementSet::With(int j) const {
  ElementSet s = *this;
  s.insert(j);
  return s;
}

ElementSet ElementSet::Without(int j) const {
  ElementSet s = *this;
  s.erase(j);
  return s;
}

ElementSet ElementSet::Complement() const {
  ElementSet s = Full(n_);
  for (size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameUniverse(other);
  for (size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

uint64_t ElementSet::ToMask() const {
  if (n_ > 64) throw DomainError("ToMask requires n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<int> ElementSet::ToIndices() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int j) { out.push_back(j); });
  return out;
}

std::string ElementSet::ToHex() const {
  std::string out;
  bool leading = true;
  for (size_t i = words_.size(); i-- > 0;) {
    if (leading) {
      if (words_[i] == 0) continue;
      out += fmt::format("{:x}", words_[i]);
      leading = false;
    } else {
      out += fmt::format("{:016x}", words_[i]);
    }
  }
  return out.empty() ? "0" : out;
}

std::string ElementSet::ToString() const {
  return fmt::format("{{{}}}", fmt::join(ToIndices(), ","));
}

size_t ElementSet::Hash() const {
  uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(n_);
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

}  // namespace dsmin
