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

#include "dsmin/entropy.h"

#include <cmath>
#include <unordered_map>

#include "dsmin/errors.h"

namespace dsmin {

namespace {

// Rows grouped by their configuration on the features added so far.
class Partition {
 public:
  explicit Partition(int rows) : block_(rows, 0), num_blocks_(rows > 0 ? 1 : 0) {}

  void Refine(const std::vector<uint16_t>& column, int arity) {
    log2_cells_ += std::log2(static_cast<double>(arity));
    const int64_t keys = static_cast<int64_t>(num_blocks_) * arity;
    int next = 0;
    if (keys <= (int64_t{1} << 24)) {
      std::vector<int> remap(keys, -1);
      for (size_t r = 0; r < block_.size(); ++r) {
        int& id = remap[static_cast<int64_t>(block_[r]) * arity + column[r]];
        if (id < 0) id = next++;
        block_[r] = id;
      }
    } else {
      std::unordered_map<int64_t, int> remap;
      for (size_t r = 0; r < block_.size(); ++r) {
        const auto [it, inserted] =
            remap.emplace(static_cast<int64_t>(block_[r]) * arity + column[r], next);
        if (inserted) ++next;
        block_[r] = it->second;
      }
    }
    num_blocks_ = next;
  }

  const std::vector<int>& blocks() const { return block_; }
  int num_blocks() const { return num_blocks_; }
  double log2_cells() const { return log2_cells_; }

 private:
  std::vector<int> block_;
  int num_blocks_;
  double log2_cells_ = 0.0;
};

// Entropy of the smoothed distribution whose observed cells have the given
// (positive) counts out of total, among 2^log2_cells cells.
EntropyValue FromCounts(const std::vector<int>& counts, double total, double log2_cells,
                        double alpha) {
  EntropyValue out;
  if (total <= 0.0) return out;
  double cells = 0.0;
  if (alpha > 0.0) {
    if (log2_cells > std::log2(kMaxSmoothedCells)) {
      out.smoothing_dropped = true;
      alpha = 0.0;
    } else {
      cells = std::exp2(log2_cells);
    }
  }
  const double mass = total + alpha * cells;
  double h = 0.0;
  double observed = 0.0;
  for (int c : counts) {
    if (c == 0) continue;
    observed += 1.0;
    const double p = (c + alpha) / mass;
    h -= p * std::log2(p);
  }
  if (alpha > 0.0) {
    const double unobserved = std::max(cells - observed, 0.0);
    const double p = alpha / mass;
    h -= unobserved * p * std::log2(p);
  }
  out.bits = h;
  return out;
}

EntropyValue EntropyOf(const Dataset& data, const Partition& part,
                      EntropyFunction::Kind kind, double alpha) {
  const std::vector<int>& blocks = part.blocks();
  if (kind == EntropyFunction::Kind::kJoint) {
    std::vector<int> counts(part.num_blocks(), 0);
    for (int b : blocks) ++counts[b];
    return FromCounts(counts, data.num_rows, part.log2_cells(), alpha);
  }
  const int classes = data.num_classes();
  std::vector<std::vector<int>> counts(classes, std::vector<int>(part.num_blocks(), 0));
  std::vector<int> class_total(classes, 0);
  for (size_t r = 0; r < blocks.size(); ++r) {
    ++counts[data.labels[r]][blocks[r]];
    ++class_total[data.labels[r]];
  }
  EntropyValue out;
  for (int c = 0; c < classes; ++c) {
    if (class_total[c] == 0) continue;
    const EntropyValue h = FromCounts(counts[c], class_total[c], part.log2_cells(), alpha);
    out.bits += static_cast<double>(class_total[c]) / data.num_rows * h.bits;
    out.smoothing_dropped = out.smoothing_dropped || h.smoothing_dropped;
  }
  return out;
}

EntropyValue EvaluateSet(const Dataset& data, const ElementSet& a,
                         EntropyFunction::Kind kind, double alpha) {
  if (a.universe_size() != data.num_features()) {
    throw DomainError("feature set over a different ground set");
  }
  Partition part(data.num_rows);
  a.ForEach([&](int j) { part.Refine(data.columns[j], data.arity[j]); });
  return EntropyOf(data, part, kind, alpha);
}

}  // namespace

EntropyValue JointEntropy(const Dataset& data, const ElementSet& a, double alpha) {
  return EvaluateSet(data, a, EntropyFunction::Kind::kJoint, alpha);
}

EntropyValue ConditionalEntropy(const Dataset& data, const ElementSet& a, double alpha) {
  return EvaluateSet(data, a, EntropyFunction::Kind::kConditional, alpha);
}

EntropyFunction::EntropyFunction(std::shared_ptr<const Dataset> data, Kind kind,
                                 double alpha)
    : SetFunction(data->num_features()), data_(std::move(data)), kind_(kind), alpha_(alpha) {
  if (!(alpha_ >= 0.0)) throw ArgumentError("smoothing must be >= 0");
}

double EntropyFunction::DoEvaluate(const ElementSet& a) const {
  const EntropyValue h = EvaluateSet(*data_, a, kind_, alpha_);
  if (h.smoothing_dropped) dropped_.fetch_add(1);
  return h.bits;
}

void EntropyFunction::DoEvaluateChain(std::span<const int> order,
                                      std::span<double> out) const {
  Partition part(data_->num_rows);
  out[0] = EntropyOf(*data_, part, kind_, alpha_).bits;
  for (size_t i = 0; i < order.size(); ++i) {
    part.Refine(data_->columns[order[i]], data_->arity[order[i]]);
    const EntropyValue h = EntropyOf(*data_, part, kind_, alpha_);
    if (h.smoothing_dropped) dropped_.fetch_add(1);
    out[i + 1] = h.bits;
  }
}

std::vector<double> SingletonConditionalEntropies(const Dataset& data, double alpha) {
  const int n = data.num_features();
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) {
    out[j] = ConditionalEntropy(data, ElementSet::FromIndices(n, {j}), alpha).bits;
  }
  return out;
}

}  // namespace dsmin
