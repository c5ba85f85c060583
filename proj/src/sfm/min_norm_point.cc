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

#include "dsmin/sfm.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "dsmin/brute_force.h"
#include "dsmin/errors.h"

namespace dsmin {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Points of the active set are stored as columns.
struct ActiveSet {
  MatrixXd points;
  VectorXd lambda;

  int size() const { return static_cast<int>(lambda.size()); }
  VectorXd Combination() const { return points * lambda; }

  void Remove(int k) {
    const int last = size() - 1;
    if (k != last) {
      points.col(k) = points.col(last);
      lambda(k) = lambda(last);
    }
    points.conservativeResize(Eigen::NoChange, last);
    lambda.conservativeResize(last);
  }

  void Add(const VectorXd& p) {
    points.conservativeResize(p.size(), size() + 1);
    points.col(size()) = p;
    lambda.conservativeResize(size() + 1);
    lambda(size() - 1) = 0.0;
  }
};

// Affine-hull minimizer coefficients: argmin ||P a|| s.t. sum(a) = 1, via
// (G + 1 1^T) a = 1 followed by normalization.
VectorXd AffineMinimizer(const MatrixXd& points) {
  const int k = static_cast<int>(points.cols());
  MatrixXd system = points.transpose() * points;
  system.array() += 1.0;
  VectorXd a = system.colPivHouseholderQr().solve(VectorXd::Ones(k));
  const double total = a.sum();
  if (!std::isfinite(total) || std::abs(total) < 1e-300) {
    return VectorXd::Constant(k, 1.0 / k);
  }
  return a / total;
}

struct Candidate {
  ElementSet set;
  double value;
};

void Offer(Candidate& best, const ElementSet& s, double value) {
  if (value < best.value || (value == best.value && s < best.set)) {
    best = {s, value};
  }
}

// Single-element descent until no addition or removal improves; returns the
// local minimum reached from `start`.
Candidate LocalRepair(const SetFunction& f, Candidate current) {
  const int n = f.n();
  while (true) {
    Candidate next = current;
    for (int j = 0; j < n; ++j) {
      const ElementSet moved =
          current.set.contains(j) ? current.set.Without(j) : current.set.With(j);
      const double value = f.Evaluate(moved);
      if (value < next.value - kTolerance) next = {moved, value};
    }
    if (next.set == current.set) return current;
    current = next;
  }
}

}  // namespace

GreedyVertex GreedyBaseVertex(const SetFunction& f, std::span<const double> weights) {
  const int n = f.n();
  if (static_cast<int>(weights.size()) != n) throw DomainError("weight vector size mismatch");
  GreedyVertex out;
  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  out.prefix_values = f.EvaluateChain(out.order);
  out.y.resize(n);
  for (int i = 0; i < n; ++i) {
    out.y[out.order[i]] = out.prefix_values[i + 1] - out.prefix_values[i];
  }
  return out;
}

SfmResult MinimizeSubmodular(const SetFunction& f, const SfmOptions& options) {
  const int n = f.n();
  SfmResult result;

  if (auto m = f.AsModular()) {
    ElementSet x(n);
    for (int j = 0; j < n; ++j) {
      if (m->weight(j) < 0.0) x.insert(j);
    }
    result.set = x;
    result.value = (*m)(x);
    return result;
  }

  const int max_major = options.max_major_cycles > 0 ? options.max_major_cycles
                                                     : std::max(10 * n * n, 10);
  const double gap_target = n * options.tol;

  std::vector<double> zero(n, 0.0);
  GreedyVertex first = GreedyBaseVertex(f, zero);
  const double f_empty = first.prefix_values[0];

  Candidate best{ElementSet(n), f_empty};
  auto offer_chain = [&](const GreedyVertex& v) {
    ElementSet prefix(n);
    for (int i = 0; i < n; ++i) {
      prefix.insert(v.order[i]);
      Offer(best, prefix, v.prefix_values[i + 1]);
    }
  };
  offer_chain(first);

  ActiveSet active;
  active.points = Eigen::Map<const VectorXd>(first.y.data(), n);
  active.lambda = VectorXd::Ones(1);
  VectorXd x = active.Combination();
  double max_norm2 = x.squaredNorm();

  auto lower_bound = [&](const VectorXd& point) {
    double lb = f_empty;
    for (int j = 0; j < n; ++j) lb += std::min(point(j), 0.0);
    return lb;
  };

  bool converged = false;
  for (int major = 0; major < max_major; ++major) {
    result.major_cycles = major + 1;
    if (best.value - lower_bound(x) <= gap_target) {
      converged = true;
      break;
    }
    GreedyVertex q_vertex = GreedyBaseVertex(f, std::span<const double>(x.data(), n));
    offer_chain(q_vertex);
    const VectorXd q = Eigen::Map<const VectorXd>(q_vertex.y.data(), n);
    max_norm2 = std::max(max_norm2, q.squaredNorm());
    // Wolfe's criterion: no vertex is closer to the origin along x.
    if (x.squaredNorm() - x.dot(q) <= 1e-12 * max_norm2 ||
        best.value - lower_bound(x) <= gap_target) {
      converged = true;
      break;
    }
    bool duplicate = false;
    for (int k = 0; k < active.size(); ++k) {
      if ((active.points.col(k) - q).lpNorm<Eigen::Infinity>() <=
          1e-12 * std::sqrt(max_norm2)) {
        duplicate = true;
      }
    }
    if (duplicate) {
      converged = true;
      break;
    }
    active.Add(q);

    while (true) {
      ++result.minor_cycles;
      const VectorXd alpha = AffineMinimizer(active.points);
      if ((alpha.array() > 1e-14).all()) {
        active.lambda = alpha;
        break;
      }
      double theta = 1.0;
      for (int k = 0; k < active.size(); ++k) {
        if (alpha(k) <= 1e-14) {
          const double denom = active.lambda(k) - alpha(k);
          if (denom > 0.0) theta = std::min(theta, active.lambda(k) / denom);
        }
      }
      active.lambda = (1.0 - theta) * active.lambda + theta * alpha;
      for (int k = active.size() - 1; k >= 0; --k) {
        if (active.lambda(k) <= 1e-14) active.Remove(k);
      }
      if (active.size() == 0) {
        active.Add(q);
        active.lambda(0) = 1.0;
        break;
      }
      active.lambda /= active.lambda.sum();
    }
    // Caratheodory pruning guards against numerical growth of the active set.
    while (active.size() > n + 1) {
      int smallest = 0;
      active.lambda.minCoeff(&smallest);
      active.Remove(smallest);
      active.lambda /= active.lambda.sum();
    }
    x = active.Combination();
    result.norm_history.push_back(x.squaredNorm());
  }

  // Thresholding, with ambiguous coordinates resolved by comparing both
  // completions.
  ElementSet strict(n);
  ElementSet ambiguous(n);
  for (int j = 0; j < n; ++j) {
    if (x(j) < -options.tol) {
      strict.insert(j);
    } else if (std::abs(x(j)) <= options.tol) {
      ambiguous.insert(j);
    }
  }
  Offer(best, strict, f.Evaluate(strict));
  if (!ambiguous.empty()) {
    const ElementSet wide = strict | ambiguous;
    Offer(best, wide, f.Evaluate(wide));
  }

  result.x.assign(x.data(), x.data() + n);
  if (!converged) {
    throw ConvergenceError(
        fmt::format("min-norm-point did not converge in {} major cycles", max_major),
        best.set, best.value);
  }

  best = LocalRepair(f, best);
  result.set = best.set;
  result.value = best.value;
  result.gap = best.value - lower_bound(x);

  if (options.verify_brute_force && n <= kMaxBruteForceN) {
    const Solution exact = BruteForceMinimize(f);
    if (std::abs(exact.value - result.value) > 1e-6) {
      throw PreconditionError(fmt::format(
          "minimum {} differs from exhaustive {}: function is not submodular",
          result.value, exact.value));
    }
  }
  return result;
}

}  // namespace dsmin
