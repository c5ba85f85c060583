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
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

#include <fmt/format.h>

#include "dsmin/brute_force.h"
#include "dsmin/decomp.h"
#include "dsmin/descent_engine.h"
#include "dsmin/dsopt.h"
#include "dsmin/errors.h"
#include "dsmin/submax.h"

namespace dsmin {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Candidate {
  ElementSet set;
  double value;
};

bool Better(const Candidate& a, const Candidate& b) {
  return a.value < b.value || (a.value == b.value && a.set < b.set);
}

std::vector<int> BoundsFor(UpperBoundPolicy policy, int iteration) {
  switch (policy) {
    case UpperBoundPolicy::kBound1:
      return {1};
    case UpperBoundPolicy::kBound2:
      return {2};
    case UpperBoundPolicy::kBothParallel:
      return {1, 2};
    case UpperBoundPolicy::kAlternate:
      return {iteration % 2 == 0 ? 1 : 2};
  }
  return {1};
}

ModularFunction UpperBound(const SetFunction& f, const ElementSet& x, double fx,
                           int bound) {
  return bound == 2 ? UpperBound2(f, x, fx) : UpperBound1(f, x, fx);
}

}  // namespace

OptimizationTrace RunDescent(const DSFunction& ds, const OptimizerOptions& options,
                             const DescentProcedure& procedure) {
  if (!(options.epsilon >= 0.0) || !std::isfinite(options.epsilon)) {
    throw ArgumentError("epsilon must be finite and >= 0");
  }
  if (options.max_iterations < 1) throw ArgumentError("max_iterations must be >= 1");
  const int n = ds.n();

  auto f_view = std::make_shared<CountingView>(ds.f);
  auto g_view = std::make_shared<CountingView>(ds.g);
  f_view->set_caching(true);
  g_view->set_caching(true);
  const SetFunctionPtr f = f_view;
  const SetFunctionPtr g = g_view;

  Rng rng(options.seed);
  ElementSet x = options.start.value_or(ElementSet(n));
  if (x.universe_size() != n) throw DomainError("start set over a different ground set");

  const Clock::time_point start = Clock::now();
  OptimizationTrace trace;
  trace.algorithm = procedure.name;
  double fx = f->Evaluate(x);
  double gx = g->Evaluate(x);
  double v = fx - gx;
  auto record = [&](const ElementSet& s) {
    x = s;
    fx = f->Evaluate(x);
    gx = g->Evaluate(x);
    v = fx - gx;
    trace.iterates.push_back({x, v, MillisSince(start), f->calls(), g->calls()});
  };
  trace.iterates.push_back({x, v, MillisSince(start), f->calls(), g->calls()});

  const int retry_cap =
      options.max_stall_retries < 0 ? n : std::min(options.max_stall_retries, n);
  int attempt_counter = 0;
  auto evaluate = [&](const ElementSet& s) {
    return Candidate{s, f->Evaluate(s) - g->Evaluate(s)};
  };
  auto run_step = [&](const Permutation* sigma, int bound) {
    StepContext ctx{f, g, x, fx, gx, sigma, bound,
                    DeriveSeed(options.seed, static_cast<uint64_t>(attempt_counter++))};
    return evaluate(procedure.step(ctx));
  };

  for (int iteration = 0;; ++iteration) {
    if (iteration == options.max_iterations) {
      trace.certificate = Certificate::kIterationCap;
      trace.converged = false;
      break;
    }
    const Clock::time_point step_start = Clock::now();
    const int64_t f0 = f->calls();
    const int64_t g0 = g->calls();

    const double threshold = v - options.epsilon * std::abs(v);
    auto acceptable = [&](const Candidate& c) {
      return c.value <= threshold && c.value < v - kTolerance;
    };

    Permutation sigma;
    if (procedure.uses_permutation) {
      sigma = PermutationHeuristic(*f, *g, x, options.strategy, rng);
    }
    const Permutation* sigma_ptr = procedure.uses_permutation ? &sigma : nullptr;
    std::optional<Candidate> best;
    const std::vector<int> bounds =
        procedure.uses_upper_bound ? BoundsFor(options.bound_policy, iteration)
                                   : std::vector<int>{0};
    for (int bound : bounds) {
      Candidate c = run_step(sigma_ptr, bound);
      if (!best || Better(c, *best)) best = c;
    }
    trace.steps.push_back(
        {MillisSince(step_start), f->calls() - f0, g->calls() - g0});
    if (acceptable(*best)) {
      record(best->set);
      continue;
    }
    bool saw_decrease = best->value < v - kTolerance;

    // Stall: retry with boundary permutations and every upper bound.
    std::vector<Candidate> neighbors;
    for (int j = 0; j < n; ++j) {
      const ElementSet moved = x.contains(j) ? x.Without(j) : x.With(j);
      if (procedure.feasible && !procedure.feasible(moved)) {
        neighbors.push_back({moved, std::numeric_limits<double>::infinity()});
      } else {
        neighbors.push_back(evaluate(moved));
      }
    }
    std::optional<Candidate> accepted;
    const std::vector<int> all_bounds =
        procedure.uses_upper_bound ? std::vector<int>{1, 2} : std::vector<int>{0};
    auto attempt = [&](const Permutation* s, int bound) {
      ++trace.stall_retries;
      Candidate c = run_step(s, bound);
      if (c.value < v - kTolerance) saw_decrease = true;
      if (acceptable(c)) accepted = c;
      return accepted.has_value();
    };
    if (procedure.uses_permutation) {
      std::vector<int> order(n);
      for (int j = 0; j < n; ++j) order[j] = j;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return neighbors[a].value < neighbors[b].value;
      });
      for (int r = 0; r < retry_cap && !accepted; ++r) {
        const Permutation moved = BoundaryPermutation(sigma, x, order[r]);
        for (int bound : all_bounds) {
          if (attempt(&moved, bound)) break;
        }
      }
    } else {
      for (int bound : all_bounds) {
        if (attempt(nullptr, bound)) break;
      }
    }
    if (accepted) {
      record(accepted->set);
      continue;
    }
    {
      const Candidate nb = *std::min_element(
          neighbors.begin(), neighbors.end(),
          [](const Candidate& a, const Candidate& b) { return Better(a, b); });
      if (nb.value < v - kTolerance) {
        saw_decrease = true;
        if (acceptable(nb)) {
          ++trace.neighbor_moves;
          record(nb.set);
          continue;
        }
      }
    }
    trace.certificate = saw_decrease ? Certificate::kEpsilonStall : Certificate::kLocalMin;
    trace.converged = true;
    break;
  }
  trace.oracle_calls_f = f->calls();
  trace.oracle_calls_g = g->calls();
  return trace;
}

OptimizationTrace SubSup(const DSFunction& ds, const OptimizerOptions& options) {
  DescentProcedure proc;
  proc.name = "SubSup";
  proc.uses_upper_bound = false;
  proc.step = [&options](const StepContext& ctx) {
    const ModularFunction hg = Subgradient(*ctx.g, ctx.x, *ctx.sigma);
    const SetFunctionPtr inner = Plus(ctx.f, -1.0 * hg);
    return MinimizeSubmodular(*inner, options.sfm).set;
  };
  return RunDescent(ds, options, proc);
}

OptimizationTrace SupSub(const DSFunction& ds, const OptimizerOptions& options) {
  DescentProcedure proc;
  proc.name = "SupSub";
  proc.uses_permutation = false;
  // g(Y) >= g({}) + sum_j min(g(j | V-j), 0) for submodular g; computed once
  // and used to shift the inner objective to be nonnegative.
  auto g_floor = std::make_shared<std::optional<double>>();
  proc.step = [g_floor](const StepContext& ctx) {
    const SetFunction& g = *ctx.g;
    const int n = g.n();
    if (!g_floor->has_value()) {
      const ElementSet full = ElementSet::Full(n);
      const double g_full = g.Evaluate(full);
      double floor = g.Evaluate(ElementSet(n));
      for (int j = 0; j < n; ++j) {
        floor += std::min(g_full - g.Evaluate(full.Without(j)), 0.0);
      }
      *g_floor = floor;
    }
    const ModularFunction mf = UpperBound(*ctx.f, ctx.x, ctx.fx, ctx.bound);
    double mf_max = mf.offset();
    for (double w : mf.weights()) mf_max += std::max(w, 0.0);
    const double shift = std::max(0.0, mf_max - **g_floor);
    ModularFunction negated =
        -1.0 * mf + ModularFunction(std::vector<double>(n, 0.0), shift);
    const auto inner = std::make_shared<LinearCombination>(
        n, std::vector<std::pair<double, SetFunctionPtr>>{{1.0, ctx.g}},
        std::move(negated));
    return MaximizeSubmodular(*inner, {.seed = ctx.seed, .warm_start = ctx.x}).set;
  };
  return RunDescent(ds, options, proc);
}

OptimizationTrace ModMod(const DSFunction& ds, const OptimizerOptions& options) {
  DescentProcedure proc;
  proc.name = "ModMod";
  proc.step = [](const StepContext& ctx) {
    const ModularFunction mf = UpperBound(*ctx.f, ctx.x, ctx.fx, ctx.bound);
    const ModularFunction hg = Subgradient(*ctx.g, ctx.x, *ctx.sigma);
    return ModularArgmin(mf - hg);
  };
  return RunDescent(ds, options, proc);
}

OptimizationTrace Minimize(const DSFunction& ds, Algorithm algorithm,
                           const OptimizerOptions& options) {
  switch (algorithm) {
    case Algorithm::kSubSup:
      return SubSup(ds, options);
    case Algorithm::kSupSub:
      return SupSub(ds, options);
    case Algorithm::kModMod:
      return ModMod(ds, options);
  }
  throw ArgumentError("unknown algorithm");
}

ElementSet ModularArgmin(const ModularFunction& m) {
  ElementSet x(m.n());
  for (int j = 0; j < m.n(); ++j) {
    if (m.weight(j) < 0.0) x.insert(j);
  }
  return x;
}

bool CertifyLocalMin(const DSFunction& ds, const ElementSet& x) {
  const double v = ds.Evaluate(x);
  for (int j = 0; j < ds.n(); ++j) {
    const ElementSet moved = x.contains(j) ? x.Without(j) : x.With(j);
    if (ds.Evaluate(moved) < v - kTolerance) return false;
  }
  return true;
}

int IterationBound(double lower_bound, double first_value, double epsilon) {
  if (!(epsilon > 0.0)) throw ArgumentError("iteration bound needs epsilon > 0");
  if (first_value >= 0.0) return 1;
  const double ratio = std::abs(lower_bound) / std::abs(first_value);
  if (ratio <= 1.0) return 0;
  const double steps = std::log(ratio) / std::log1p(epsilon);
  return static_cast<int>(std::ceil(steps - 1e-9));
}

int IterationBound(const DSFunction& ds, double first_value, double epsilon) {
  return IterationBound(LowerBound2(ds), first_value, epsilon);
}

}  // namespace dsmin
