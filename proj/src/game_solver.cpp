// Copyright 2026 The Ratiobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratiobound/game_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratiobound/errors.hpp"

namespace ratiobound {
namespace {

constexpr int kMaxPolishSteps = 64;

}  // namespace

SolveResult BestAdversaryEor(const GameInstance& inst,
                             const ToleranceConfig& tol) {
  tol.Validate();
  GameSolution g = SolveZeroSum(RatioMatrix(inst), tol);
  return SolveResult{g.value, std::move(g.maximizer), g.minimizer_design,
                     g.iterations, g.residual};
}

Matrix LinearizedPayoff(const GameInstance& inst, double lambda) {
  Matrix out(inst.num_designs(), inst.num_states());
  for (std::size_t a = 0; a < out.rows(); ++a) {
    for (std::size_t s = 0; s < out.cols(); ++s) {
      out(a, s) = inst.benchmark()(a, s) - lambda * inst.algorithm()(a, s);
    }
  }
  return out;
}

GameSolution ParametricGame(const GameInstance& inst, double lambda,
                            const ToleranceConfig& tol) {
  return SolveZeroSum(LinearizedPayoff(inst, lambda), tol);
}

SolveResult BestAdversaryRoe(const GameInstance& inst,
                             const ToleranceConfig& tol) {
  tol.Validate();
  const Matrix ratios = RatioMatrix(inst);
  double lo = *std::min_element(ratios.data().begin(), ratios.data().end());
  double hi = *std::max_element(ratios.data().begin(), ratios.data().end());

  int solves = 0;
  auto game = [&](double lambda) {
    ++solves;
    return ParametricGame(inst, lambda, tol);
  };

  // g(lo) >= 0 since benchmark - lo * algorithm is entrywise non-negative.
  Distribution best = game(lo).maximizer;
  double best_value = RoeLowerBound(inst, best).value;
  lo = std::max(lo, best_value);

  bool converged = false;
  int iters = 0;
  while (iters < tol.max_bisection_iters) {
    if (hi - lo <= tol.abs_tol) {
      converged = true;
      break;
    }
    const double mid = 0.5 * (lo + hi);
    ++iters;
    GameSolution g = game(mid);
    if (g.value >= 0.0) {
      const double achieved = RoeLowerBound(inst, g.maximizer).value;
      if (achieved > best_value) {
        best_value = achieved;
        best = std::move(g.maximizer);
      }
      lo = std::max(mid, best_value);
    } else {
      hi = mid;
    }
    if (std::abs(g.value) <= tol.abs_tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os.precision(12);
    os << "ROE bisection did not converge in " << tol.max_bisection_iters
       << " iterations; bracket [" << lo << ", " << hi << "]";
    throw SolverFailure(os.str(), solves, hi - lo);
  }

  // The bisection may stop on |g(mid)| <= abs_tol with `best_value` still
  // short of the root; Dinkelbach steps close the remaining gap.
  double g_at_best = 0.0;
  for (int step = 0; step < kMaxPolishSteps; ++step) {
    GameSolution g = game(best_value);
    g_at_best = g.value;
    if (g.value <= tol.lp_tol) break;
    const double achieved = RoeLowerBound(inst, g.maximizer).value;
    if (!(achieved > best_value)) break;
    best_value = achieved;
    best = std::move(g.maximizer);
  }
  const double residual = std::abs(g_at_best);
  if (residual > tol.abs_tol) {
    std::ostringstream os;
    os.precision(6);
    os << "ROE solve: |g(lambda)| = " << residual << " exceeds abs_tol "
       << tol.abs_tol;
    throw SolverFailure(os.str(), solves, residual);
  }

  SolveResult out = RoeLowerBound(inst, best);
  out.iterations = solves;
  out.residual = residual;
  return out;
}

std::pair<double, std::size_t> AdversarySupRoeFixedDesign(
    const GameInstance& inst, std::size_t design) {
  RatioValue w = WorstStatePure(inst, design);
  return {w.value, *w.argmax_state};
}

}  // namespace ratiobound
