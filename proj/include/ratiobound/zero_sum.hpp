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

#ifndef RATIOBOUND_ZERO_SUM_HPP_
#define RATIOBOUND_ZERO_SUM_HPP_

#include <cstddef>
#include <vector>

#include "ratiobound/instance.hpp"
#include "ratiobound/matrix.hpp"
#include "ratiobound/tolerance.hpp"

namespace ratiobound {

// Solution of the finite zero-sum game
//
//   value = max_{d in simplex(cols)} min_{row} sum_col d[col] * M(row, col)
//
// where the column player (adversary) maximizes and the row player
// (designer) minimizes.
struct GameSolution {
  // Guaranteed payoff of `maximizer`: min_row E_maximizer[M(row, .)].
  double value = 0.0;
  Distribution maximizer;
  // Lowest-index row attaining `value` against `maximizer`.
  std::size_t minimizer_design = 0;
  // Optimal mixed strategy of the row player (weights over rows).
  std::vector<double> minimizer_mix;
  // Guarantee of `minimizer_mix`: max_col E_minimizer_mix[M(., col)].
  double upper = 0.0;
  int iterations = 0;
  // Duality gap upper - value; at most lp_tol on return.
  double residual = 0.0;
};

// Solves the game with a dense simplex on the row player's LP and reads the
// adversary strategy off the dual. 1 x n and m x 1 games are answered
// directly. Throws SolverFailure when the certified duality gap exceeds
// tol.lp_tol or the pivot limit is hit.
GameSolution SolveZeroSum(const Matrix& payoff, const ToleranceConfig& tol = {});

}  // namespace ratiobound

#endif  // RATIOBOUND_ZERO_SUM_HPP_
