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

// Optimal adversary mixtures for the two lower-bound objectives.
//
//   EOR:  max_d min_a E_d[benchmark/algorithm]        (a matrix game)
//   ROE:  max_d min_a E_d[benchmark] / E_d[algorithm] (a fractional game)
//
// Both values sit below the pure worst-case value PureMinimax(inst), and
// above the bound produced by any fixed mixture.

#ifndef RATIOBOUND_GAME_SOLVER_HPP_
#define RATIOBOUND_GAME_SOLVER_HPP_

#include <cstddef>
#include <utility>

#include "ratiobound/instance.hpp"
#include "ratiobound/matrix.hpp"
#include "ratiobound/ratio_core.hpp"
#include "ratiobound/tolerance.hpp"
#include "ratiobound/zero_sum.hpp"

namespace ratiobound {

// The zero-sum game on the ratio matrix. `residual` is the duality gap.
SolveResult BestAdversaryEor(const GameInstance& inst,
                             const ToleranceConfig& tol = {});

// benchmark - lambda * algorithm, the payoff whose game value g(lambda) is
// strictly decreasing in lambda and vanishes at the ROE value.
Matrix LinearizedPayoff(const GameInstance& inst, double lambda);

// g(lambda) together with its maximizing mixture.
GameSolution ParametricGame(const GameInstance& inst, double lambda,
                            const ToleranceConfig& tol = {});

// Root of g by bisection on [min ratio, max ratio], with each feasible
// midpoint's maximizer used to raise the lower end (a Dinkelbach step), then
// Dinkelbach polishing at the end. `value` is the ROE lower bound of the
// returned mixture, so replaying it through RoeLowerBound is exact;
// `residual` is |g(value)|. Throws SolverFailure if the bracket does not
// close within max_bisection_iters or |g(value)| > abs_tol.
SolveResult BestAdversaryRoe(const GameInstance& inst,
                             const ToleranceConfig& tol = {});

// For a fixed design, the supremum over adversary mixtures of the ROE
// objective. It equals the worst pure state's ratio (a mixture can never
// beat its best supported element), returned with that state.
std::pair<double, std::size_t> AdversarySupRoeFixedDesign(
    const GameInstance& inst, std::size_t design);

}  // namespace ratiobound

#endif  // RATIOBOUND_GAME_SOLVER_HPP_
