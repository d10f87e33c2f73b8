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

// Pure evaluation of ratio costs and the two ways of averaging them over an
// adversary mixture:
//
//   EOR (expectation over ratios):  sum_s d[s] * benchmark(a,s)/algorithm(a,s)
//   ROE (ratio of expectations):    sum_s d[s]*benchmark(a,s) /
//                                   sum_s d[s]*algorithm(a,s)
//
// Every function here is a pure function of immutable inputs. Ties are
// broken towards the lowest index throughout.

#ifndef RATIOBOUND_RATIO_CORE_HPP_
#define RATIOBOUND_RATIO_CORE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ratiobound/instance.hpp"
#include "ratiobound/matrix.hpp"
#include "ratiobound/tolerance.hpp"

namespace ratiobound {

// A ratio value together with the pure action(s) that realise it.
struct RatioValue {
  double value = 0.0;
  std::optional<std::size_t> argmax_state;
  std::optional<std::size_t> argmin_design;
};

// A bound or game value, the adversary mixture behind it, and the designer's
// best response to that mixture.
struct SolveResult {
  double value = 0.0;
  Distribution adversary_dist;
  std::size_t best_design = 0;
  int iterations = 0;
  // Solver certificate slack; zero for direct evaluations.
  double residual = 0.0;
};

double RatioCost(const GameInstance& inst, std::size_t design,
                 std::size_t state);

// m x n matrix of benchmark/algorithm.
Matrix RatioMatrix(const GameInstance& inst);

double EorValue(const GameInstance& inst, std::size_t design,
                const Distribution& dist);
double RoeValue(const GameInstance& inst, std::size_t design,
                const Distribution& dist);

// Largest ratio in the design's row; records argmax_state.
RatioValue WorstStatePure(const GameInstance& inst, std::size_t design);

// min over designs of WorstStatePure; records argmin_design and the worst
// state of that design.
RatioValue PureMinimax(const GameInstance& inst);

// Lower bounds from a fixed adversary mixture: min over designs of the
// EOR / ROE objective. Both are <= PureMinimax(inst).value.
SolveResult EorLowerBound(const GameInstance& inst, const Distribution& dist);
SolveResult RoeLowerBound(const GameInstance& inst, const Distribution& dist);

// A supported element whose own ratio is at least the mixture's ratio of
// expectations.
struct DominanceWitness {
  std::size_t index = 0;
  double element_ratio = 0.0;  // s[index] / t[index]
  double mixture_ratio = 0.0;  // E[s] / E[t]
  // True when the numerator vector had zero entries. The guarantee is still
  // checked, but the positive-function hypothesis does not literally apply.
  bool zero_numerator = false;
  // element_ratio >= mixture_ratio - abs_tol.
  bool holds = false;
};

// Picks the maximal-ratio element among indices with dist[i] > 0 (lowest
// index on ties). svec may contain zeros (flagged); negative svec or
// non-positive tvec entries throw ValidationError.
DominanceWitness FindDominanceWitness(std::span<const double> svec,
                                      std::span<const double> tvec,
                                      const Distribution& dist,
                                      const ToleranceConfig& tol = {});

enum class Ordering { kLess, kEqual, kGreater };

struct FractionComparison {
  double a_ratio = 0.0;  // a1 / a2
  double b_ratio = 0.0;  // b1 / b2
  double mixed = 0.0;    // (kappa*a1 + b1) / (kappa*a2 + b2)
  Ordering a_vs_b = Ordering::kEqual;
  // A >= B implies A >= Q, and A == B implies A == Q (within abs_tol).
  bool holds = false;
};

// Compares the two fractions a1/a2 and b1/b2 with their kappa-weighted
// mediant. All inputs must be > 0.
FractionComparison CompareFractions(double kappa, double a1, double a2,
                                    double b1, double b2,
                                    const ToleranceConfig& tol = {});

enum class Trend { kIncreasing, kConstant, kDecreasing };

struct FractionMonotonicity {
  std::vector<double> samples;  // Q(kappa) on the grid
  Trend expected = Trend::kConstant;
  bool holds = false;
};

// Samples Q(kappa) = (kappa*a1 + b1)/(kappa*a2 + b2) on a strictly
// increasing grid (>= 2 points) and checks it is non-decreasing when
// a1/a2 > b1/b2, constant when equal, non-increasing when smaller.
FractionMonotonicity CheckFractionMonotonicity(
    double a1, double a2, double b1, double b2,
    std::span<const double> kappa_grid, const ToleranceConfig& tol = {});

// min_i a_i / b_i and the lowest index attaining it. This equals the
// minimum over all mixtures xi of (xi . a) / (xi . b).
std::pair<double, std::size_t> ActSecondMin(
    std::span<const std::pair<double, double>> pairs);

}  // namespace ratiobound

#endif  // RATIOBOUND_RATIO_CORE_HPP_
