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

#include "ratiobound/ratio_core.hpp"

#include <cmath>
#include <string>

#include "ratiobound/errors.hpp"

namespace ratiobound {
namespace {

void CheckDesign(const GameInstance& inst, std::size_t design) {
  if (design >= inst.num_designs()) {
    throw IndexError("design " + std::to_string(design) +
                     " out of range (instance has " +
                     std::to_string(inst.num_designs()) + " designs)");
  }
}

void CheckState(const GameInstance& inst, std::size_t state) {
  if (state >= inst.num_states()) {
    throw IndexError("state " + std::to_string(state) +
                     " out of range (instance has " +
                     std::to_string(inst.num_states()) + " states)");
  }
}

void CheckDist(const GameInstance& inst, const Distribution& dist) {
  if (dist.size() != inst.num_states()) {
    throw ValidationError("dimension mismatch: distribution over " +
                          std::to_string(dist.size()) +
                          " states, instance has " +
                          std::to_string(inst.num_states()));
  }
}

void RequirePositive(double x, const char* name) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw ValidationError(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

double RatioCost(const GameInstance& inst, std::size_t design,
                 std::size_t state) {
  CheckDesign(inst, design);
  CheckState(inst, state);
  return inst.benchmark()(design, state) / inst.algorithm()(design, state);
}

Matrix RatioMatrix(const GameInstance& inst) {
  Matrix r(inst.num_designs(), inst.num_states());
  for (std::size_t a = 0; a < r.rows(); ++a) {
    for (std::size_t s = 0; s < r.cols(); ++s) {
      r(a, s) = inst.benchmark()(a, s) / inst.algorithm()(a, s);
    }
  }
  return r;
}

double EorValue(const GameInstance& inst, std::size_t design,
                const Distribution& dist) {
  CheckDesign(inst, design);
  CheckDist(inst, dist);
  auto beta = inst.benchmark().row(design);
  auto alg = inst.algorithm().row(design);
  double total = 0.0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    total += dist[s] * (beta[s] / alg[s]);
  }
  return total;
}

double RoeValue(const GameInstance& inst, std::size_t design,
                const Distribution& dist) {
  CheckDesign(inst, design);
  CheckDist(inst, dist);
  auto beta = inst.benchmark().row(design);
  auto alg = inst.algorithm().row(design);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    num += dist[s] * beta[s];
    den += dist[s] * alg[s];
  }
  return num / den;
}

RatioValue WorstStatePure(const GameInstance& inst, std::size_t design) {
  CheckDesign(inst, design);
  RatioValue out;
  out.value = RatioCost(inst, design, 0);
  out.argmax_state = 0;
  for (std::size_t s = 1; s < inst.num_states(); ++s) {
    const double r = RatioCost(inst, design, s);
    if (r > out.value) {
      out.value = r;
      out.argmax_state = s;
    }
  }
  return out;
}

RatioValue PureMinimax(const GameInstance& inst) {
  RatioValue best = WorstStatePure(inst, 0);
  best.argmin_design = 0;
  for (std::size_t a = 1; a < inst.num_designs(); ++a) {
    RatioValue w = WorstStatePure(inst, a);
    if (w.value < best.value) {
      best = w;
      best.argmin_design = a;
    }
  }
  return best;
}

SolveResult EorLowerBound(const GameInstance& inst, const Distribution& dist) {
  CheckDist(inst, dist);
  SolveResult out{EorValue(inst, 0, dist), dist, 0, 0, 0.0};
  for (std::size_t a = 1; a < inst.num_designs(); ++a) {
    const double v = EorValue(inst, a, dist);
    if (v < out.value) {
      out.value = v;
      out.best_design = a;
    }
  }
  return out;
}

SolveResult RoeLowerBound(const GameInstance& inst, const Distribution& dist) {
  CheckDist(inst, dist);
  SolveResult out{RoeValue(inst, 0, dist), dist, 0, 0, 0.0};
  for (std::size_t a = 1; a < inst.num_designs(); ++a) {
    const double v = RoeValue(inst, a, dist);
    if (v < out.value) {
      out.value = v;
      out.best_design = a;
    }
  }
  return out;
}

DominanceWitness FindDominanceWitness(std::span<const double> svec,
                                      std::span<const double> tvec,
                                      const Distribution& dist,
                                      const ToleranceConfig& tol) {
  if (svec.size() != dist.size() || tvec.size() != dist.size()) {
    throw ValidationError("dominance witness: vectors and distribution differ "
                          "in length");
  }
  DominanceWitness out;
  double num = 0.0;
  double den = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!std::isfinite(svec[i]) || svec[i] < 0.0) {
      throw ValidationError("svec[" + std::to_string(i) +
                            "] must be finite and >= 0");
    }
    if (!std::isfinite(tvec[i]) || tvec[i] <= 0.0) {
      throw ValidationError("tvec[" + std::to_string(i) +
                            "] must be finite and > 0");
    }
    if (svec[i] == 0.0) out.zero_numerator = true;
    num += dist[i] * svec[i];
    den += dist[i] * tvec[i];
    if (dist[i] > 0.0) {
      const double r = svec[i] / tvec[i];
      if (!found || r > out.element_ratio) {
        out.index = i;
        out.element_ratio = r;
        found = true;
      }
    }
  }
  out.mixture_ratio = num / den;
  out.holds = out.element_ratio >= out.mixture_ratio - tol.abs_tol;
  return out;
}

FractionComparison CompareFractions(double kappa, double a1, double a2,
                                    double b1, double b2,
                                    const ToleranceConfig& tol) {
  RequirePositive(kappa, "kappa");
  RequirePositive(a1, "a1");
  RequirePositive(a2, "a2");
  RequirePositive(b1, "b1");
  RequirePositive(b2, "b2");
  FractionComparison out;
  out.a_ratio = a1 / a2;
  out.b_ratio = b1 / b2;
  out.mixed = (kappa * a1 + b1) / (kappa * a2 + b2);
  if (tol.Near(out.a_ratio, out.b_ratio)) {
    out.a_vs_b = Ordering::kEqual;
    out.holds = tol.Near(out.a_ratio, out.mixed);
  } else if (out.a_ratio > out.b_ratio) {
    out.a_vs_b = Ordering::kGreater;
    out.holds = tol.Geq(out.a_ratio, out.mixed);
  } else {
    // A < B: no guarantee is claimed, but the mediant still sits between them.
    out.a_vs_b = Ordering::kLess;
    out.holds = tol.Geq(out.mixed, out.a_ratio);
  }
  return out;
}

FractionMonotonicity CheckFractionMonotonicity(
    double a1, double a2, double b1, double b2,
    std::span<const double> kappa_grid, const ToleranceConfig& tol) {
  RequirePositive(a1, "a1");
  RequirePositive(a2, "a2");
  RequirePositive(b1, "b1");
  RequirePositive(b2, "b2");
  if (kappa_grid.size() < 2) {
    throw ValidationError("kappa grid needs at least 2 points");
  }
  for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
    RequirePositive(kappa_grid[i], "kappa");
    if (i > 0 && !(kappa_grid[i] > kappa_grid[i - 1])) {
      throw ValidationError("kappa grid must be strictly increasing");
    }
  }
  const double a = a1 / a2;
  const double b = b1 / b2;
  FractionMonotonicity out;
  if (tol.Near(a, b)) {
    out.expected = Trend::kConstant;
  } else {
    out.expected = a > b ? Trend::kIncreasing : Trend::kDecreasing;
  }
  for (double kappa : kappa_grid) {
    out.samples.push_back((kappa * a1 + b1) / (kappa * a2 + b2));
  }
  out.holds = true;
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    const double prev = out.samples[i - 1];
    const double cur = out.samples[i];
    switch (out.expected) {
      case Trend::kIncreasing:
        out.holds = out.holds && tol.Geq(cur, prev);
        break;
      case Trend::kDecreasing:
        out.holds = out.holds && tol.Geq(prev, cur);
        break;
      case Trend::kConstant:
        out.holds = out.holds && tol.Near(cur, out.samples.front());
        break;
    }
  }
  return out;
}

std::pair<double, std::size_t> ActSecondMin(
    std::span<const std::pair<double, double>> pairs) {
  if (pairs.empty()) throw ValidationError("act_second_min: empty pair list");
  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (!std::isfinite(a) || a <= 0.0 || !std::isfinite(b) || b <= 0.0) {
      throw ValidationError("pairs[" + std::to_string(i) +
                            "] must have both entries finite and > 0");
    }
    const double r = a / b;
    if (i == 0 || r < best) {
      best = r;
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace ratiobound
