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

// Numerical certification of the lower-bound chains on one instance:
//
//   ROE chain:  pure >= max_d min_a ROE_d(a) >= min_a ROE_dbar(a)
//   EOR chain:  pure >= max_d min_a EOR_d(a) >= min_a EOR_dbar(a)
//   weak:       pure == min_a max_d EOR_d(a) == min_a max_d ROE_d(a)
//   dominance:  some supported state's ratio >= ROE_d(a) for every (a, d)
//
// Each relation becomes a ChainCheck carrying lhs, rhs and slack = lhs - rhs.
// A ">=" check passes when slack >= -allowance, an "==" check when
// |slack| <= allowance. Solver failures mark the dependent checks
// "unverified" rather than failed.

#ifndef RATIOBOUND_VERIFIER_HPP_
#define RATIOBOUND_VERIFIER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ratiobound/instance.hpp"
#include "ratiobound/ratio_core.hpp"
#include "ratiobound/tolerance.hpp"

namespace ratiobound {

enum class CheckStatus { kPass, kFail, kUnverified };
enum class Relation { kGeq, kEq };

const char* ToString(CheckStatus s);
const char* ToString(Relation r);

struct ChainQuantity {
  std::string label;
  std::optional<double> value;  // empty when its solver failed
};

struct ChainCheck {
  std::string label;
  Relation relation = Relation::kGeq;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> slack;
  double allowance = 0.0;
  CheckStatus status = CheckStatus::kUnverified;
};

struct ChainReport {
  std::string chain;  // "roe_chain", "eor_chain", ...
  std::string instance_name;
  std::vector<ChainQuantity> quantities;
  std::vector<ChainCheck> checks;
  std::vector<std::string> notes;
  // Conjunction of every check passing.
  bool overall = false;

  bool any_failed() const;
  bool any_unverified() const;
};

// The solver entry points the chains call. Tests swap these for corrupted
// versions to confirm the checks can fail.
struct SolverSuite {
  std::function<SolveResult(const GameInstance&, const ToleranceConfig&)> eor;
  std::function<SolveResult(const GameInstance&, const ToleranceConfig&)> roe;

  static SolverSuite Default();
};

ChainReport CheckRoeChain(const GameInstance& inst,
                          const std::vector<Distribution>& fixed_dists,
                          const ToleranceConfig& tol,
                          const SolverSuite& solvers = SolverSuite::Default());

ChainReport CheckEorChain(const GameInstance& inst,
                          const std::vector<Distribution>& fixed_dists,
                          const ToleranceConfig& tol,
                          const SolverSuite& solvers = SolverSuite::Default());

struct WeakCheckOptions {
  // Confirm the closed-form inner maxima by sampling mixtures.
  bool deep = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

ChainReport CheckWeakEqualities(const GameInstance& inst,
                                const ToleranceConfig& tol,
                                const WeakCheckOptions& options = {});

ChainReport CheckDominance(const GameInstance& inst,
                           const std::vector<Distribution>& dists,
                           const ToleranceConfig& tol);

// Everything above, in a fixed order: roe_chain, eor_chain,
// weak_equalities, dominance.
std::vector<ChainReport> VerifyAll(
    const GameInstance& inst, const std::vector<Distribution>& dists,
    const ToleranceConfig& tol, const WeakCheckOptions& options = {},
    const SolverSuite& solvers = SolverSuite::Default());

}  // namespace ratiobound

#endif  // RATIOBOUND_VERIFIER_HPP_
