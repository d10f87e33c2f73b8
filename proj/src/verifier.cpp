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

#include "ratiobound/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>

#include "ratiobound/errors.hpp"
#include "ratiobound/game_solver.hpp"
#include "ratiobound/mixture_search.hpp"

namespace ratiobound {
namespace {

// Replaying a solver's mixture must reproduce its value within this many
// abs_tol.
constexpr double kCertificateFactor = 10.0;

ChainCheck MakeCheck(std::string label, Relation rel, double lhs, double rhs,
                     double allowance) {
  ChainCheck c;
  c.label = std::move(label);
  c.relation = rel;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.allowance = allowance;
  const bool ok = rel == Relation::kGeq ? *c.slack >= -allowance
                                        : std::abs(*c.slack) <= allowance;
  c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return c;
}

ChainCheck Compare(std::string label, Relation rel, double lhs, double rhs,
                   const ToleranceConfig& tol, double factor = 1.0) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return MakeCheck(std::move(label), rel, lhs, rhs,
                   factor * tol.Allowance(scale));
}

ChainCheck Unverified(std::string label, Relation rel,
                      std::optional<double> lhs, std::optional<double> rhs) {
  ChainCheck c;
  c.label = std::move(label);
  c.relation = rel;
  c.lhs = lhs;
  c.rhs = rhs;
  c.status = CheckStatus::kUnverified;
  return c;
}

void Finish(ChainReport& report) {
  report.overall = std::all_of(
      report.checks.begin(), report.checks.end(),
      [](const ChainCheck& c) { return c.status == CheckStatus::kPass; });
}

std::string DistLabel(const char* prefix, std::size_t k) {
  return std::string(prefix) + "[" + std::to_string(k) + "]";
}

// The EOR and ROE chains share their shape; only the objective differs.
ChainReport CheckChain(
    const char* chain, const char* objective, const GameInstance& inst,
    const std::vector<Distribution>& fixed_dists, const ToleranceConfig& tol,
    const std::function<SolveResult(const GameInstance&,
                                    const ToleranceConfig&)>& solver,
    SolveResult (*fixed_bound)(const GameInstance&, const Distribution&)) {
  ChainReport report;
  report.chain = chain;
  report.instance_name = inst.name();

  const std::string sup_inf = std::string(objective) + "_sup_inf";
  const std::string bound_prefix = std::string(objective) + "_bound";
  const double pure = PureMinimax(inst).value;

  std::optional<SolveResult> solved;
  try {
    solved = solver(inst, tol);
  } catch (const SolverFailure& e) {
    report.notes.push_back(std::string("solver failure: ") + e.what());
  }

  std::vector<double> bounds;
  bounds.reserve(fixed_dists.size());
  for (const Distribution& d : fixed_dists) {
    bounds.push_back(fixed_bound(inst, d).value);
  }

  report.quantities.push_back({"pure_minimax", pure});
  report.quantities.push_back(
      {sup_inf, solved ? std::optional<double>(solved->value) : std::nullopt});
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    report.quantities.push_back({DistLabel(bound_prefix.c_str(), k), bounds[k]});
  }

  if (solved) {
    report.checks.push_back(Compare("pure_minimax >= " + sup_inf,
                                    Relation::kGeq, pure, solved->value, tol));
    const double replay = fixed_bound(inst, solved->adversary_dist).value;
    report.checks.push_back(Compare(
        sup_inf + " == " + objective + "_bound(adversary_dist)", Relation::kEq,
        solved->value, replay, tol, kCertificateFactor));
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      report.checks.push_back(
          Compare(sup_inf + " >= " + DistLabel(bound_prefix.c_str(), k),
                  Relation::kGeq, solved->value, bounds[k], tol));
    }
  } else {
    report.checks.push_back(Unverified("pure_minimax >= " + sup_inf,
                                       Relation::kGeq, pure, std::nullopt));
    report.checks.push_back(
        Unverified(sup_inf + " == " + objective + "_bound(adversary_dist)",
                   Relation::kEq, std::nullopt, std::nullopt));
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      report.checks.push_back(
          Unverified(sup_inf + " >= " + DistLabel(bound_prefix.c_str(), k),
                     Relation::kGeq, std::nullopt, bounds[k]));
    }
  }
  Finish(report);
  return report;
}

void CheckDists(const GameInstance& inst,
                const std::vector<Distribution>& dists) {
  for (std::size_t k = 0; k < dists.size(); ++k) {
    if (dists[k].size() != inst.num_states()) {
      throw ValidationError(DistLabel("dist", k) + " has " +
                            std::to_string(dists[k].size()) +
                            " weights, instance has " +
                            std::to_string(inst.num_states()) + " states");
    }
  }
}

}  // namespace

const char* ToString(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kUnverified:
      return "unverified";
  }
  return "unverified";
}

const char* ToString(Relation r) { return r == Relation::kGeq ? ">=" : "=="; }

bool ChainReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const ChainCheck& c) {
    return c.status == CheckStatus::kFail;
  });
}

bool ChainReport::any_unverified() const {
  return std::any_of(checks.begin(), checks.end(), [](const ChainCheck& c) {
    return c.status == CheckStatus::kUnverified;
  });
}

SolverSuite SolverSuite::Default() {
  return SolverSuite{
      [](const GameInstance& i, const ToleranceConfig& t) {
        return BestAdversaryEor(i, t);
      },
      [](const GameInstance& i, const ToleranceConfig& t) {
        return BestAdversaryRoe(i, t);
      }};
}

ChainReport CheckRoeChain(const GameInstance& inst,
                          const std::vector<Distribution>& fixed_dists,
                          const ToleranceConfig& tol,
                          const SolverSuite& solvers) {
  CheckDists(inst, fixed_dists);
  return CheckChain("roe_chain", "roe", inst, fixed_dists, tol, solvers.roe,
                    &RoeLowerBound);
}

ChainReport CheckEorChain(const GameInstance& inst,
                          const std::vector<Distribution>& fixed_dists,
                          const ToleranceConfig& tol,
                          const SolverSuite& solvers) {
  CheckDists(inst, fixed_dists);
  return CheckChain("eor_chain", "eor", inst, fixed_dists, tol, solvers.eor,
                    &EorLowerBound);
}

ChainReport CheckWeakEqualities(const GameInstance& inst,
                                const ToleranceConfig& tol,
                                const WeakCheckOptions& options) {
  ChainReport report;
  report.chain = "weak_equalities";
  report.instance_name = inst.name();

  const std::size_t m = inst.num_designs();
  const std::size_t n = inst.num_states();
  const double pure = PureMinimax(inst).value;

  // EOR is linear in the mixture, so its inner max sits on a vertex.
  std::vector<double> eor_inner(m);
  std::vector<double> roe_inner(m);
  std::vector<std::size_t> roe_witness(m);
  for (std::size_t a = 0; a < m; ++a) {
    double best = EorValue(inst, a, PointMass(0, n));
    for (std::size_t s = 1; s < n; ++s) {
      best = std::max(best, EorValue(inst, a, PointMass(s, n)));
    }
    eor_inner[a] = best;
    std::tie(roe_inner[a], roe_witness[a]) = AdversarySupRoeFixedDesign(inst, a);
  }
  const double minmax_eor = *std::min_element(eor_inner.begin(), eor_inner.end());
  const double minmax_roe = *std::min_element(roe_inner.begin(), roe_inner.end());

  report.quantities.push_back({"pure_minimax", pure});
  report.quantities.push_back({"minmax_eor", minmax_eor});
  report.quantities.push_back({"minmax_roe", minmax_roe});
  report.checks.push_back(Compare("pure_minimax == minmax_eor", Relation::kEq,
                                  pure, minmax_eor, tol));
  report.checks.push_back(Compare("pure_minimax == minmax_roe", Relation::kEq,
                                  pure, minmax_roe, tol));
  report.checks.push_back(Compare("minmax_eor == minmax_roe", Relation::kEq,
                                  minmax_eor, minmax_roe, tol));

  if (options.deep) {
    const Matrix mixtures =
        SampleMixturesParallel(n, options.samples, options.seed);
    const auto found = SearchMixturesParallel(inst, mixtures);
    for (std::size_t a = 0; a < m; ++a) {
      const std::string design = inst.designs()[a];
      report.checks.push_back(Compare(
          "design " + design + ": inner_max_eor >= sampled_max_eor",
          Relation::kGeq, eor_inner[a], found[a].max_eor, tol));
      report.checks.push_back(Compare(
          "design " + design + ": inner_max_roe >= sampled_max_roe",
          Relation::kGeq, roe_inner[a], found[a].max_roe, tol));
      report.checks.push_back(MakeCheck(
          "design " + design + ": roe(point_mass(" +
              inst.states()[roe_witness[a]] + ")) == inner_max_roe",
          Relation::kEq, RoeValue(inst, a, PointMass(roe_witness[a], n)),
          roe_inner[a], 0.0));
    }
    report.notes.push_back("deep: " + std::to_string(options.samples) +
                           " sampled mixtures, seed " +
                           std::to_string(options.seed));
  }
  Finish(report);
  return report;
}

ChainReport CheckDominance(const GameInstance& inst,
                           const std::vector<Distribution>& dists,
                           const ToleranceConfig& tol) {
  CheckDists(inst, dists);
  ChainReport report;
  report.chain = "dominance";
  report.instance_name = inst.name();

  const std::size_t m = inst.num_designs();
  const std::size_t pairs = m * dists.size();
  std::vector<DominanceWitness> witnesses(pairs);
  const auto count = static_cast<std::int64_t>(pairs);
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < count; ++p) {
    const std::size_t a = static_cast<std::size_t>(p) / dists.size();
    const std::size_t k = static_cast<std::size_t>(p) % dists.size();
    witnesses[p] = FindDominanceWitness(inst.benchmark().row(a),
                                        inst.algorithm().row(a), dists[k], tol);
  }

  bool zero_numerator = false;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t a = p / dists.size();
    const std::size_t k = p % dists.size();
    const DominanceWitness& w = witnesses[p];
    zero_numerator = zero_numerator || w.zero_numerator;
    report.checks.push_back(MakeCheck(
        "design " + inst.designs()[a] + ", " + DistLabel("dist", k) +
            ": ratio(" + inst.states()[w.index] + ") >= roe",
        Relation::kGeq, w.element_ratio, w.mixture_ratio, tol.abs_tol));
  }
  if (zero_numerator) {
    report.notes.push_back(
        "benchmark rows contain zeros; the dominance guarantee is checked but "
        "the positive-numerator hypothesis does not literally apply");
  }
  Finish(report);
  return report;
}

std::vector<ChainReport> VerifyAll(const GameInstance& inst,
                                   const std::vector<Distribution>& dists,
                                   const ToleranceConfig& tol,
                                   const WeakCheckOptions& options,
                                   const SolverSuite& solvers) {
  tol.Validate();
  std::vector<ChainReport> out;
  out.push_back(CheckRoeChain(inst, dists, tol, solvers));
  out.push_back(CheckEorChain(inst, dists, tol, solvers));
  out.push_back(CheckWeakEqualities(inst, tol, options));
  out.push_back(CheckDominance(inst, dists, tol));
  return out;
}

}  // namespace ratiobound
