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

#include "ratiobound/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ratiobound/errors.hpp"
#include "ratiobound/game_solver.hpp"
#include "ratiobound/generators.hpp"
#include "ratiobound/instance.hpp"
#include "ratiobound/random.hpp"
#include "ratiobound/ratio_core.hpp"
#include "ratiobound/report.hpp"
#include "ratiobound/verifier.hpp"

namespace ratiobound::cli {
namespace {

enum class Format { kJson, kText };

struct Config {
  std::string instance_path;
  std::vector<std::string> dist_paths;
  std::string objective = "pure";
  std::optional<double> tol;
  std::optional<double> lp_tol;
  std::optional<int> max_iters;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  int random_dists = 0;
  bool deep = false;
  std::size_t samples = 100000;

  // gen
  int buy = 2;
  int horizon = 3;
  int designs = 2;
  int states = 2;
  double lo = 0.1;
  double hi = 10.0;
  double ratio = 1.0;
};

ToleranceConfig Tolerances(const Config& cfg) {
  ToleranceConfig tol;
  if (cfg.tol) tol.abs_tol = *cfg.tol;
  if (cfg.lp_tol) tol.lp_tol = *cfg.lp_tol;
  if (cfg.max_iters) tol.max_bisection_iters = *cfg.max_iters;
  tol.Validate();
  return tol;
}

ReportJson DistJson(const Distribution& d) {
  ReportJson arr = ReportJson::array();
  for (double w : d.weights()) arr.push_back(RoundSig12(w));
  return arr;
}

// Writes the report to --out or the stream.
void Emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write \"" + cfg.out_path + "\"");
  file << text;
}

std::string RenderFlat(const Config& cfg, const ReportJson& doc) {
  return cfg.format == "text" ? RenderJsonText(doc) : doc.dump(2) + "\n";
}

int CmdSolve(const Config& cfg, std::ostream& out) {
  const ToleranceConfig tol = Tolerances(cfg);
  const GameInstance inst = LoadInstanceFile(cfg.instance_path);
  ReportJson doc;
  doc["command"] = "solve";
  doc["instance"] = inst.name();
  doc["objective"] = cfg.objective;
  if (cfg.objective == "pure") {
    const RatioValue v = PureMinimax(inst);
    doc["value"] = RoundSig12(v.value);
    doc["best_design"] = *v.argmin_design;
    doc["best_design_label"] = inst.designs()[*v.argmin_design];
    doc["worst_state"] = *v.argmax_state;
    doc["worst_state_label"] = inst.states()[*v.argmax_state];
    doc["diagnostics"] = {{"iterations", 0}, {"residual", 0.0}};
  } else {
    const SolveResult r = cfg.objective == "eor" ? BestAdversaryEor(inst, tol)
                                                 : BestAdversaryRoe(inst, tol);
    doc["value"] = RoundSig12(r.value);
    doc["best_design"] = r.best_design;
    doc["best_design_label"] = inst.designs()[r.best_design];
    doc["adversary_dist"] = DistJson(r.adversary_dist);
    if (cfg.objective == "roe") {
      doc["lambda"] = RoundSig12(r.value);
      doc["g_residual"] = RoundSig12(r.residual);
    }
    doc["diagnostics"] = {{"iterations", r.iterations},
                          {"residual", RoundSig12(r.residual)}};
  }
  Emit(cfg, RenderFlat(cfg, doc), out);
  return kSuccess;
}

int CmdBound(const Config& cfg, std::ostream& out) {
  Tolerances(cfg);
  const GameInstance inst = LoadInstanceFile(cfg.instance_path);
  const double pure = PureMinimax(inst).value;
  ReportJson doc;
  doc["command"] = "bound";
  doc["instance"] = inst.name();
  doc["pure_minimax"] = RoundSig12(pure);
  doc["bounds"] = ReportJson::array();
  bool pass = true;
  for (const std::string& path : cfg.dist_paths) {
    const Distribution d = LoadDistributionFile(path, inst.num_states());
    const SolveResult eor = EorLowerBound(inst, d);
    const SolveResult roe = RoeLowerBound(inst, d);
    const bool ok = eor.value <= pure && roe.value <= pure;
    pass = pass && ok;
    ReportJson entry;
    entry["dist"] = path;
    entry["eor_bound"] = RoundSig12(eor.value);
    entry["eor_design"] = eor.best_design;
    entry["eor_design_label"] = inst.designs()[eor.best_design];
    entry["roe_bound"] = RoundSig12(roe.value);
    entry["roe_design"] = roe.best_design;
    entry["roe_design_label"] = inst.designs()[roe.best_design];
    entry["below_pure"] = ok;
    doc["bounds"].push_back(std::move(entry));
  }
  doc["pass"] = pass;
  Emit(cfg, RenderFlat(cfg, doc), out);
  return pass ? kSuccess : kVerificationFailure;
}

int CmdVerify(const Config& cfg, std::ostream& out) {
  const ToleranceConfig tol = Tolerances(cfg);
  const GameInstance inst = LoadInstanceFile(cfg.instance_path);
  std::vector<Distribution> dists;
  for (const std::string& path : cfg.dist_paths) {
    dists.push_back(LoadDistributionFile(path, inst.num_states()));
  }
  const std::uint64_t seed = cfg.seed.value_or(0);
  if (cfg.random_dists > 0) {
    Prng rng(seed);
    for (int k = 0; k < cfg.random_dists; ++k) {
      dists.push_back(RandomDistribution(rng, inst.num_states()));
    }
  }
  if (dists.empty()) {
    std::vector<double> uniform(inst.num_states(),
                                1.0 / static_cast<double>(inst.num_states()));
    dists.push_back(MakeDistribution(uniform, inst.num_states()));
  }
  WeakCheckOptions options;
  options.deep = cfg.deep;
  options.samples = cfg.samples;
  options.seed = seed;
  const auto reports = VerifyAll(inst, dists, tol, options);

  bool failed = false;
  bool unverified = false;
  for (const auto& r : reports) {
    failed = failed || r.any_failed();
    unverified = unverified || r.any_unverified();
  }
  std::string text;
  if (cfg.format == "text") {
    for (const auto& r : reports) text += RenderChainReportText(r);
    text += std::string("overall: ") +
            (failed ? "FAIL" : unverified ? "UNVERIFIED" : "pass") + "\n";
  } else {
    ReportJson doc;
    doc["command"] = "verify";
    doc["instance"] = inst.name();
    doc["distributions"] = ReportJson::array();
    for (const auto& d : dists) doc["distributions"].push_back(DistJson(d));
    doc["reports"] = ReportJson::array();
    for (const auto& r : reports) doc["reports"].push_back(ChainReportToJson(r));
    doc["overall"] = !failed && !unverified;
    text = doc.dump(2) + "\n";
  }
  Emit(cfg, text, out);
  if (unverified) return kSolverFailure;
  return failed ? kVerificationFailure : kSuccess;
}

int CmdGen(const std::string& kind, const Config& cfg, std::ostream& out,
           std::ostream& err) {
  std::optional<GameInstance> inst;
  if (kind == "ski") {
    inst = GenSkiRental(SkiRentalParams{cfg.buy, cfg.horizon});
  } else if (kind == "random") {
    inst = GenRandom(cfg.designs, cfg.states, cfg.seed.value_or(0), cfg.lo,
                     cfg.hi);
  } else {
    inst = GenConstantRatio(cfg.designs, cfg.states, cfg.ratio,
                            cfg.seed.value_or(0));
  }
  const std::string summary =
      "designs=" + std::to_string(inst->num_designs()) +
      " states=" + std::to_string(inst->num_states()) +
      " pure=" + FormatSig12(PureMinimax(*inst).value) + "\n";
  const std::string text = SerializeInstance(*inst);
  if (cfg.out_path.empty()) {
    out << text;
    err << summary;
  } else {
    Emit(cfg, text, out);
    out << summary;
  }
  return kSuccess;
}

void AddShared(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--tol", cfg.tol, "Absolute tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lp-tol", cfg.lp_tol, "LP certificate tolerance (1e-10)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", cfg.max_iters, "Bisection iteration limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out_path, "Write the report here");
  cmd->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app("Minimax lower bounds for ratio-cost worst-case problems",
               "ratiobound");
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Pure, EOR or ROE value");
  solve->add_option("instance", cfg.instance_path, "Instance JSON")->required();
  solve->add_option("--objective", cfg.objective, "pure, eor or roe")
      ->check(CLI::IsMember({"pure", "eor", "roe"}));
  AddShared(solve, cfg);

  CLI::App* bound = app.add_subcommand("bound", "Bounds from fixed mixtures");
  bound->add_option("instance", cfg.instance_path, "Instance JSON")->required();
  bound->add_option("--dist", cfg.dist_paths, "Distribution JSON")->required();
  AddShared(bound, cfg);

  CLI::App* verify = app.add_subcommand("verify", "Check every bound chain");
  verify->add_option("instance", cfg.instance_path, "Instance JSON")->required();
  verify->add_option("--dist", cfg.dist_paths, "Distribution JSON");
  verify->add_option("--random-dists", cfg.random_dists,
                     "Add K seeded random mixtures")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "Seed for random mixtures");
  verify->add_flag("--deep", cfg.deep, "Confirm inner maxima by sampling");
  verify->add_option("--samples", cfg.samples, "Mixtures sampled by --deep")
      ->check(CLI::PositiveNumber);
  AddShared(verify, cfg);

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  CLI::App* ski = gen->add_subcommand("ski", "Ski rental");
  ski->add_option("--buy", cfg.buy, "Buy cost b >= 2")->required();
  ski->add_option("--horizon", cfg.horizon, "Days, >= b + 1")->required();
  ski->add_option("--out", cfg.out_path, "Write the instance here");
  CLI::App* random = gen->add_subcommand("random", "Uniform random entries");
  random->add_option("--designs", cfg.designs)->required();
  random->add_option("--states", cfg.states)->required();
  random->add_option("--seed", cfg.seed)->required();
  random->add_option("--lo", cfg.lo);
  random->add_option("--hi", cfg.hi);
  random->add_option("--out", cfg.out_path, "Write the instance here");
  CLI::App* constant = gen->add_subcommand("const", "Constant ratio");
  constant->add_option("--ratio", cfg.ratio)->required();
  constant->add_option("--designs", cfg.designs);
  constant->add_option("--states", cfg.states);
  constant->add_option("--seed", cfg.seed);
  constant->add_option("--out", cfg.out_path, "Write the instance here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (solve->parsed()) return CmdSolve(cfg, out);
    if (bound->parsed()) return CmdBound(cfg, out);
    if (verify->parsed()) return CmdVerify(cfg, out);
    const std::string kind =
        ski->parsed() ? "ski" : random->parsed() ? "random" : "const";
    return CmdGen(kind, cfg, out, err);
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << " (iterations=" << e.iterations()
        << ", residual=" << e.residual() << ")\n";
    return kSolverFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ratiobound::cli
