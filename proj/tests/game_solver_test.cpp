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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "ratiobound/errors.hpp"
#include "ratiobound/game_solver.hpp"
#include "ratiobound/generators.hpp"
#include "ratiobound/random.hpp"

namespace ratiobound {
namespace {

oracle::Rows ToRows(const Matrix& m) { return m.ToRows(); }

GameInstance Make(const oracle::Rows& beta, const oracle::Rows& alg) {
  std::vector<std::string> designs, states;
  for (std::size_t i = 0; i < beta.size(); ++i) designs.push_back("d" + std::to_string(i));
  for (std::size_t j = 0; j < beta[0].size(); ++j) states.push_back("s" + std::to_string(j));
  return GameInstance::Create("t", designs, states, Matrix::FromRows(beta),
                              Matrix::FromRows(alg));
}

TEST_CASE("2x2 example with a dominant design") {
  GameInstance inst = Make({{4, 2}, {3, 6}}, {{10, 5}, {3, 2}});
  SolveResult eor = BestAdversaryEor(inst);
  CHECK(eor.value == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(eor.best_design == 0);
  SolveResult roe = BestAdversaryRoe(inst);
  CHECK(roe.value == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(roe.best_design == 0);
}

TEST_CASE("ski rental b=2 h=3 against grid oracles") {
  GameInstance ski = GenSkiRental({2, 3});
  oracle::Rows beta, alg;
  oracle::SkiTables(2, 3, beta, alg);
  const oracle::Rows ratios = oracle::Ratios(beta, alg);

  oracle::GridBest eor_grid = oracle::GridSearchSimplex(
      3, 1000, [&](const std::vector<double>& d) { return oracle::EorObjective(ratios, d); });
  oracle::GridBest roe_grid = oracle::GridSearchSimplex(
      3, 1000, [&](const std::vector<double>& d) { return oracle::RoeObjective(beta, alg, d); });
  // The grid contains the optimum (1/3, 0, 2/3) only approximately.
  CHECK(std::abs(eor_grid.value - 4.0 / 3.0) <= 1e-3);
  CHECK(std::abs(roe_grid.value - 4.0 / 3.0) <= 1e-3);
  CHECK(std::abs(oracle::SupportEnumeration(ratios).value - 4.0 / 3.0) <= 1e-12);

  SolveResult eor = BestAdversaryEor(ski);
  CHECK(std::abs(eor.value - 4.0 / 3.0) <= 1e-6);
  CHECK(eor.adversary_dist[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(eor.adversary_dist[1] == doctest::Approx(0.0));
  CHECK(eor.adversary_dist[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  SolveResult roe = BestAdversaryRoe(ski);
  CHECK(std::abs(roe.value - 4.0 / 3.0) <= 1e-6);
  CHECK(roe.adversary_dist[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(roe.adversary_dist[1] <= 1e-9);
  CHECK(roe.adversary_dist[2] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(RoeLowerBound(ski, roe.adversary_dist).value - roe.value) <= 1e-12);
}

TEST_CASE("ski rental b=2 h=3 designer mix from the dual") {
  GameInstance ski = GenSkiRental({2, 3});
  GameSolution g = SolveZeroSum(RatioMatrix(ski));
  // Thresholds {1, never} also guarantee 4/3; the pivot rule lands on {1, 2}.
  CHECK(g.upper == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(g.minimizer_mix[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(g.minimizer_mix[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(g.minimizer_mix[2] == 0.0);
  CHECK(g.minimizer_mix[3] == 0.0);
  const oracle::Rows r = RatioMatrix(ski).ToRows();
  for (std::size_t c = 0; c < 3; ++c) {
    double e = 0.0;
    for (std::size_t a = 0; a < 4; ++a) e += g.minimizer_mix[a] * r[a][c];
    CHECK(e <= 4.0 / 3.0 + 1e-12);
  }
}

TEST_CASE("ski rental b=4 h=8 against vertex enumeration") {
  oracle::Rows beta, alg;
  oracle::SkiTables(4, 8, beta, alg);
  const oracle::Rows ratios = oracle::Ratios(beta, alg);
  const double golden = 256.0 / 175.0;
  CHECK(std::abs(oracle::SupportEnumeration(ratios).value - golden) <= 1e-12);
  oracle::Bracket hedge = oracle::HedgeBracket(ratios, 20000);
  CHECK(hedge.lower <= golden + 1e-12);
  CHECK(hedge.upper >= golden - 1e-12);

  GameInstance ski = GenSkiRental({4, 8});
  SolveResult eor = BestAdversaryEor(ski);
  CHECK(std::abs(eor.value - golden) <= 1e-6);
  CHECK(eor.value >= hedge.lower);
  CHECK(eor.value <= hedge.upper);
  // Offline costs do not depend on the design, so both objectives agree.
  SolveResult roe = BestAdversaryRoe(ski);
  CHECK(std::abs(roe.value - golden) <= 1e-6);
}

TEST_CASE("ski rental closed form over several buy costs") {
  for (int b = 2; b <= 6; ++b) {
    GameInstance ski = GenSkiRental({b, 2 * b});
    const double closed = 1.0 / (1.0 - std::pow(1.0 - 1.0 / b, b));
    CHECK(std::abs(BestAdversaryEor(ski).value - closed) <= 1e-6);
    CHECK(std::abs(PureMinimax(ski).value - (2.0 - 1.0 / b)) <= 1e-12);
  }
}

TEST_CASE("random instances match independent oracles") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int m = 1 + seed % 4;
    const int n = 1 + (seed / 4) % 4;
    GameInstance inst = GenRandom(m, n, seed, 0.1, 10.0);
    const oracle::Rows beta = ToRows(inst.benchmark());
    const oracle::Rows alg = ToRows(inst.algorithm());
    SolveResult eor = BestAdversaryEor(inst);
    CHECK(std::abs(eor.value - oracle::SupportEnumeration(oracle::Ratios(beta, alg)).value) <= 1e-9);
    SolveResult roe = BestAdversaryRoe(inst);
    CHECK(std::abs(roe.value - oracle::RoeByBisection(beta, alg, 60)) <= 1e-8);
    // Reported adversaries replay exactly.
    CHECK(EorLowerBound(inst, eor.adversary_dist).value == eor.value);
    CHECK(RoeLowerBound(inst, roe.adversary_dist).value == roe.value);
    CHECK(roe.residual <= 1e-9);
  }
}

TEST_CASE("parametric game is decreasing in lambda and vanishes at the value") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    GameInstance inst = GenRandom(3, 4, seed, 0.1, 10.0);
    const double lam = BestAdversaryRoe(inst).value;
    double prev = INFINITY;
    for (double x : {0.25 * lam, 0.5 * lam, lam, 1.5 * lam, 2.0 * lam}) {
      const double g = ParametricGame(inst, x).value;
      CHECK(g < prev);
      prev = g;
    }
    CHECK(std::abs(ParametricGame(inst, lam).value) <= 1e-9);
  }
}

TEST_CASE("linearized payoff") {
  GameInstance inst = Make({{4, 2}, {3, 6}}, {{10, 5}, {3, 2}});
  Matrix p = LinearizedPayoff(inst, 0.5);
  CHECK(p(0, 0) == -1.0);
  CHECK(p(1, 1) == 5.0);
}

TEST_CASE("constant ratio instances solve to the constant") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GameInstance c = GenConstantRatio(4, 5, 1.7, seed);
    CHECK(BestAdversaryEor(c).value == doctest::Approx(1.7).epsilon(1e-9));
    CHECK(BestAdversaryRoe(c).value == doctest::Approx(1.7).epsilon(1e-9));
  }
}

TEST_CASE("fixed-design adversary sup is the pure worst state") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GameInstance inst = GenRandom(3, 5, seed, 0.1, 10.0);
    Prng rng(seed);
    for (std::size_t a = 0; a < 3; ++a) {
      auto [sup, state] = AdversarySupRoeFixedDesign(inst, a);
      CHECK(sup == WorstStatePure(inst, a).value);
      CHECK(RoeValue(inst, a, PointMass(state, 5)) == sup);
      for (int k = 0; k < 200; ++k) {
        CHECK(RoeValue(inst, a, RandomDistribution(rng, 5)) <= sup + 1e-12);
      }
    }
  }
}

TEST_CASE("tolerance limits are enforced") {
  GameInstance inst = GenRandom(4, 4, 3, 0.1, 10.0);
  ToleranceConfig tol;
  tol.max_bisection_iters = 1;
  tol.abs_tol = 1e-15;
  CHECK_THROWS_AS(BestAdversaryRoe(inst, tol), SolverFailure);
}

}  // namespace
}  // namespace ratiobound
