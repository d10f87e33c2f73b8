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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "ratiobound/errors.hpp"
#include "ratiobound/generators.hpp"
#include "ratiobound/ratio_core.hpp"

namespace ratiobound {
namespace {

TEST_CASE("ski rental b=2 h=3 tables") {
  GameInstance ski = GenSkiRental({2, 3});
  CHECK(ski.num_designs() == 4);
  CHECK(ski.num_states() == 3);
  CHECK(ski.benchmark().ToRows() ==
        std::vector<std::vector<double>>{{2, 2, 2}, {1, 3, 3}, {1, 2, 4}, {1, 2, 3}});
  for (std::size_t a = 0; a < 4; ++a) {
    CHECK(ski.algorithm().ToRows()[a] == std::vector<double>{1, 2, 2});
  }
  CHECK(ski.designs().front() == "buy-day-1");
  CHECK(ski.designs().back() == "never-buy");
  CHECK(ski.states().back() == "stop-day-3");
  CHECK(PureMinimax(ski).value == 1.5);
  CHECK(ski.name().find("online") != std::string::npos);
}

TEST_CASE("ski rental matches the directly written tables") {
  for (int b = 2; b <= 6; ++b) {
    for (int h = b + 1; h <= 2 * b + 2; ++h) {
      GameInstance ski = GenSkiRental({b, h});
      oracle::Rows beta, alg;
      oracle::SkiTables(b, h, beta, alg);
      CHECK(ski.benchmark().ToRows() == beta);
      CHECK(ski.algorithm().ToRows() == alg);
      // Buying on day b costs 2 - 1/b; never buying costs h/b, which wins on
      // short horizons.
      RatioValue pure = PureMinimax(ski);
      CHECK(pure.value == std::min(2.0 - 1.0 / b, double(h) / b));
      if (h >= 2 * b - 1) {
        CHECK(pure.value == 2.0 - 1.0 / b);
        CHECK(*pure.argmin_design == static_cast<std::size_t>(b - 1));
      }
    }
  }
}

TEST_CASE("ski rental rejects bad parameters") {
  CHECK_THROWS_AS(GenSkiRental({1, 3}), ValidationError);
  CHECK_THROWS_AS(GenSkiRental({3, 3}), ValidationError);
}

TEST_CASE("random generator is deterministic and in range") {
  GameInstance a = GenRandom(5, 7, 42, 0.1, 10.0);
  GameInstance b = GenRandom(5, 7, 42, 0.1, 10.0);
  CHECK(a == b);
  CHECK(SerializeInstance(a) == SerializeInstance(b));
  CHECK_FALSE(a == GenRandom(5, 7, 43, 0.1, 10.0));
  for (double x : a.benchmark().data()) {
    CHECK(x > 0.1);
    CHECK(x < 10.0);
  }
  for (double x : a.algorithm().data()) {
    CHECK(x > 0.1);
    CHECK(x < 10.0);
  }
  auto meta = nlohmann::json::parse(a.extras().at("generator"));
  CHECK(meta.at("seed") == 42);
  CHECK(meta.at("prng") == "mt19937_64");
  CHECK(a.name().find("seed=42") != std::string::npos);
}

TEST_CASE("random generator rejects bad ranges") {
  CHECK_THROWS_AS(GenRandom(0, 3, 1, 0.1, 10.0), ValidationError);
  CHECK_THROWS_AS(GenRandom(2, 3, 1, 0.0, 10.0), ValidationError);
  CHECK_THROWS_AS(GenRandom(2, 3, 1, 5.0, 5.0), ValidationError);
}

TEST_CASE("constant ratio generator") {
  for (double c : {0.25, 1.0, 3.5}) {
    GameInstance inst = GenConstantRatio(4, 6, c, 9);
    Matrix r = RatioMatrix(inst);
    for (double x : r.data()) CHECK(x == doctest::Approx(c).epsilon(1e-14));
  }
  CHECK_THROWS_AS(GenConstantRatio(2, 2, 0.0, 1), ValidationError);
  CHECK(GenConstantRatio(2, 3, 2.0, 5) == GenConstantRatio(2, 3, 2.0, 5));
}

}  // namespace
}  // namespace ratiobound
