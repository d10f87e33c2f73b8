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

#include "ratiobound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ratiobound/errors.hpp"
#include "ratiobound/random.hpp"

namespace ratiobound {
namespace {

using json = nlohmann::json;

void CheckSizes(int designs, int states) {
  if (designs < 1) throw ValidationError("designs must be >= 1");
  if (states < 1) throw ValidationError("states must be >= 1");
}

std::vector<std::string> Labels(const char* prefix, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string Shortest(double x) { return json(x).dump(); }

}  // namespace

GameInstance GenSkiRental(const SkiRentalParams& p) {
  if (p.buy_cost < 2) throw ValidationError("buy_cost must be >= 2");
  if (p.horizon < p.buy_cost + 1) {
    throw ValidationError("horizon must be >= buy_cost + 1");
  }
  const int b = p.buy_cost;
  const int h = p.horizon;
  Matrix benchmark(h + 1, h);
  Matrix algorithm(h + 1, h);
  std::vector<std::string> designs;
  std::vector<std::string> states;
  for (int i = 1; i <= h + 1; ++i) {
    designs.push_back(i == h + 1 ? "never-buy" : "buy-day-" + std::to_string(i));
    for (int j = 1; j <= h; ++j) {
      benchmark(i - 1, j - 1) = j < i ? j : (i - 1) + b;
      algorithm(i - 1, j - 1) = std::min(j, b);
    }
  }
  for (int j = 1; j <= h; ++j) states.push_back("stop-day-" + std::to_string(j));

  json meta = {{"kind", "ski_rental"},
               {"buy_cost", b},
               {"horizon", h},
               {"orientation", "benchmark=online cost, algorithm=offline "
                               "optimal cost"}};
  std::string name = "ski-rental b=" + std::to_string(b) +
                     " h=" + std::to_string(h) +
                     " (ratio = online cost / offline optimal cost)";
  return GameInstance::Create(std::move(name), std::move(designs),
                              std::move(states), std::move(benchmark),
                              std::move(algorithm),
                              {{"generator", meta.dump()}});
}

GameInstance GenRandom(int designs, int states, std::uint64_t seed, double lo,
                       double hi) {
  CheckSizes(designs, states);
  if (!(std::isfinite(lo) && lo > 0.0)) throw ValidationError("lo must be > 0");
  if (!(std::isfinite(hi) && hi > lo)) throw ValidationError("hi must be > lo");
  Prng rng(seed);
  Matrix benchmark(designs, states);
  Matrix algorithm(designs, states);
  for (int r = 0; r < designs; ++r) {
    for (int c = 0; c < states; ++c) benchmark(r, c) = UniformIn(rng, lo, hi);
  }
  for (int r = 0; r < designs; ++r) {
    for (int c = 0; c < states; ++c) algorithm(r, c) = UniformIn(rng, lo, hi);
  }
  json meta = {{"kind", "random"}, {"designs", designs}, {"states", states},
               {"seed", seed},     {"lo", lo},           {"hi", hi},
               {"prng", kPrngName}};
  std::ostringstream name;
  name << "random " << designs << "x" << states << " seed=" << seed
       << " lo=" << Shortest(lo) << " hi=" << Shortest(hi)
       << " prng=" << kPrngName;
  return GameInstance::Create(name.str(), Labels("d", designs),
                              Labels("s", states), std::move(benchmark),
                              std::move(algorithm),
                              {{"generator", meta.dump()}});
}

GameInstance GenConstantRatio(int designs, int states, double ratio,
                              std::uint64_t seed) {
  CheckSizes(designs, states);
  if (!(std::isfinite(ratio) && ratio > 0.0)) {
    throw ValidationError("ratio must be > 0");
  }
  Prng rng(seed);
  Matrix benchmark(designs, states);
  Matrix algorithm(designs, states);
  for (int r = 0; r < designs; ++r) {
    for (int c = 0; c < states; ++c) {
      algorithm(r, c) = UniformIn(rng, 1.0, 10.0);
      benchmark(r, c) = ratio * algorithm(r, c);
    }
  }
  json meta = {{"kind", "constant_ratio"}, {"designs", designs},
               {"states", states},         {"ratio", ratio},
               {"seed", seed},             {"prng", kPrngName}};
  std::ostringstream name;
  name << "constant-ratio " << designs << "x" << states
       << " c=" << Shortest(ratio) << " seed=" << seed
       << " prng=" << kPrngName;
  return GameInstance::Create(name.str(), Labels("d", designs),
                              Labels("s", states), std::move(benchmark),
                              std::move(algorithm),
                              {{"generator", meta.dump()}});
}

}  // namespace ratiobound
