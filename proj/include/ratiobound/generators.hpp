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

#ifndef RATIOBOUND_GENERATORS_HPP_
#define RATIOBOUND_GENERATORS_HPP_

#include <cstdint>

#include "ratiobound/instance.hpp"

namespace ratiobound {

struct SkiRentalParams {
  int buy_cost = 2;  // b >= 2
  int horizon = 3;   // >= b + 1 days
};

// Rent-or-buy as a ratio-cost instance. Design i in 1..horizon+1 buys at the
// start of day i (horizon+1 = never buy); state j in 1..horizon is the day
// skiing stops. The ratio is online cost over offline optimal cost:
//   benchmark(i, j) = j            if j < i
//                   = i - 1 + b    otherwise
//   algorithm(i, j) = min(j, b)
// so benchmark sits in the numerator here even though it is the designer's
// own cost. Metadata lands in the "generator" extra key.
GameInstance GenSkiRental(const SkiRentalParams& p);

// Benchmark and algorithm entries i.i.d. uniform on (lo, hi), drawn row-major
// (all of benchmark, then all of algorithm) from mt19937_64(seed).
GameInstance GenRandom(int designs, int states, std::uint64_t seed, double lo,
                       double hi);

// Algorithm entries uniform on (1, 10) from mt19937_64(seed) and
// benchmark = ratio * algorithm, so every ratio equals `ratio` up to rounding.
GameInstance GenConstantRatio(int designs, int states, double ratio,
                              std::uint64_t seed);

}  // namespace ratiobound

#endif  // RATIOBOUND_GENERATORS_HPP_
