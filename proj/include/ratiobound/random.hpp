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

// Platform-stable randomness. std::mt19937_64 output is fixed by the
// standard, but the std:: distributions are not, so doubles are formed from
// raw bits here.

#ifndef RATIOBOUND_RANDOM_HPP_
#define RATIOBOUND_RANDOM_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ratiobound/instance.hpp"

namespace ratiobound {

inline constexpr const char* kPrngName = "mt19937_64";

using Prng = std::mt19937_64;

// Uniform on the open interval (0, 1) from the top 53 bits.
inline double BitsToOpenUnit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

inline double UniformOpen(Prng& rng) { return BitsToOpenUnit(rng()); }

inline double UniformIn(Prng& rng, double lo, double hi) {
  return lo + (hi - lo) * UniformOpen(rng);
}

// Stateless SplitMix64 finalizer. Hashing (seed, counter) gives each sample
// its own stream, so parallel and serial loops draw identical numbers.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline double CounterUniform(std::uint64_t seed, std::uint64_t counter) {
  return BitsToOpenUnit(SplitMix64(SplitMix64(seed) + counter));
}

// Uniform draw from the probability simplex (flat Dirichlet) of size n.
inline std::vector<double> SampleSimplex(Prng& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(UniformOpen(rng));
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

inline Distribution RandomDistribution(Prng& rng, std::size_t n) {
  return MakeDistribution(SampleSimplex(rng, n), n);
}

}  // namespace ratiobound

#endif  // RATIOBOUND_RANDOM_HPP_
