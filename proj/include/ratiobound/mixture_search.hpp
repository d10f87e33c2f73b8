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

// Brute-force search over sampled adversary mixtures. This is the
// independent confirmation route for the closed-form inner maxima: for a
// fixed design no sampled mixture may push EOR or ROE above the worst pure
// state.
//
// Every kernel comes in a serial reference version and an OpenMP version.
// The two produce bit-identical results for any thread count: samples are
// drawn from a counter-based stream, and reductions keep the lowest sample
// index among equal maxima.

#ifndef RATIOBOUND_MIXTURE_SEARCH_HPP_
#define RATIOBOUND_MIXTURE_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratiobound/instance.hpp"
#include "ratiobound/matrix.hpp"

namespace ratiobound {

// `count` x `states` matrix; row k is a flat-Dirichlet mixture built from
// CounterUniform(seed, k * states + i).
Matrix SampleMixturesSerial(std::size_t states, std::size_t count,
                            std::uint64_t seed);
Matrix SampleMixturesParallel(std::size_t states, std::size_t count,
                              std::uint64_t seed);

// Per-design maxima over the sampled mixtures.
struct DesignSearch {
  double max_roe = 0.0;
  std::size_t roe_sample = 0;
  double max_eor = 0.0;
  std::size_t eor_sample = 0;
};

std::vector<DesignSearch> SearchMixturesSerial(const GameInstance& inst,
                                               const Matrix& mixtures);
std::vector<DesignSearch> SearchMixturesParallel(const GameInstance& inst,
                                                 const Matrix& mixtures);

// Minimum over the sampled mixtures of (xi . a) / (xi . b).
struct PairSearch {
  double min_ratio = 0.0;
  std::size_t sample = 0;
};
PairSearch SearchPairMixturesSerial(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    const Matrix& mixtures);
PairSearch SearchPairMixturesParallel(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      const Matrix& mixtures);

// Number of OpenMP threads the parallel kernels would use (1 without
// OpenMP).
int KernelThreads();

}  // namespace ratiobound

#endif  // RATIOBOUND_MIXTURE_SEARCH_HPP_
