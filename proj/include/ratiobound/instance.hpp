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

#ifndef RATIOBOUND_INSTANCE_HPP_
#define RATIOBOUND_INSTANCE_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratiobound/matrix.hpp"

namespace ratiobound {

// A finite worst-case minimization problem with ratio cost
// c(design, state) = benchmark(design, state) / algorithm(design, state).
//
// Invariants (checked by Create):
//   * benchmark and algorithm are both m x n with m, n >= 1;
//   * every benchmark entry is finite and >= 0;
//   * every algorithm entry is finite and > 0, so every ratio is finite;
//   * |designs| == m and |states| == n.
//
// Instances are immutable once built and safe to share across threads.
class GameInstance {
 public:
  // Top-level JSON keys the loader did not recognise, stored as serialized
  // JSON text so they survive a load/serialize round trip.
  using Extras = std::map<std::string, std::string>;

  static GameInstance Create(std::string name, std::vector<std::string> designs,
                             std::vector<std::string> states, Matrix benchmark,
                             Matrix algorithm, Extras extras = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& designs() const { return designs_; }
  const std::vector<std::string>& states() const { return states_; }
  const Matrix& benchmark() const { return benchmark_; }
  const Matrix& algorithm() const { return algorithm_; }
  const Extras& extras() const { return extras_; }

  std::size_t num_designs() const { return benchmark_.rows(); }
  std::size_t num_states() const { return benchmark_.cols(); }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  GameInstance() = default;

  std::string name_;
  std::vector<std::string> designs_;
  std::vector<std::string> states_;
  Matrix benchmark_;
  Matrix algorithm_;
  Extras extras_;
};

// Parses the instance JSON format:
//   { "name": str, "designs": [str...], "states": [str...],
//     "benchmark": [[num...]...], "algorithm": [[num...]...] }
// Throws ParseError on malformed text, ValidationError on invariant breaks.
GameInstance LoadInstance(std::istream& source);
GameInstance LoadInstance(std::string_view text);
GameInstance LoadInstanceFile(const std::string& path);

// Serializes to the instance JSON format. Doubles are written in shortest
// round-trip form, so LoadInstance(SerializeInstance(x)) == x.
std::string SerializeInstance(const GameInstance& inst);

// A probability vector over a finite index set.
class Distribution {
 public:
  Distribution() = default;

  // Sum tolerance before a weight vector is rejected.
  static constexpr double kNormalizationTol = 1e-12;

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution MakeDistribution(std::span<const double>, std::size_t);
  friend Distribution PointMass(std::size_t, std::size_t);
  explicit Distribution(std::vector<double> w) : weights_(std::move(w)) {}

  std::vector<double> weights_;
};

// Rejects negative or non-finite weights, a length other than `space_size`,
// and sums further than kNormalizationTol from one. Accepted vectors are
// divided by their sum.
Distribution MakeDistribution(std::span<const double> weights,
                              std::size_t space_size);

// Throws IndexError unless index < space_size.
Distribution PointMass(std::size_t index, std::size_t space_size);

// Distribution file format: { "weights": [num...] }.
Distribution LoadDistribution(std::string_view text, std::size_t space_size);
Distribution LoadDistributionFile(const std::string& path,
                                  std::size_t space_size);
std::string SerializeDistribution(const Distribution& dist);

}  // namespace ratiobound

#endif  // RATIOBOUND_INSTANCE_HPP_
