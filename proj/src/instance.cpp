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

#include "ratiobound/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ratiobound/errors.hpp"

namespace ratiobound {
namespace {

using json = nlohmann::json;

std::string CellName(const char* field, std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << field << "[" << r << "][" << c << "]";
  return os.str();
}

std::string FormatNumber(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

const json& RequireKey(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return *it;
}

std::vector<std::string> ParseLabels(const json& node, const char* field) {
  if (!node.is_array()) {
    throw ParseError(std::string("\"") + field + "\" must be an array");
  }
  std::vector<std::string> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) {
      throw ParseError(std::string(field) + "[" + std::to_string(i) +
                       "] must be a string");
    }
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

Matrix ParseMatrix(const json& node, const char* field) {
  if (!node.is_array()) {
    throw ParseError(std::string("\"") + field + "\" must be an array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < node.size(); ++r) {
    const json& row = node[r];
    if (!row.is_array()) {
      throw ParseError(std::string(field) + "[" + std::to_string(r) +
                       "] must be an array");
    }
    std::vector<double> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) {
        throw ParseError(CellName(field, r, c) + " must be a number");
      }
      values.push_back(row[c].get<double>());
    }
    if (!rows.empty() && values.size() != rows.front().size()) {
      throw ValidationError(std::string(field) + "[" + std::to_string(r) +
                            "] has " + std::to_string(values.size()) +
                            " entries, expected " +
                            std::to_string(rows.front().size()) +
                            " (ragged rows)");
    }
    rows.push_back(std::move(values));
  }
  return Matrix::FromRows(rows);
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(json(std::vector<double>(row.begin(), row.end())));
  }
  return rows;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

GameInstance GameInstance::Create(std::string name,
                                  std::vector<std::string> designs,
                                  std::vector<std::string> states,
                                  Matrix benchmark, Matrix algorithm,
                                  Extras extras) {
  if (benchmark.rows() == 0 || benchmark.cols() == 0) {
    throw ValidationError("benchmark: empty design or state space");
  }
  if (algorithm.rows() == 0 || algorithm.cols() == 0) {
    throw ValidationError("algorithm: empty design or state space");
  }
  if (benchmark.rows() != algorithm.rows() ||
      benchmark.cols() != algorithm.cols()) {
    std::ostringstream os;
    os << "dimension mismatch: benchmark is " << benchmark.rows() << "x"
       << benchmark.cols() << ", algorithm is " << algorithm.rows() << "x"
       << algorithm.cols();
    throw ValidationError(os.str());
  }
  if (designs.size() != benchmark.rows()) {
    throw ValidationError("designs: " + std::to_string(designs.size()) +
                          " labels for " + std::to_string(benchmark.rows()) +
                          " matrix rows");
  }
  if (states.size() != benchmark.cols()) {
    throw ValidationError("states: " + std::to_string(states.size()) +
                          " labels for " + std::to_string(benchmark.cols()) +
                          " matrix columns");
  }
  for (std::size_t r = 0; r < benchmark.rows(); ++r) {
    for (std::size_t c = 0; c < benchmark.cols(); ++c) {
      const double b = benchmark(r, c);
      if (!std::isfinite(b) || b < 0.0) {
        throw ValidationError(CellName("benchmark", r, c) + " = " +
                              FormatNumber(b) +
                              " must be finite and non-negative");
      }
      const double a = algorithm(r, c);
      if (!std::isfinite(a) || a <= 0.0) {
        throw ValidationError(
            CellName("algorithm", r, c) + " = " + FormatNumber(a) +
            " must be finite and strictly positive (a finite worst case only "
            "needs one design with all-positive algorithm entries, but this "
            "tool requires every entry positive so that every ratio is "
            "finite)");
      }
    }
  }
  GameInstance inst;
  inst.name_ = std::move(name);
  inst.designs_ = std::move(designs);
  inst.states_ = std::move(states);
  inst.benchmark_ = std::move(benchmark);
  inst.algorithm_ = std::move(algorithm);
  inst.extras_ = std::move(extras);
  return inst;
}

GameInstance LoadInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  const json& name = RequireKey(doc, "name");
  if (!name.is_string()) throw ParseError("\"name\" must be a string");
  auto designs = ParseLabels(RequireKey(doc, "designs"), "designs");
  auto states = ParseLabels(RequireKey(doc, "states"), "states");
  Matrix benchmark = ParseMatrix(RequireKey(doc, "benchmark"), "benchmark");
  Matrix algorithm = ParseMatrix(RequireKey(doc, "algorithm"), "algorithm");

  GameInstance::Extras extras;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "name" || key == "designs" || key == "states" ||
        key == "benchmark" || key == "algorithm") {
      continue;
    }
    extras.emplace(key, it.value().dump());
  }
  return GameInstance::Create(name.get<std::string>(), std::move(designs),
                              std::move(states), std::move(benchmark),
                              std::move(algorithm), std::move(extras));
}

GameInstance LoadInstance(std::istream& source) {
  std::ostringstream os;
  os << source.rdbuf();
  return LoadInstance(os.str());
}

GameInstance LoadInstanceFile(const std::string& path) {
  return LoadInstance(ReadFile(path));
}

std::string SerializeInstance(const GameInstance& inst) {
  // nlohmann::json objects are key-sorted, which keeps output byte-stable.
  json doc;
  doc["name"] = inst.name();
  doc["designs"] = inst.designs();
  doc["states"] = inst.states();
  doc["benchmark"] = MatrixToJson(inst.benchmark());
  doc["algorithm"] = MatrixToJson(inst.algorithm());
  for (const auto& [key, value] : inst.extras()) {
    doc[key] = json::parse(value);
  }
  return doc.dump(2) + "\n";
}

Distribution MakeDistribution(std::span<const double> weights,
                              std::size_t space_size) {
  if (weights.size() != space_size) {
    throw ValidationError("distribution has " + std::to_string(weights.size()) +
                          " weights for a space of size " +
                          std::to_string(space_size));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw ValidationError("weights[" + std::to_string(i) + "] = " +
                            FormatNumber(weights[i]) +
                            " must be finite and non-negative");
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > Distribution::kNormalizationTol) {
    std::ostringstream os;
    os.precision(12);
    os << "weights must sum to 1, sum = " << sum;
    throw ValidationError(os.str());
  }
  std::vector<double> w(weights.begin(), weights.end());
  if (sum != 1.0) {
    for (double& x : w) x /= sum;
  }
  return Distribution(std::move(w));
}

Distribution PointMass(std::size_t index, std::size_t space_size) {
  if (index >= space_size) {
    throw IndexError("point mass index " + std::to_string(index) +
                     " out of range for a space of size " +
                     std::to_string(space_size));
  }
  std::vector<double> w(space_size, 0.0);
  w[index] = 1.0;
  return Distribution(std::move(w));
}

Distribution LoadDistribution(std::string_view text, std::size_t space_size) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("distribution is not valid JSON: ") +
                     e.what());
  }
  if (!doc.is_object()) throw ParseError("distribution must be a JSON object");
  const json& w = RequireKey(doc, "weights");
  if (!w.is_array()) throw ParseError("\"weights\" must be an array");
  std::vector<double> weights;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_number()) {
      throw ParseError("weights[" + std::to_string(i) + "] must be a number");
    }
    weights.push_back(w[i].get<double>());
  }
  return MakeDistribution(weights, space_size);
}

Distribution LoadDistributionFile(const std::string& path,
                                  std::size_t space_size) {
  return LoadDistribution(ReadFile(path), space_size);
}

std::string SerializeDistribution(const Distribution& dist) {
  json doc;
  doc["weights"] = dist.weights();
  return doc.dump() + "\n";
}

}  // namespace ratiobound
