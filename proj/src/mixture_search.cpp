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

#include "ratiobound/mixture_search.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ratiobound/errors.hpp"
#include "ratiobound/random.hpp"
#include "ratiobound/ratio_core.hpp"

namespace ratiobound {
namespace {

inline void FillMixture(double* row, std::size_t states, std::uint64_t seed,
                        std::size_t k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < states; ++i) {
    row[i] = -std::log(CounterUniform(seed, k * states + i));
    sum += row[i];
  }
  for (std::size_t i = 0; i < states; ++i) row[i] /= sum;
}

// Evaluates sample k against every design and folds it into `acc`.
inline void Accumulate(const Matrix& beta, const Matrix& alg,
                       const Matrix& ratio, const Matrix& mixtures,
                       std::size_t k, std::vector<DesignSearch>& acc) {
  const std::size_t n = mixtures.cols();
  auto d = mixtures.row(k);
  for (std::size_t a = 0; a < beta.rows(); ++a) {
    auto b = beta.row(a);
    auto t = alg.row(a);
    auto r = ratio.row(a);
    double num = 0.0;
    double den = 0.0;
    double eor = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      num += d[s] * b[s];
      den += d[s] * t[s];
      eor += d[s] * r[s];
    }
    const double roe = num / den;
    DesignSearch& best = acc[a];
    if (roe > best.max_roe) {
      best.max_roe = roe;
      best.roe_sample = k;
    }
    if (eor > best.max_eor) {
      best.max_eor = eor;
      best.eor_sample = k;
    }
  }
}

// Order-independent merge: larger value wins, equal values keep the lower
// sample index.
void Merge(DesignSearch& into, const DesignSearch& from) {
  if (from.max_roe > into.max_roe ||
      (from.max_roe == into.max_roe && from.roe_sample < into.roe_sample)) {
    into.max_roe = from.max_roe;
    into.roe_sample = from.roe_sample;
  }
  if (from.max_eor > into.max_eor ||
      (from.max_eor == into.max_eor && from.eor_sample < into.eor_sample)) {
    into.max_eor = from.max_eor;
    into.eor_sample = from.eor_sample;
  }
}

void CheckShape(const GameInstance& inst, const Matrix& mixtures) {
  if (mixtures.cols() != inst.num_states()) {
    throw ValidationError("mixture search: samples over " +
                          std::to_string(mixtures.cols()) +
                          " states, instance has " +
                          std::to_string(inst.num_states()));
  }
  if (mixtures.rows() == 0) throw ValidationError("mixture search: no samples");
}

inline double PairRatio(const std::vector<double>& a,
                        const std::vector<double>& b, const Matrix& mixtures,
                        std::size_t k) {
  auto d = mixtures.row(k);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += d[i] * a[i];
    den += d[i] * b[i];
  }
  return num / den;
}

void CheckPairShape(const std::vector<double>& a, const std::vector<double>& b,
                    const Matrix& mixtures) {
  if (a.size() != b.size() || a.size() != mixtures.cols() ||
      mixtures.rows() == 0) {
    throw ValidationError("pair mixture search: shape mismatch");
  }
}

}  // namespace

int KernelThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Matrix SampleMixturesSerial(std::size_t states, std::size_t count,
                            std::uint64_t seed) {
  Matrix out(count, states);
  for (std::size_t k = 0; k < count; ++k) {
    FillMixture(&out(k, 0), states, seed, k);
  }
  return out;
}

Matrix SampleMixturesParallel(std::size_t states, std::size_t count,
                              std::uint64_t seed) {
  Matrix out(count, states);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    FillMixture(&out(k, 0), states, seed, static_cast<std::size_t>(k));
  }
  return out;
}

std::vector<DesignSearch> SearchMixturesSerial(const GameInstance& inst,
                                               const Matrix& mixtures) {
  CheckShape(inst, mixtures);
  const Matrix ratio = RatioMatrix(inst);
  std::vector<DesignSearch> acc(inst.num_designs(), DesignSearch{-1.0, 0, -1.0, 0});
  for (std::size_t k = 0; k < mixtures.rows(); ++k) {
    Accumulate(inst.benchmark(), inst.algorithm(), ratio, mixtures, k, acc);
  }
  return acc;
}

std::vector<DesignSearch> SearchMixturesParallel(const GameInstance& inst,
                                                 const Matrix& mixtures) {
  CheckShape(inst, mixtures);
  const Matrix ratio = RatioMatrix(inst);
  const DesignSearch empty{-1.0, 0, -1.0, 0};
  std::vector<DesignSearch> result(inst.num_designs(), empty);
  const auto n = static_cast<std::int64_t>(mixtures.rows());
#pragma omp parallel
  {
    std::vector<DesignSearch> local(inst.num_designs(), empty);
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 0; k < n; ++k) {
      Accumulate(inst.benchmark(), inst.algorithm(), ratio, mixtures,
                 static_cast<std::size_t>(k), local);
    }
#pragma omp critical(ratiobound_mixture_merge)
    {
      for (std::size_t a = 0; a < result.size(); ++a) Merge(result[a], local[a]);
    }
  }
  return result;
}

PairSearch SearchPairMixturesSerial(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    const Matrix& mixtures) {
  CheckPairShape(a, b, mixtures);
  PairSearch best{PairRatio(a, b, mixtures, 0), 0};
  for (std::size_t k = 1; k < mixtures.rows(); ++k) {
    const double r = PairRatio(a, b, mixtures, k);
    if (r < best.min_ratio) best = {r, k};
  }
  return best;
}

PairSearch SearchPairMixturesParallel(const std::vector<double>& a,
                                      const std::vector<double>& b,
                                      const Matrix& mixtures) {
  CheckPairShape(a, b, mixtures);
  PairSearch result{PairRatio(a, b, mixtures, 0), 0};
  const auto n = static_cast<std::int64_t>(mixtures.rows());
#pragma omp parallel
  {
    PairSearch local = result;
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 1; k < n; ++k) {
      const double r = PairRatio(a, b, mixtures, static_cast<std::size_t>(k));
      if (r < local.min_ratio) local = {r, static_cast<std::size_t>(k)};
    }
#pragma omp critical(ratiobound_pair_merge)
    {
      if (local.min_ratio < result.min_ratio ||
          (local.min_ratio == result.min_ratio &&
           local.sample < result.sample)) {
        result = local;
      }
    }
  }
  return result;
}

}  // namespace ratiobound
