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

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ratiobound/generators.hpp"
#include "ratiobound/mixture_search.hpp"
#include "ratiobound/ratio_core.hpp"

namespace ratiobound {
namespace {

// Forces several threads even on a single core so the merge paths run.
struct ThreadGuard {
  ThreadGuard() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
};

TEST_CASE("sampled mixtures lie on the simplex") {
  Matrix s = SampleMixturesSerial(5, 1000, 3);
  for (std::size_t k = 0; k < s.rows(); ++k) {
    double sum = 0.0;
    for (double x : s.row(k)) {
      CHECK(x > 0.0);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK_FALSE(SampleMixturesSerial(5, 10, 3) == SampleMixturesSerial(5, 10, 4));
}

TEST_CASE("parallel sampling equals serial bit for bit") {
  ThreadGuard guard;
  for (std::uint64_t seed : {0u, 1u, 77u}) {
    for (std::size_t n : {1u, 2u, 7u, 12u}) {
      CHECK(SampleMixturesParallel(n, 5001, seed) == SampleMixturesSerial(n, 5001, seed));
    }
  }
}

TEST_CASE("parallel search equals serial") {
  ThreadGuard guard;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GameInstance inst = GenRandom(1 + seed % 5, 1 + seed % 9, seed, 0.1, 10.0);
    Matrix mix = SampleMixturesSerial(inst.num_states(), 3001, seed);
    auto a = SearchMixturesSerial(inst, mix);
    auto b = SearchMixturesParallel(inst, mix);
    REQUIRE(a.size() == b.size());
    for (std::size_t d = 0; d < a.size(); ++d) {
      CHECK(a[d].max_roe == b[d].max_roe);
      CHECK(a[d].roe_sample == b[d].roe_sample);
      CHECK(a[d].max_eor == b[d].max_eor);
      CHECK(a[d].eor_sample == b[d].eor_sample);
    }
    std::vector<double> x(inst.num_states()), y(inst.num_states());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = inst.benchmark()(0, i);
      y[i] = inst.algorithm()(0, i);
    }
    PairSearch p = SearchPairMixturesSerial(x, y, mix);
    PairSearch q = SearchPairMixturesParallel(x, y, mix);
    CHECK(p.min_ratio == q.min_ratio);
    CHECK(p.sample == q.sample);
  }
}

TEST_CASE("sampled maxima never exceed the pure worst state") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GameInstance inst = GenRandom(3, 1 + seed % 6, seed, 0.1, 10.0);
    Matrix mix = SampleMixturesSerial(inst.num_states(), 2000, seed);
    auto found = SearchMixturesSerial(inst, mix);
    for (std::size_t d = 0; d < found.size(); ++d) {
      const double pure = WorstStatePure(inst, d).value;
      CHECK(found[d].max_roe <= pure + 1e-12);
      CHECK(found[d].max_eor <= pure + 1e-12);
      // The reported sample reproduces the maximum.
      std::vector<double> w(mix.row(found[d].roe_sample).begin(),
                            mix.row(found[d].roe_sample).end());
      CHECK(RoeValue(inst, d, MakeDistribution(w, w.size())) ==
            doctest::Approx(found[d].max_roe).epsilon(1e-14));
    }
  }
}

TEST_CASE("kernel thread count is positive") { CHECK(KernelThreads() >= 1); }

}  // namespace
}  // namespace ratiobound
