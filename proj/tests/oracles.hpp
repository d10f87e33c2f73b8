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

// Test-only oracles. Nothing here calls into the simplex or the parametric
// solver; they work on plain nested vectors so they stay independent of the
// code they check.

#ifndef RATIOBOUND_TESTS_ORACLES_HPP_
#define RATIOBOUND_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<double>>;

// Value of the 2x2 game max_q min_row [q*M(row,0) + (1-q)*M(row,1)]. The
// objective is concave piecewise linear in q, so its maximum sits at q = 0,
// q = 1 or where the two row lines cross.
inline double Game2x2(const Rows& m) {
  auto f = [&](double q) {
    return std::min(q * m[0][0] + (1 - q) * m[0][1],
                    q * m[1][0] + (1 - q) * m[1][1]);
  };
  double best = std::max(f(0.0), f(1.0));
  const double den = (m[0][0] - m[0][1]) - (m[1][0] - m[1][1]);
  if (den != 0.0) {
    const double q = (m[1][1] - m[0][1]) / den;
    if (q > 0.0 && q < 1.0) best = std::max(best, f(q));
  }
  return best;
}

// max over a grid on the 1- or 2-simplex of `objective(d)`; steps = 1/h.
struct GridBest {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> argmax;
};

inline GridBest GridSearchSimplex(
    std::size_t states, int steps,
    const std::function<double(const std::vector<double>&)>& objective) {
  GridBest best;
  std::vector<double> d(states);
  if (states == 2) {
    for (int i = 0; i <= steps; ++i) {
      d = {double(i) / steps, double(steps - i) / steps};
      const double v = objective(d);
      if (v > best.value) best = {v, d};
    }
  } else if (states == 3) {
    for (int i = 0; i <= steps; ++i) {
      for (int j = 0; i + j <= steps; ++j) {
        d = {double(i) / steps, double(j) / steps,
             double(steps - i - j) / steps};
        const double v = objective(d);
        if (v > best.value) best = {v, d};
      }
    }
  }
  return best;
}

// min over rows of E_d[M(row, .)].
inline double EorObjective(const Rows& ratios, const std::vector<double>& d) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& row : ratios) {
    double e = 0.0;
    for (std::size_t s = 0; s < d.size(); ++s) e += d[s] * row[s];
    best = std::min(best, e);
  }
  return best;
}

// min over rows of E_d[beta(row, .)] / E_d[alg(row, .)].
inline double RoeObjective(const Rows& beta, const Rows& alg,
                           const std::vector<double>& d) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < beta.size(); ++r) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t s = 0; s < d.size(); ++s) {
      num += d[s] * beta[r][s];
      den += d[s] * alg[r][s];
    }
    best = std::min(best, num / den);
  }
  return best;
}

// Hedge self-play on a zero-sum game (rows minimize, columns maximize). The
// averaged strategies certify lower <= value <= upper for any T.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> col_avg;
};

inline Bracket HedgeBracket(const Rows& m, int rounds) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  double lo = m[0][0];
  double hi = m[0][0];
  for (const auto& r : m) {
    for (double x : r) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const double range = std::max(hi - lo, 1e-12);
  const double eta = std::sqrt(8.0 * std::log(double(std::max(rows, cols))) /
                               rounds) / range;
  std::vector<double> row_loss(rows, 0.0);
  std::vector<double> col_gain(cols, 0.0);
  std::vector<double> row_avg(rows, 0.0);
  std::vector<double> col_avg(cols, 0.0);
  std::vector<double> p(rows);
  std::vector<double> d(cols);
  for (int t = 0; t < rounds; ++t) {
    const double rmin = *std::min_element(row_loss.begin(), row_loss.end());
    double ps = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      p[r] = std::exp(-eta * (row_loss[r] - rmin));
      ps += p[r];
    }
    const double cmax = *std::max_element(col_gain.begin(), col_gain.end());
    double ds = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      d[c] = std::exp(eta * (col_gain[c] - cmax));
      ds += d[c];
    }
    for (auto& x : p) x /= ps;
    for (auto& x : d) x /= ds;
    for (std::size_t r = 0; r < rows; ++r) {
      double e = 0.0;
      for (std::size_t c = 0; c < cols; ++c) e += d[c] * m[r][c];
      row_loss[r] += e;
      row_avg[r] += p[r];
    }
    for (std::size_t c = 0; c < cols; ++c) {
      double e = 0.0;
      for (std::size_t r = 0; r < rows; ++r) e += p[r] * m[r][c];
      col_gain[c] += e;
      col_avg[c] += d[c];
    }
  }
  for (auto& x : row_avg) x /= rounds;
  for (auto& x : col_avg) x /= rounds;
  Bracket b;
  b.lower = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < rows; ++r) {
    double e = 0.0;
    for (std::size_t c = 0; c < cols; ++c) e += col_avg[c] * m[r][c];
    b.lower = std::min(b.lower, e);
  }
  b.upper = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cols; ++c) {
    double e = 0.0;
    for (std::size_t r = 0; r < rows; ++r) e += row_avg[r] * m[r][c];
    b.upper = std::max(b.upper, e);
  }
  b.col_avg = col_avg;
  return b;
}

// Exact value of max_d min_row E_d[M(row, .)] by vertex enumeration. An
// optimal vertex has some column support S and a set R of |S| rows tight at
// the value, so solving every square system {E_d[M(r, .)] = v for r in R,
// sum d = 1} and keeping the best feasible d finds it. Exponential, meant for
// games up to about 9x9.
struct ExactGame {
  double value = -std::numeric_limits<double>::infinity();
  std::vector<double> d;
};

// Solves a dense system in place by partial pivoting; false when singular.
inline bool SolveDense(Rows a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c][k] * x[k];
    x[c] = s / a[c][c];
  }
  return true;
}

inline ExactGame SupportEnumeration(const Rows& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  ExactGame best;
  std::vector<double> d(cols);
  for (unsigned smask = 1; smask < (1u << cols); ++smask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < cols; ++j) {
      if (smask >> j & 1u) s.push_back(j);
    }
    const std::size_t k = s.size();
    if (k > rows) continue;
    for (unsigned rmask = 1; rmask < (1u << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      // Unknowns: d_s for s in S, then v.
      Rows a;
      std::vector<double> b;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1u)) continue;
        std::vector<double> eq(k + 1);
        for (std::size_t t = 0; t < k; ++t) eq[t] = m[r][s[t]];
        eq[k] = -1.0;
        a.push_back(eq);
        b.push_back(0.0);
      }
      std::vector<double> sum(k + 1, 1.0);
      sum[k] = 0.0;
      a.push_back(sum);
      b.push_back(1.0);
      std::vector<double> x;
      if (!SolveDense(a, b, x)) continue;
      bool feasible = true;
      for (std::size_t t = 0; t < k; ++t) feasible = feasible && x[t] >= -1e-13;
      if (!feasible) continue;
      std::fill(d.begin(), d.end(), 0.0);
      for (std::size_t t = 0; t < k; ++t) d[s[t]] = std::max(x[t], 0.0);
      const double v = EorObjective(m, d);
      if (v > best.value) best = {v, d};
    }
  }
  return best;
}

// ROE value by bisection on lambda over exact linearized games. g is
// decreasing, so the root is the largest lambda with g >= 0.
inline double RoeByBisection(const Rows& beta, const Rows& alg, int iters) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t r = 0; r < beta.size(); ++r) {
    for (std::size_t c = 0; c < beta[r].size(); ++c) {
      lo = std::min(lo, beta[r][c] / alg[r][c]);
      hi = std::max(hi, beta[r][c] / alg[r][c]);
    }
  }
  for (int it = 0; it < iters; ++it) {
    const double mid = 0.5 * (lo + hi);
    Rows g = beta;
    for (std::size_t r = 0; r < g.size(); ++r) {
      for (std::size_t c = 0; c < g[r].size(); ++c) g[r][c] -= mid * alg[r][c];
    }
    if (SupportEnumeration(g).value >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Ski rental tables written out directly from the rent-or-buy rules, without
// the generator.
inline void SkiTables(int b, int h, Rows& beta, Rows& alg) {
  beta.assign(h + 1, std::vector<double>(h));
  alg.assign(h + 1, std::vector<double>(h));
  for (int i = 1; i <= h + 1; ++i) {
    for (int j = 1; j <= h; ++j) {
      // Rent through day j if j < i; otherwise rent i-1 days and buy.
      beta[i - 1][j - 1] = j < i ? j : (i - 1) + b;
      alg[i - 1][j - 1] = std::min(j, b);
    }
  }
}

inline Rows Ratios(const Rows& beta, const Rows& alg) {
  Rows r = beta;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = beta[i][j] / alg[i][j];
  }
  return r;
}

}  // namespace oracle

#endif  // RATIOBOUND_TESTS_ORACLES_HPP_
