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

#include "ratiobound/zero_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "ratiobound/errors.hpp"

namespace ratiobound {
namespace {

constexpr double kPivotEps = 1e-12;

// Gaussian elimination with partial pivoting on a square system. Returns
// nullopt for (numerically) singular matrices.
std::optional<std::vector<double>> SolveDense(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    }
    if (std::abs(a(piv, k)) < 1e-14) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
    x[k] = s / a(k, k);
  }
  return x;
}

// Clips negatives and rescales to sum one. Returns nullopt if nothing
// positive is left.
std::optional<std::vector<double>> ToSimplex(std::vector<double> v) {
  double sum = 0.0;
  for (double& x : v) {
    if (!(x > 0.0)) x = 0.0;
    sum += x;
  }
  if (!(sum > 0.0)) return std::nullopt;
  for (double& x : v) x /= sum;
  return v;
}

struct Candidate {
  std::vector<double> row_mix;  // designer
  std::vector<double> col_mix;  // adversary
};

// Scores a candidate strategy pair against the original payoff. Fills
// value, upper, residual and minimizer_design of `out`.
void Certify(const Matrix& m, const Candidate& cand, GameSolution& out) {
  // Score the normalized weights the caller will see, so that replaying the
  // maximizer reproduces value bit for bit.
  out.maximizer = MakeDistribution(cand.col_mix, cand.col_mix.size());
  const std::vector<double>& w = out.maximizer.weights();
  double lower = std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double e = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) e += w[c] * m(r, c);
    if (e < lower) {
      lower = e;
      arg = r;
    }
  }
  double upper = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    double e = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) e += cand.row_mix[r] * m(r, c);
    upper = std::max(upper, e);
  }
  out.value = lower;
  out.upper = upper;
  out.minimizer_design = arg;
  out.residual = std::max(0.0, upper - lower);
  out.minimizer_mix = cand.row_mix;
}

GameSolution SolveSingleRow(const Matrix& m) {
  GameSolution out;
  std::size_t arg = 0;
  for (std::size_t c = 1; c < m.cols(); ++c) {
    if (m(0, c) > m(0, arg)) arg = c;
  }
  out.value = out.upper = m(0, arg);
  out.maximizer = PointMass(arg, m.cols());
  out.minimizer_design = 0;
  out.minimizer_mix = {1.0};
  return out;
}

GameSolution SolveSingleColumn(const Matrix& m) {
  GameSolution out;
  std::size_t arg = 0;
  for (std::size_t r = 1; r < m.rows(); ++r) {
    if (m(r, 0) < m(arg, 0)) arg = r;
  }
  out.value = out.upper = m(arg, 0);
  out.maximizer = PointMass(0, 1);
  out.minimizer_design = arg;
  out.minimizer_mix.assign(m.rows(), 0.0);
  out.minimizer_mix[arg] = 1.0;
  return out;
}

}  // namespace

GameSolution SolveZeroSum(const Matrix& payoff, const ToleranceConfig& tol) {
  const std::size_t m = payoff.rows();
  const std::size_t n = payoff.cols();
  if (m == 0 || n == 0) throw ValidationError("zero-sum game: empty payoff");
  for (double x : payoff.data()) {
    if (!std::isfinite(x)) {
      throw ValidationError("zero-sum game: payoff has non-finite entries");
    }
  }
  if (m == 1) return SolveSingleRow(payoff);
  if (n == 1) return SolveSingleColumn(payoff);

  // Shift every payoff to >= 1 so the game value is positive, then solve the
  // designer's LP
  //   max sum_r x_r  s.t.  sum_r M'(r,c) x_r <= 1 for all c,  x >= 0,
  // whose optimum is 1/value'. The dual prices of the n constraints are the
  // adversary's mixture scaled by 1/value'.
  const double shift = 1.0 - *std::min_element(payoff.data().begin(),
                                               payoff.data().end());
  const std::size_t vars = m + n;
  Matrix tab(n, vars + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) tab(c, r) = payoff(r, c) + shift;
    tab(c, m + c) = 1.0;
    tab(c, vars) = 1.0;
  }
  std::vector<double> reduced(vars + 1, 0.0);
  for (std::size_t r = 0; r < m; ++r) reduced[r] = -1.0;
  std::vector<std::size_t> basis(n);
  for (std::size_t c = 0; c < n; ++c) basis[c] = m + c;

  const int max_pivots = static_cast<int>(100 * (m + n) + 1000);
  int pivots = 0;
  while (true) {
    // Bland's rule: lowest-index improving column, lowest-index leaving
    // variable among ratio ties. Guarantees termination.
    std::size_t enter = vars;
    for (std::size_t j = 0; j < vars; ++j) {
      if (reduced[j] < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == vars) break;
    if (pivots >= max_pivots) {
      std::ostringstream os;
      os << "zero-sum simplex hit the pivot limit (" << max_pivots << ") on a "
         << m << "x" << n << " game";
      throw SolverFailure(os.str(), pivots,
                          std::numeric_limits<double>::infinity());
    }
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (tab(i, enter) > kPivotEps) {
        best_ratio = std::min(best_ratio, tab(i, vars) / tab(i, enter));
      }
    }
    std::size_t leave = n;
    const double slack = 1e-12 * std::max(1.0, std::abs(best_ratio));
    for (std::size_t i = 0; i < n; ++i) {
      if (tab(i, enter) <= kPivotEps) continue;
      if (tab(i, vars) / tab(i, enter) > best_ratio + slack) continue;
      if (leave == n || basis[i] < basis[leave]) leave = i;
    }
    if (leave == n) {
      // Unbounded cannot happen with a positive payoff; treat as breakdown.
      throw SolverFailure("zero-sum simplex: unbounded direction (numerical "
                          "breakdown)",
                          pivots, std::numeric_limits<double>::infinity());
    }
    const double p = tab(leave, enter);
    for (std::size_t j = 0; j <= vars; ++j) tab(leave, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave) continue;
      const double f = tab(i, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= vars; ++j) tab(i, j) -= f * tab(leave, j);
    }
    const double f = reduced[enter];
    for (std::size_t j = 0; j <= vars; ++j) reduced[j] -= f * tab(leave, j);
    basis[leave] = enter;
    ++pivots;
  }

  // Tableau reading.
  Candidate from_tableau{std::vector<double>(m, 0.0),
                         std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (basis[i] < m) from_tableau.row_mix[basis[i]] = tab(i, vars);
  }
  for (std::size_t c = 0; c < n; ++c) from_tableau.col_mix[c] = reduced[m + c];

  // Re-solve the optimal basis from the original data, which removes the
  // rounding accumulated over the pivots.
  std::optional<Candidate> from_basis;
  {
    auto column = [&](std::size_t j, std::size_t c) {
      if (j < m) return payoff(j, c) + shift;
      return j - m == c ? 1.0 : 0.0;
    };
    Matrix bmat(n, n);
    Matrix bmat_t(n, n);
    std::vector<double> cost(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t c = 0; c < n; ++c) {
        bmat(c, k) = column(basis[k], c);
        bmat_t(k, c) = bmat(c, k);
      }
      cost[k] = basis[k] < m ? 1.0 : 0.0;
    }
    auto xb = SolveDense(bmat, std::vector<double>(n, 1.0));
    auto y = SolveDense(bmat_t, cost);
    if (xb && y) {
      Candidate cand{std::vector<double>(m, 0.0), *y};
      for (std::size_t k = 0; k < n; ++k) {
        if (basis[k] < m) cand.row_mix[basis[k]] = (*xb)[k];
      }
      from_basis = std::move(cand);
    }
  }

  std::optional<GameSolution> best;
  for (const std::optional<Candidate>& raw :
       {std::optional<Candidate>(from_tableau), from_basis}) {
    if (!raw) continue;
    auto rows = ToSimplex(raw->row_mix);
    auto cols = ToSimplex(raw->col_mix);
    if (!rows || !cols) continue;
    GameSolution sol;
    Certify(payoff, Candidate{*rows, *cols}, sol);
    if (!best || sol.residual < best->residual) best = std::move(sol);
  }
  if (!best) {
    throw SolverFailure("zero-sum simplex: degenerate optimal basis", pivots,
                        std::numeric_limits<double>::infinity());
  }
  best->iterations = pivots;
  if (best->residual > tol.lp_tol) {
    std::ostringstream os;
    os.precision(6);
    os << "zero-sum simplex: duality gap " << best->residual
       << " exceeds lp_tol " << tol.lp_tol << " on a " << m << "x" << n
       << " game";
    throw SolverFailure(os.str(), pivots, best->residual);
  }
  return *std::move(best);
}

}  // namespace ratiobound
