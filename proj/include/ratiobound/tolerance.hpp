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

#ifndef RATIOBOUND_TOLERANCE_HPP_
#define RATIOBOUND_TOLERANCE_HPP_

namespace ratiobound {

// Numerical tolerances shared by solvers and checks.
struct ToleranceConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_bisection_iters = 200;
  double lp_tol = 1e-10;

  // Throws ValidationError unless every tolerance is positive and every
  // iteration limit is at least one.
  void Validate() const;

  // Allowed deviation when comparing quantities of magnitude `scale`. The
  // relative part only kicks in for |scale| > 1.
  double Allowance(double scale) const;

  // lhs >= rhs up to Allowance(max(|lhs|, |rhs|)).
  bool Geq(double lhs, double rhs) const;
  // |lhs - rhs| within Allowance(max(|lhs|, |rhs|)).
  bool Near(double lhs, double rhs) const;
};

}  // namespace ratiobound

#endif  // RATIOBOUND_TOLERANCE_HPP_
