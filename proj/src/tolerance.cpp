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

#include "ratiobound/tolerance.hpp"

#include <algorithm>
#include <cmath>

#include "ratiobound/errors.hpp"

namespace ratiobound {

void ToleranceConfig::Validate() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(abs_tol)) throw ValidationError("abs_tol must be > 0");
  if (!positive(rel_tol)) throw ValidationError("rel_tol must be > 0");
  if (!positive(lp_tol)) throw ValidationError("lp_tol must be > 0");
  if (max_bisection_iters < 1) {
    throw ValidationError("max_bisection_iters must be >= 1");
  }
}

double ToleranceConfig::Allowance(double scale) const {
  const double mag = std::abs(scale);
  if (mag <= 1.0) return abs_tol;
  return std::max(abs_tol, rel_tol * mag);
}

bool ToleranceConfig::Geq(double lhs, double rhs) const {
  return lhs - rhs >= -Allowance(std::max(std::abs(lhs), std::abs(rhs)));
}

bool ToleranceConfig::Near(double lhs, double rhs) const {
  return std::abs(lhs - rhs) <=
         Allowance(std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace ratiobound
