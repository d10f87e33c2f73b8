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

#ifndef RATIOBOUND_CLI_HPP_
#define RATIOBOUND_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ratiobound::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kSolverFailure = 3,
};

// Runs one command line (without the program name), writing the report to
// `out` (or --out) and diagnostics to `err`. Returns the exit code.
//
//   solve  <instance> --objective pure|eor|roe
//   bound  <instance> --dist FILE [--dist FILE ...]
//   verify <instance> [--dist FILE ...] [--random-dists K --seed S] [--deep]
//   gen ski    --buy B --horizon H
//   gen random --designs M --states N --seed S [--lo X --hi Y]
//   gen const  --ratio C [--designs M --states N --seed S]
//
// Shared flags: --tol, --lp-tol, --max-iters, --out, --format json|text.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ratiobound::cli

#endif  // RATIOBOUND_CLI_HPP_
