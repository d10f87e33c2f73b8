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

#ifndef RATIOBOUND_REPORT_HPP_
#define RATIOBOUND_REPORT_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "ratiobound/verifier.hpp"

namespace ratiobound {

using ReportJson = nlohmann::ordered_json;

// Reports carry 12 significant digits. JSON stores the rounded double, text
// prints it with %.12g, so both renderings hold the same numbers.
double RoundSig12(double x);
std::string FormatSig12(double x);

// Null for an empty optional.
ReportJson NumberOrNull(std::optional<double> x);

ReportJson ChainReportToJson(const ChainReport& report);

// Fixed-width terminal rendering.
std::string RenderChainReportText(const ChainReport& report);

// Generic flat/nested JSON object as "key: value" lines, used for the solve,
// bound and gen summaries.
std::string RenderJsonText(const ReportJson& doc, int indent = 0);

}  // namespace ratiobound

#endif  // RATIOBOUND_REPORT_HPP_
