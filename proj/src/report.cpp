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

#include "ratiobound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace ratiobound {

std::string FormatSig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double RoundSig12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(FormatSig12(x).c_str(), nullptr);
}

ReportJson NumberOrNull(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return nullptr;
  return RoundSig12(*x);
}

ReportJson ChainReportToJson(const ChainReport& report) {
  ReportJson doc;
  doc["chain"] = report.chain;
  doc["instance"] = report.instance_name;
  doc["quantities"] = ReportJson::array();
  for (const auto& q : report.quantities) {
    doc["quantities"].push_back({{"label", q.label}, {"value", NumberOrNull(q.value)}});
  }
  doc["checks"] = ReportJson::array();
  for (const auto& c : report.checks) {
    ReportJson check;
    check["label"] = c.label;
    check["relation"] = ToString(c.relation);
    check["lhs"] = NumberOrNull(c.lhs);
    check["rhs"] = NumberOrNull(c.rhs);
    check["slack"] = NumberOrNull(c.slack);
    check["allowance"] = RoundSig12(c.allowance);
    check["status"] = ToString(c.status);
    doc["checks"].push_back(std::move(check));
  }
  doc["notes"] = report.notes;
  doc["overall"] = report.overall;
  return doc;
}

namespace {

std::string Cell(std::optional<double> x) {
  if (!x || !std::isfinite(*x)) return "-";
  return FormatSig12(*x);
}

}  // namespace

std::string RenderChainReportText(const ChainReport& report) {
  std::ostringstream os;
  char line[512];
  os << "== " << report.chain << ": " << report.instance_name << "\n";
  for (const auto& q : report.quantities) {
    std::snprintf(line, sizeof(line), "  %-40s %20s\n", q.label.c_str(),
                  Cell(q.value).c_str());
    os << line;
  }
  std::snprintf(line, sizeof(line), "  %-10s %-56s %20s %20s %20s\n", "status",
                "relation", "lhs", "rhs", "slack");
  os << line;
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof(line), "  %-10s %-56s %20s %20s %20s\n",
                  ToString(c.status), c.label.c_str(), Cell(c.lhs).c_str(),
                  Cell(c.rhs).c_str(), Cell(c.slack).c_str());
    os << line;
  }
  for (const auto& note : report.notes) os << "  note: " << note << "\n";
  os << "  overall: " << (report.overall ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string RenderJsonText(const ReportJson& doc, int indent) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const ReportJson& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n" << RenderJsonText(v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << pad << "  [" << i << "]\n" << RenderJsonText(v[i], indent + 4);
      }
    } else if (v.is_number_float()) {
      os << pad << it.key() << ": " << FormatSig12(v.get<double>()) << "\n";
    } else if (v.is_array()) {
      os << pad << it.key() << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << (v[i].is_number_float() ? FormatSig12(v[i].get<double>())
                                      : v[i].dump());
      }
      os << "]\n";
    } else if (v.is_string()) {
      os << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace ratiobound
