// Copyright 2026 The gmqc Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmqc/compiler.hpp"

namespace gmqc {

using Json = nlohmann::json;

/// One measured quantity against its tolerance.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  bool operator==(const Check&) const = default;
};

/// Machine-readable output of every CLI command. Keys serialize in sorted
/// order so identical inputs give identical bytes.
struct ReportDocument {
  std::string command;
  Json input = Json::object();
  std::optional<std::uint64_t> seed;
  Json results = Json::object();
  Json tolerances = Json::object();
  std::vector<Check> checks;
  bool passed = true;
  std::optional<double> wall_time;  // seconds; only when requested

  bool operator==(const ReportDocument&) const = default;
};

Json to_json(const TraceRecord& rec);
TraceRecord record_from_json(const Json& j);

Json to_json(const RunTrace& trace);
/// Throws ContractError on a malformed document.
RunTrace trace_from_json(const Json& j);

Json to_json(const Check& check);
Check check_from_json(const Json& j);

Json to_json(const ReportDocument& doc);
/// Throws ContractError on a malformed document.
ReportDocument report_from_json(const Json& j);

/// Two-space indentation when `pretty`, compact otherwise; trailing newline.
std::string serialize(const ReportDocument& doc, bool pretty = true);

/// Human-readable table of a trace.
std::string format_trace(const RunTrace& trace);

}  // namespace gmqc
