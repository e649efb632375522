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

#include <string>
#include <string_view>
#include <vector>

#include "gmqc/report.hpp"

namespace gmqc {

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  Json details = Json::object();

  bool passed() const;
};

/// "spectra", "mps", "protocol", "oracle".
const std::vector<std::string>& suite_names();

/// Run one named invariant suite. ContractError for an unknown name.
SuiteResult run_suite(std::string_view name);

/// Passes when `value` <= `tolerance`.
Check at_most(std::string name, double value, double tolerance);

}  // namespace gmqc
