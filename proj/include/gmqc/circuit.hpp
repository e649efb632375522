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

namespace gmqc {

enum class GateKind { Init, RZ, RX, Cphase, Readout };

std::string_view gate_keyword(GateKind kind);

struct Gate {
  GateKind kind = GateKind::Init;
  int wire = 0;
  int partner = -1;  // second wire of a CPHASE
  double theta = 0.0;

  bool operator==(const Gate&) const = default;
};

struct LogicalCircuit {
  int wires = 0;
  std::vector<Gate> gates;

  bool operator==(const LogicalCircuit&) const = default;
};

/// Line format, one gate per line:
///   INIT w | RZ w theta | RX w theta | CPHASE a b | READ w
/// Blank lines and '#' comments are ignored. The wire count is one more than
/// the largest wire index. Throws CircuitError with the line number.
LogicalCircuit parse_circuit_text(std::string_view text);

/// JSON array of gate objects, e.g. {"op":"RZ","wire":0,"theta":0.5} or
/// {"op":"CPHASE","a":0,"b":1}. Throws CircuitError.
LogicalCircuit parse_circuit_json(std::string_view text);

/// Chooses the JSON reader when the first non-blank character is '['.
LogicalCircuit parse_circuit(std::string_view text);

std::string to_text(const LogicalCircuit& circuit);

/// Structural diagnostics; empty when the circuit is valid.
std::vector<std::string> validate(const LogicalCircuit& circuit);

}  // namespace gmqc
