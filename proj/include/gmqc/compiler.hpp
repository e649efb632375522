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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gmqc/circuit.hpp"
#include "gmqc/linalg.hpp"
#include "gmqc/protocol.hpp"

namespace gmqc {

enum class StepKind { Init, Rotation, Teleport, Cphase, Readout };

std::string_view step_name(StepKind kind);

/// One measurement in a run.
struct TraceRecord {
  StepKind kind = StepKind::Init;
  std::size_t gate_index = 0;
  std::vector<int> wires;
  int site = 0;          // 0 for Init, N+1 for Readout
  Axis axis = Axis::Z;   // rotation axis; Z for every ẑ-type measurement
  double theta = 0.0;    // adapted angle actually measured
  std::vector<int> outcome;
  double probability = 1.0;
  std::vector<double> branch_probabilities;
  std::vector<PauliFrame> frame_delta;
  bool success = true;

  bool operator==(const TraceRecord&) const = default;
};

struct RunTrace {
  int wires = 0;
  int sites = 0;
  std::vector<TraceRecord> records;
  std::vector<PauliFrame> final_frames;
  ComplexVector final_state;            // joint logical vector before readout
  std::vector<int> physical_bits;
  std::vector<int> logical_bits;
  std::vector<int> sites_consumed;
  double total_probability = 1.0;

  bool operator==(const RunTrace& other) const;
};

/// Execute a validated circuit on chains of `sites` bulk sites, drawing every
/// outcome from `source`. Failed gates are retried at the next site; the
/// lagging partner of a CPHASE teleports forward first; READ teleports the
/// wire to its last site and the ẑ measurements of site N+1 happen after the
/// last gate, in circuit order.
///
/// Throws CircuitError for an invalid circuit and BudgetExhaustedError when a
/// wire has no site left for the gate it is executing.
RunTrace execute(const LogicalCircuit& circuit, int sites, OutcomeSource& source);

/// execute() with outcomes sampled from a generator seeded with `seed`.
RunTrace run(const LogicalCircuit& circuit, int sites, std::uint64_t seed);

/// Expected bulk sites consumed per wire before readout: 3/2 per rotation and
/// 9/4 per CPHASE, with both partners starting from the later of their
/// expected positions.
std::vector<double> expected_sites(const LogicalCircuit& circuit);

}  // namespace gmqc
