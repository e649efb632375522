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
#include <functional>
#include <vector>

#include "gmqc/circuit.hpp"
#include "gmqc/compiler.hpp"
#include "gmqc/linalg.hpp"
#include "gmqc/protocol.hpp"

namespace gmqc {

inline constexpr std::size_t kBranchCap = 1'000'000;

/// Ordered product of the R^Z, R^X and CPHASE gates; Init and Readout are
/// ignored. Wire 0 is the most significant qubit. SizeError above 10 wires.
ComplexMatrix dense_logical_unitary(const LogicalCircuit& circuit);

/// U·|0...0>.
ComplexVector ideal_output(const LogicalCircuit& circuit);

/// X^x Z^z on every wire, wire 0 most significant.
ComplexMatrix frame_operator(std::span<const PauliFrame> frames);

/// Replays a fixed prefix of choices and extends it with the first
/// nonzero-probability outcome; advance() steps to the next branch in
/// lexicographic order. Zero-weight outcomes are never visited.
class ScriptedOutcomes final : public OutcomeSource {
 public:
  std::size_t choose(std::span<const double> probabilities) override;
  void rewind() { depth_ = 0; }
  /// False once every branch has been visited.
  bool advance();
  const std::vector<std::size_t>& script() const { return script_; }
  double probability() const;

 private:
  std::vector<std::size_t> script_;
  std::vector<std::vector<double>> options_;
  std::size_t depth_ = 0;
};

/// One leaf of the outcome tree. `trace` is null for a branch cut short by
/// the site budget; `probability` is then the weight of the cut prefix.
struct BranchVisit {
  const std::vector<std::size_t>& choices;
  double probability;
  const RunTrace* trace;
};

/// Visit every outcome branch of `circuit` on chains of `sites` sites.
/// SizeError once more than `cap` leaves would be visited.
void for_each_branch(const LogicalCircuit& circuit, int sites,
                     const std::function<void(const BranchVisit&)>& visit,
                     std::size_t cap = kBranchCap);

struct BranchRecord {
  std::vector<std::size_t> choices;
  double probability = 0.0;
  bool completed = false;
  ComplexVector final_state;
  std::vector<PauliFrame> final_frames;
  std::vector<int> logical_bits;
};

std::vector<BranchRecord> enumerate_branches(const LogicalCircuit& circuit, int sites,
                                             std::size_t cap = kBranchCap);

/// Recomputes a trace from its outcomes alone, contracting the chain tensors
/// in the S^z basis with locally rebuilt measurement states.
struct ReplayResult {
  ComplexVector state;             // joint logical vector before readout
  double probability = 1.0;        // product of recomputed branch weights
  double max_step_error = 0.0;     // max |recomputed - recorded| step probability
};

ReplayResult replay_trace(const LogicalCircuit& circuit, const RunTrace& trace);

struct CircuitVerification {
  std::size_t branches = 0;
  std::size_t truncated = 0;
  double probability_sum = 0.0;         // completed + truncated
  double completed_probability = 0.0;
  double min_fidelity = 1.0;            // replayed state vs frame·U·|0>
  double min_engine_fidelity = 1.0;     // engine state vs replayed state
  double max_probability_error = 0.0;   // engine vs replay, per step and per branch
  double total_variation = 0.0;         // decoded vs ideal readout distribution
  std::size_t decode_mismatches = 0;
  std::vector<double> decoded_distribution;
  std::vector<double> ideal_distribution;
};

/// Exhaustive check of a circuit against the dense logical model. The decoded
/// distribution is conditioned on branches that finish within the budget.
CircuitVerification verify_circuit(const LogicalCircuit& circuit, int sites,
                                   std::size_t cap = kBranchCap);

struct PhysicalSimReport {
  std::size_t branches = 0;
  std::size_t steps = 0;
  double probability_sum = 0.0;
  double max_probability_error = 0.0;  // dense vs engine, per step
  double max_residual = 0.0;           // ‖H_res ψ‖ over every intermediate state
  double max_cphase_residual = 0.0;    // same, right after a successful CPHASE
  std::size_t cphase_successes = 0;
  double max_outcome_probability_error = 0.0;  // |p - 1/3| or |p - 1/9| per attempt
};

/// Full Hilbert-space replay of every branch (N ≤ 4 sites, n ≤ 2 wires),
/// starting from the eigensolver ground state of each chain. H_res sums the
/// per-wire residual Hamiltonians: the full H before Init, H(m+1) after m
/// bulk sites are consumed, nothing after readout.
PhysicalSimReport dense_physical_sim(const LogicalCircuit& circuit, int sites,
                                     std::size_t cap = kBranchCap);

struct CorpusEntry {
  LogicalCircuit circuit;
  int sites = 1;
};

/// Seeded regression corpus: at most 3 wires, at most 6 unitary gates,
/// random angles, and a site budget small enough to enumerate exhaustively.
std::vector<CorpusEntry> regression_corpus(std::uint64_t seed = 2026, std::size_t count = 24);

}  // namespace gmqc
