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

#include "gmqc/compiler.hpp"

#include <algorithm>
#include <string>

#include "gmqc/errors.hpp"

namespace gmqc {

std::string_view step_name(StepKind kind) {
  switch (kind) {
    case StepKind::Init: return "init";
    case StepKind::Rotation: return "rotation";
    case StepKind::Teleport: return "teleport";
    case StepKind::Cphase: return "cphase";
    case StepKind::Readout: return "readout";
  }
  return "?";
}

bool RunTrace::operator==(const RunTrace& other) const {
  return wires == other.wires && sites == other.sites && records == other.records &&
         final_frames == other.final_frames && final_state == other.final_state &&
         physical_bits == other.physical_bits && logical_bits == other.logical_bits &&
         sites_consumed == other.sites_consumed && total_probability == other.total_probability;
}

namespace {

class Engine {
 public:
  Engine(const LogicalCircuit& circuit, int sites, OutcomeSource& source)
      : circuit_(circuit), reg_(circuit.wires, sites), source_(source) {
    trace_.wires = circuit.wires;
    trace_.sites = sites;
  }

  RunTrace finish() && {
    std::vector<std::size_t> reads;
    for (std::size_t g = 0; g < circuit_.gates.size(); ++g) {
      gate_ = g;
      const auto& gate = circuit_.gates[g];
      switch (gate.kind) {
        case GateKind::Init: do_init(gate.wire); break;
        case GateKind::RZ: do_rotation(gate.wire, Axis::Z, gate.theta); break;
        case GateKind::RX: do_rotation(gate.wire, Axis::X, gate.theta); break;
        case GateKind::Cphase: do_cphase(gate.wire, gate.partner); break;
        case GateKind::Readout:
          while (reg_.chains[gate.wire].remaining() > 0) teleport(gate.wire);
          reads.push_back(g);
          break;
      }
    }
    trace_.final_frames = reg_.frames;
    trace_.final_state = reg_.state;
    trace_.physical_bits.assign(static_cast<std::size_t>(reg_.wires()), -1);
    trace_.logical_bits.assign(static_cast<std::size_t>(reg_.wires()), -1);
    for (std::size_t g : reads) {
      gate_ = g;
      const int w = circuit_.gates[g].wire;
      const auto r = readout(reg_, w, source_);
      TraceRecord rec = base(StepKind::Readout, {w}, reg_.chains[w].sites + 1);
      rec.outcome = {r.physical};
      rec.probability = r.probability;
      rec.branch_probabilities = r.branch_probabilities;
      rec.frame_delta = {kFrameI};
      push(std::move(rec));
      trace_.physical_bits[w] = r.physical;
      trace_.logical_bits[w] = r.logical;
    }
    for (const auto& chain : reg_.chains) trace_.sites_consumed.push_back(chain.consumed);
    return std::move(trace_);
  }

 private:
  TraceRecord base(StepKind kind, std::vector<int> wires, int site) const {
    TraceRecord rec;
    rec.kind = kind;
    rec.gate_index = gate_;
    rec.wires = std::move(wires);
    rec.site = site;
    return rec;
  }

  void push(TraceRecord rec) {
    trace_.total_probability *= rec.probability;
    trace_.records.push_back(std::move(rec));
  }

  void record(StepKind kind, std::vector<int> wires, AttemptResult&& r, Axis axis = Axis::Z,
              double theta = 0.0) {
    TraceRecord rec = base(kind, std::move(wires), r.site);
    rec.axis = axis;
    rec.theta = theta;
    rec.outcome = std::move(r.outcome);
    rec.probability = r.probability;
    rec.branch_probabilities = std::move(r.branch_probabilities);
    rec.frame_delta = std::move(r.frame_delta);
    rec.success = r.success;
    push(std::move(rec));
  }

  void require_site(int wire) const {
    if (reg_.chains[wire].remaining() > 0) return;
    const auto& g = circuit_.gates[gate_];
    throw BudgetExhaustedError("site budget of " + std::to_string(reg_.chains[wire].sites) +
                                   " exhausted on wire " + std::to_string(wire) + " at gate " +
                                   std::to_string(gate_) + " (" +
                                   std::string(gate_keyword(g.kind)) + ")",
                               gate_, wire);
  }

  void do_init(int wire) { record(StepKind::Init, {wire}, init_wire(reg_, wire, source_)); }

  void teleport(int wire) {
    require_site(wire);
    record(StepKind::Teleport, {wire}, teleport_step(reg_, wire, source_));
  }

  void do_rotation(int wire, Axis axis, double theta) {
    for (;;) {
      require_site(wire);
      const double adapted = adapt_angle(reg_.frames[wire], axis, theta);
      auto r = attempt_rotation(reg_, wire, axis, adapted, source_);
      const bool done = r.success;
      record(StepKind::Rotation, {wire}, std::move(r), axis, adapted);
      if (done) return;
    }
  }

  void do_cphase(int a, int b) {
    for (;;) {
      while (reg_.chains[a].next_site() < reg_.chains[b].next_site()) teleport(a);
      while (reg_.chains[b].next_site() < reg_.chains[a].next_site()) teleport(b);
      require_site(a);
      require_site(b);
      auto r = cphase_attempt(reg_, a, b, source_);
      const bool done = r.success;
      record(StepKind::Cphase, {a, b}, std::move(r));
      if (done) return;
    }
  }

  const LogicalCircuit& circuit_;
  Register reg_;
  OutcomeSource& source_;
  RunTrace trace_;
  std::size_t gate_ = 0;
};

void require_valid(const LogicalCircuit& circuit) {
  const auto diag = validate(circuit);
  if (diag.empty()) return;
  std::string msg = "invalid circuit:";
  for (const auto& d : diag) msg += "\n  " + d;
  throw CircuitError(msg);
}

}  // namespace

RunTrace execute(const LogicalCircuit& circuit, int sites, OutcomeSource& source) {
  require_valid(circuit);
  if (sites < 1) throw ContractError("site budget must be at least 1");
  return Engine(circuit, sites, source).finish();
}

RunTrace run(const LogicalCircuit& circuit, int sites, std::uint64_t seed) {
  SampledOutcomes source(seed);
  return execute(circuit, sites, source);
}

std::vector<double> expected_sites(const LogicalCircuit& circuit) {
  require_valid(circuit);
  std::vector<double> cursor(static_cast<std::size_t>(circuit.wires), 0.0);
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::RZ:
      case GateKind::RX: cursor[g.wire] += 1.5; break;
      case GateKind::Cphase: {
        const double start = std::max(cursor[g.wire], cursor[g.partner]);
        cursor[g.wire] = cursor[g.partner] = start + 2.25;
        break;
      }
      case GateKind::Init:
      case GateKind::Readout: break;
    }
  }
  return cursor;
}

}  // namespace gmqc
