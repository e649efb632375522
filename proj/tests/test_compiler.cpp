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

#include <algorithm>
#include <map>
#include <numbers>

#include <gtest/gtest.h>

#include "gmqc/circuit.hpp"
#include "gmqc/compiler.hpp"
#include "gmqc/errors.hpp"
#include "test_util.hpp"

using namespace gmqc;

namespace {

constexpr double kPi = std::numbers::pi;

bool mentions(const std::vector<std::string>& diag, const std::string& needle) {
  return std::any_of(diag.begin(), diag.end(),
                     [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

const char* kBell =
    "INIT 0\nINIT 1\nRX 0 1.5707963267948966\nRX 1 1.5707963267948966\n"
    "CPHASE 0 1\nRX 1 1.5707963267948966\nREAD 0\nREAD 1\n";

}  // namespace

TEST(CircuitText, ParsesEveryGate) {
  const LogicalCircuit c = parse_circuit_text(
      "# header\nINIT 0\ninit 1  # trailing\n\nRZ 0 0.25\nRX 1 -1e-3\nCPHASE 0 1\nREAD 0\nREAD 1\n");
  ASSERT_EQ(c.wires, 2);
  ASSERT_EQ(c.gates.size(), 7u);
  EXPECT_EQ(c.gates[2], (Gate{GateKind::RZ, 0, -1, 0.25}));
  EXPECT_EQ(c.gates[3], (Gate{GateKind::RX, 1, -1, -1e-3}));
  EXPECT_EQ(c.gates[4], (Gate{GateKind::Cphase, 0, 1, 0.0}));
  EXPECT_TRUE(validate(c).empty());
}

TEST(CircuitText, ErrorsCarryLineNumbers) {
  const auto message = [](const char* text) {
    try {
      parse_circuit_text(text);
    } catch (const CircuitError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("INIT 0\nHADAMARD 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("INIT 0\nRZ 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("RZ 0 abc\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("INIT -1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("RX 0 nan\n").find("angle"), std::string::npos);
}

TEST(CircuitText, RoundTripsThroughText) {
  const LogicalCircuit c = parse_circuit_text(kBell);
  EXPECT_EQ(parse_circuit_text(to_text(c)), c);
  const LogicalCircuit odd = parse_circuit_text("INIT 0\nRZ 0 0.1\nREAD 0\n");
  EXPECT_EQ(parse_circuit_text(to_text(odd)).gates[1].theta, 0.1);
}

TEST(CircuitJson, MatchesTextForm) {
  const LogicalCircuit j = parse_circuit(R"([
    {"op": "INIT", "wire": 0}, {"op": "INIT", "wire": 1},
    {"op": "RX", "wire": 0, "theta": 1.5707963267948966},
    {"op": "RX", "wire": 1, "theta": 1.5707963267948966},
    {"op": "CPHASE", "a": 0, "b": 1},
    {"op": "RX", "wire": 1, "theta": 1.5707963267948966},
    {"op": "READ", "wire": 0}, {"op": "READ", "wire": 1}])");
  EXPECT_EQ(j, parse_circuit(kBell));
  EXPECT_THROW(parse_circuit_json("{\"op\": \"INIT\"}"), CircuitError);
  EXPECT_THROW(parse_circuit_json("[{\"op\": \"SWAP\", \"wire\": 0}]"), CircuitError);
  EXPECT_THROW(parse_circuit_json("[{\"op\": \"RZ\", \"wire\": 0}]"), CircuitError);
  EXPECT_THROW(parse_circuit_json("[1, 2"), CircuitError);
}

TEST(Validate, AdjacencyDiagnostic) {
  const auto d = validate(parse_circuit_text("INIT 0\nINIT 1\nINIT 2\nCPHASE 0 2\nREAD 0\nREAD 1\nREAD 2\n"));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(mentions(d, "not adjacent"));
}

TEST(Validate, MissingInitDiagnostic) {
  EXPECT_TRUE(mentions(validate(parse_circuit_text("RZ 0 1\nREAD 0\n")), "missing INIT"));
  EXPECT_TRUE(mentions(validate(parse_circuit_text("INIT 1\nREAD 1\n")), "missing INIT"));
}

TEST(Validate, OtherStructuralErrors) {
  EXPECT_TRUE(mentions(validate(parse_circuit_text("INIT 0\nRZ 0 1\n")), "no READ"));
  EXPECT_TRUE(mentions(validate(parse_circuit_text("INIT 0\nINIT 0\nREAD 0\n")), "twice"));
  EXPECT_TRUE(mentions(validate(parse_circuit_text("INIT 0\nREAD 0\nRX 0 1\n")), "after READ"));
  EXPECT_TRUE(mentions(validate(parse_circuit_text("INIT 0\nCPHASE 0 0\nREAD 0\n")), "distinct"));
  LogicalCircuit bad{1, {{GateKind::Init, 0}, {GateKind::RZ, 3, -1, 0.1}, {GateKind::Readout, 0}}};
  EXPECT_TRUE(mentions(validate(bad), "out of range"));
  EXPECT_TRUE(mentions(validate(LogicalCircuit{}), "no wires"));
}

TEST(Validate, ValidThreeWireCircuit) {
  EXPECT_TRUE(validate(parse_circuit_text(
                           "INIT 0\nINIT 1\nINIT 2\nRX 1 0.3\nCPHASE 0 1\nCPHASE 2 1\nRZ 2 2\n"
                           "READ 0\nREAD 1\nREAD 2\n"))
                  .empty());
}

TEST(Run, IdentityCircuitDecodesToZero) {
  const LogicalCircuit c = parse_circuit_text("INIT 0\nREAD 0\n");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RunTrace t = run(c, 3, seed);
    EXPECT_EQ(t.logical_bits, std::vector<int>{0});
    EXPECT_EQ(t.sites_consumed, std::vector<int>{3});
    EXPECT_EQ(decode_readout(t.physical_bits[0], t.final_frames[0]), t.logical_bits[0]);
    for (const auto& r : t.records)
      EXPECT_TRUE(r.kind == StepKind::Init || r.kind == StepKind::Teleport || r.kind == StepKind::Readout);
  }
}

TEST(Run, DeterministicForASeed) {
  const LogicalCircuit c = parse_circuit_text(kBell);
  EXPECT_EQ(run(c, 12, 77), run(c, 12, 77));
  bool differs = false;
  for (std::uint64_t s = 0; s < 5 && !differs; ++s) differs = !(run(c, 12, 77) == run(c, 12, s));
  EXPECT_TRUE(differs);
}

TEST(Run, TraceInvariants) {
  const LogicalCircuit c = parse_circuit_text(kBell);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RunTrace t = run(c, 14, seed);
    double product = 1.0;
    std::map<int, int> last_site;
    for (const auto& r : t.records) {
      product *= r.probability;
      double sum = 0.0;
      for (double p : r.branch_probabilities) sum += p;
      EXPECT_NEAR(sum, 1.0, 1e-10);
      if (r.kind == StepKind::Init || r.kind == StepKind::Readout) continue;
      for (int w : r.wires) {
        EXPECT_GT(r.site, last_site[w]);
        last_site[w] = r.site;
      }
      if (r.kind == StepKind::Cphase) {
        EXPECT_EQ(r.wires.size(), 2u);
      }
    }
    EXPECT_NEAR(product, t.total_probability, 1e-12 * product);
    EXPECT_EQ(t.sites_consumed, (std::vector<int>{14, 14}));
  }
}

TEST(Run, AdaptedAnglesFollowTheFrame) {
  const LogicalCircuit c = parse_circuit_text("INIT 0\nRZ 0 0.6\nRX 0 0.9\nRZ 0 -0.4\nREAD 0\n");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RunTrace t = run(c, 20, seed);
    PauliFrame frame;
    for (const auto& r : t.records) {
      if (r.kind == StepKind::Rotation) {
        const double theta = c.gates[r.gate_index].theta;
        EXPECT_EQ(r.theta, adapt_angle(frame, r.axis, theta));
      }
      for (const auto& f : r.frame_delta) frame *= f;
    }
    EXPECT_EQ(frame, t.final_frames[0]);
  }
}

TEST(Run, BudgetExhaustionNamesTheGate) {
  const LogicalCircuit c = parse_circuit_text("INIT 0\nRZ 0 1\nRZ 0 1\nRZ 0 1\nREAD 0\n");
  try {
    run(c, 1, 3);
    FAIL() << "expected budget exhaustion";
  } catch (const BudgetExhaustedError& e) {
    EXPECT_GE(e.gate_index(), 1u);
    EXPECT_LE(e.gate_index(), 2u);
    EXPECT_EQ(e.wire(), 0);
  }
}

TEST(Run, RejectsInvalidInput) {
  EXPECT_THROW(run(parse_circuit_text("INIT 0\nINIT 1\nINIT 2\nCPHASE 0 2\nREAD 0\nREAD 1\nREAD 2\n"), 4, 1),
               CircuitError);
  EXPECT_THROW(run(parse_circuit_text("INIT 0\nREAD 0\n"), 0, 1), ContractError);
}

TEST(Run, CphaseAlignsTheLaggingWire) {
  const LogicalCircuit c = parse_circuit_text("INIT 0\nINIT 1\nRZ 0 0.3\nRZ 0 0.3\nCPHASE 0 1\nREAD 0\nREAD 1\n");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RunTrace t = run(c, 30, seed);
    for (std::size_t k = 0; k < t.records.size(); ++k) {
      const auto& r = t.records[k];
      if (r.kind != StepKind::Cphase) continue;
      EXPECT_EQ(r.wires, (std::vector<int>{0, 1}));
    }
  }
}

TEST(ExpectedSites, GeometricMeans) {
  EXPECT_EQ(expected_sites(parse_circuit_text("INIT 0\nRZ 0 1\nREAD 0\n")), std::vector<double>{1.5});
  EXPECT_EQ(expected_sites(parse_circuit_text("INIT 0\nINIT 1\nCPHASE 0 1\nREAD 0\nREAD 1\n")),
            (std::vector<double>{2.25, 2.25}));
  EXPECT_EQ(expected_sites(parse_circuit_text("INIT 0\nINIT 1\nRX 0 1\nRZ 0 2\nCPHASE 0 1\nREAD 0\nREAD 1\n")),
            (std::vector<double>{5.25, 5.25}));
}

TEST(ExpectedSites, MonteCarloSingleRotation) {
  const LogicalCircuit c = parse_circuit_text("INIT 0\nRZ 0 1.5707963267948966\nREAD 0\n");
  const int runs = 10000;
  long attempts = 0, successes = 0;
  for (int s = 0; s < runs; ++s) {
    const RunTrace t = run(c, 40, static_cast<std::uint64_t>(s));
    for (const auto& r : t.records)
      if (r.kind == StepKind::Rotation) {
        ++attempts;
        successes += r.success;
      }
  }
  EXPECT_NEAR(double(attempts) / runs, 1.5, 0.05);
  EXPECT_NEAR(double(successes) / attempts, 2.0 / 3.0, 0.02);
}

TEST(StepNames, AreStable) {
  EXPECT_EQ(step_name(StepKind::Teleport), "teleport");
  EXPECT_EQ(gate_keyword(GateKind::Readout), "READ");
}
