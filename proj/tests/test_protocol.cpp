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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "gmqc/errors.hpp"
#include "gmqc/protocol.hpp"
#include "test_util.hpp"

using namespace gmqc;
using testutil::FixedOutcomes;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexVector basis_ket(int dim, int k) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return v;
}

// Register with `wires` initialised wires in logical |0>, frames empty.
Register ready_register(int wires, int sites) {
  Register reg(wires, sites);
  FixedOutcomes down({1});
  for (int w = 0; w < wires; ++w) init_wire(reg, w, down);
  return reg;
}

}  // namespace

TEST(PauliFrameAlgebra, CompositionIsXor) {
  EXPECT_EQ(kFrameX * kFrameZ, kFrameXZ);
  EXPECT_EQ(kFrameXZ * kFrameX, kFrameZ);
  EXPECT_EQ(kFrameXZ * kFrameXZ, kFrameI);
  for (const PauliFrame f : {kFrameI, kFrameX, kFrameZ, kFrameXZ}) {
    EXPECT_EQ(PauliFrame::parse(f.name()), f);
    EXPECT_EQ(pauli_class(f.matrix()), f);
    EXPECT_EQ(pauli_class(std::polar(0.4, 1.1) * f.matrix()), f);
  }
  EXPECT_FALSE(PauliFrame::parse("Y").has_value());
  EXPECT_FALSE(pauli_class(logical_rz(0.3)).has_value());
}

TEST(LogicalGates, Definitions) {
  EXPECT_LT((logical_rz(0.3) - ComplexMatrix(ComplexVector{{1.0, std::exp(kI * 0.3)}}.asDiagonal())).norm(), 1e-15);
  EXPECT_LT(testutil::phase_distance(logical_rx(kPi), pauli(Axis::X)), 1e-15);
  const ComplexMatrix h = (pauli(Axis::X) + pauli(Axis::Z)) / std::sqrt(2.0);
  EXPECT_LT((h * logical_rz(0.8) * h - logical_rx(0.8)).norm(), 1e-14);
}

TEST(RzBasis, SpecialAngles) {
  EXPECT_LT((rz_basis(0.0) - identity(3)).norm(), 1e-15);
  const ComplexMatrix b = rz_basis(kPi);
  EXPECT_NEAR(std::abs(b(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(b(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(b(2, 2)), 1.0, 1e-15);
  const ComplexMatrix g = rz_basis(0.7);
  EXPECT_LT((g.adjoint() * g - identity(3)).norm(), 1e-12);
}

TEST(RxBasis, SpecialAnglesAndFailureKraus) {
  const ComplexMatrix b = rx_basis(0.0);
  EXPECT_LT((b.col(0) - basis_ket(3, 1)).norm(), 1e-15);
  EXPECT_LT((b.col(1) - basis_ket(3, 2)).norm(), 1e-15);
  EXPECT_LT((b.col(2) - basis_ket(3, 0)).norm(), 1e-15);
  const ComplexMatrix g = rx_basis(1.1);
  EXPECT_LT((g.adjoint() * g - identity(3)).norm(), 1e-12);
  const MpsChain chain = build_aklt_mps(1);
  EXPECT_EQ(pauli_class(outcome_kraus(chain, rx_basis(1.1).col(2))), kFrameX);
}

TEST(Rotation, ByproductTablesMatchKraus) {
  // Kraus of each outcome equals (frame_delta)·R(θ) on success, frame_delta on failure.
  const MpsChain chain = build_aklt_mps(1);
  for (Axis axis : {Axis::Z, Axis::X}) {
    const auto by = rotation_byproducts(axis);
    for (double theta : {0.0, 0.4, -1.3, 2.9, kPi}) {
      const ComplexMatrix basis = axis == Axis::Z ? rz_basis(theta) : rx_basis(theta);
      const ComplexMatrix gate = axis == Axis::Z ? logical_rz(theta) : logical_rx(theta);
      for (int o = 0; o < 3; ++o) {
        const ComplexMatrix k = std::sqrt(3.0) * outcome_kraus(chain, basis.col(o));
        const ComplexMatrix expected = o < 2 ? ComplexMatrix(by[o].matrix() * gate) : by[o].matrix();
        EXPECT_LT(testutil::phase_distance(k, expected), 1e-10) << int(axis) << " " << theta << " " << o;
      }
    }
  }
  EXPECT_EQ(rotation_byproducts(Axis::Z)[0], kFrameX);
  EXPECT_EQ(rotation_byproducts(Axis::Z)[1], kFrameXZ);
  EXPECT_EQ(rotation_byproducts(Axis::Z)[2], kFrameZ);
  EXPECT_EQ(rotation_byproducts(Axis::X)[0], kFrameXZ);
  EXPECT_EQ(rotation_byproducts(Axis::X)[1], kFrameZ);
  EXPECT_EQ(rotation_byproducts(Axis::X)[2], kFrameX);
  EXPECT_THROW(rotation_byproducts(Axis::Y), ContractError);
}

TEST(Rotation, AttemptOutcomes) {
  Register reg = ready_register(1, 4);
  FixedOutcomes first({0});
  const AttemptResult s = attempt_rotation(reg, 0, Axis::Z, 0.5, first);
  EXPECT_TRUE(s.success);
  EXPECT_EQ(s.frame_delta, std::vector<PauliFrame>{kFrameX});
  EXPECT_EQ(s.outcome, std::vector<int>{1});
  EXPECT_EQ(s.site, 1);
  EXPECT_EQ(reg.frames[0], kFrameX);
  FixedOutcomes third({2});
  const AttemptResult f = attempt_rotation(reg, 0, Axis::Z, 0.5, third);
  EXPECT_FALSE(f.success);
  EXPECT_EQ(f.frame_delta, std::vector<PauliFrame>{kFrameZ});
  EXPECT_EQ(f.site, 2);
  EXPECT_EQ(reg.frames[0], kFrameXZ);
}

TEST(Rotation, UniformOutcomesOnRandomStates) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    Register reg = ready_register(2, 3);
    reg.state = testutil::random_state(rng, 4);
    FixedOutcomes pick({static_cast<std::size_t>(trial % 3)});
    const AttemptResult r = attempt_rotation(reg, trial % 2, trial % 4 < 2 ? Axis::Z : Axis::X, angle(rng), pick);
    double sum = 0.0;
    for (double p : r.branch_probabilities) {
      EXPECT_NEAR(p, 1.0 / 3.0, 1e-10);
      sum += p;
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_NEAR(reg.state.norm(), 1.0, 1e-10);
  }
}

TEST(AdaptAngle, FollowsAnticommutingByproduct) {
  EXPECT_EQ(adapt_angle(kFrameX, Axis::Z, 0.7), -0.7);
  EXPECT_EQ(adapt_angle(kFrameZ, Axis::Z, 0.7), 0.7);
  EXPECT_EQ(adapt_angle(kFrameXZ, Axis::X, 0.7), -0.7);
  EXPECT_EQ(adapt_angle(kFrameX, Axis::X, 0.7), 0.7);
  // Υ·R(θ') = R(θ)·Υ up to phase.
  for (const PauliFrame f : {kFrameI, kFrameX, kFrameZ, kFrameXZ})
    for (Axis a : {Axis::Z, Axis::X}) {
      auto r = [&](double t) { return a == Axis::Z ? logical_rz(t) : logical_rx(t); };
      const double t = adapt_angle(f, a, 0.9);
      EXPECT_LT(testutil::phase_distance(ComplexMatrix(f.matrix() * r(t)), ComplexMatrix(r(0.9) * f.matrix())), 1e-12);
    }
}

TEST(Teleport, ByproductsAndState) {
  std::mt19937_64 rng(32);
  const auto by = teleport_byproducts();
  EXPECT_EQ(by[0], kFrameX);
  EXPECT_EQ(by[1], kFrameXZ);
  EXPECT_EQ(by[2], kFrameZ);
  for (std::size_t o = 0; o < 3; ++o) {
    Register reg = ready_register(1, 2);
    reg.state = testutil::random_state(rng, 2);
    const ComplexVector before = reg.state;
    FixedOutcomes pick({o});
    const AttemptResult r = teleport_step(reg, 0, pick);
    EXPECT_TRUE(r.success);
    EXPECT_NEAR(r.probability, 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(testutil::overlap(reg.state, by[o].matrix() * before), 1.0, 1e-12);
  }
}

TEST(Init, SingletFixesTheLabels) {
  for (std::size_t pick : {0u, 1u}) {
    Register reg(1, 2);
    FixedOutcomes src({pick});
    const AttemptResult r = init_wire(reg, 0, src);
    ASSERT_EQ(r.branch_probabilities.size(), 2u);
    EXPECT_NEAR(r.branch_probabilities[0], 0.5, 1e-15);
    EXPECT_NEAR(r.branch_probabilities[1], 0.5, 1e-15);
    EXPECT_NEAR(r.probability, 0.5, 1e-15);
    EXPECT_EQ(r.site, 0);
    // Frame·|0> is the physical state at site N+1.
    const ComplexVector logical = reg.frames[0].matrix() * basis_ket(2, 0);
    EXPECT_NEAR(testutil::overlap(reg.state, logical), 1.0, 1e-15);
    // s^z = -1/2 at site 0 leaves no byproduct.
    EXPECT_EQ(reg.frames[0], pick == 1 ? kFrameI : kFrameX);
  }
  Register reg(1, 1);
  FixedOutcomes src({0});
  init_wire(reg, 0, src);
  EXPECT_THROW(init_wire(reg, 0, src), ContractError);
}

TEST(Readout, DecodingRule) {
  EXPECT_EQ(decode_readout(0, kFrameZ), 0);
  EXPECT_EQ(decode_readout(1, kFrameX), 0);
  EXPECT_EQ(decode_readout(1, kFrameI), 1);
  EXPECT_EQ(decode_readout(0, kFrameXZ), 1);
}

TEST(Readout, NeedsConsumedChain) {
  Register reg = ready_register(1, 1);
  FixedOutcomes src({0});
  EXPECT_THROW(readout(reg, 0, src), ContractError);
  teleport_step(reg, 0, src);
  SampledOutcomes any(1);
  const ReadoutResult r = readout(reg, 0, any);
  // After outcome 1 (byproduct X) the state is X|0> = |1>: s^z = -1/2, logical 0.
  EXPECT_EQ(r.physical, 1);
  EXPECT_EQ(r.logical, 0);
  EXPECT_NEAR(r.branch_probabilities[1], 1.0, 1e-14);
}

TEST(Interaction, ActsAsGammaOnTheQubitSpan) {
  const ComplexMatrix f = kron(frame_kets(), frame_kets());
  const ComplexMatrix u = f.adjoint() * interaction_unitary() * f;
  EXPECT_LT((gamma_unitary() * gamma_unitary().adjoint() - identity(4)).norm(), 1e-14);
  // |2> carries the opposite sign in this frame, which conjugates Γ by Z⊗Z.
  const ComplexMatrix zz = kron(pauli(Axis::Z), pauli(Axis::Z));
  const ComplexMatrix gamma = zz * gamma_unitary() * zz;
  const int span[] = {0, 1, 3, 4};  // (α, β) ∈ {1,2}²
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      const int* ri = std::find(std::begin(span), std::end(span), r);
      const int* ci = std::find(std::begin(span), std::end(span), c);
      const bool in_r = ri != std::end(span), in_c = ci != std::end(span);
      Complex expected = r == c ? 1.0 : 0.0;
      if (in_r && in_c) expected = gamma(ri - span, ci - span);
      EXPECT_LT(std::abs(u(r, c) - expected), 1e-12) << r << "," << c;
    }
}

TEST(Cphase, TableStructure) {
  const auto& t = cphase_table();
  int successes = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const CphaseBranch& br = t[a][b];
      const ComplexMatrix k = 3.0 * cphase_kraus(a + 1, b + 1);
      const ComplexMatrix pq = kron(br.first.matrix(), br.second.matrix());
      const ComplexMatrix expected = br.success ? ComplexMatrix(pq * logical_cphase()) : pq;
      EXPECT_LT(testutil::phase_distance(k, expected), 1e-10);
      EXPECT_EQ(br.success, a < 2 && b < 2);
      if (br.success) {
        ++successes;
        EXPECT_TRUE(br.first.x);
        EXPECT_TRUE(br.second.x);
      }
    }
  EXPECT_EQ(successes, 4);
  // Failure (3,1): logical identity with Z ⊗ X.
  EXPECT_FALSE(t[2][0].success);
  EXPECT_EQ(t[2][0].first, kFrameZ);
  EXPECT_EQ(t[2][0].second, kFrameX);
  EXPECT_THROW(cphase_kraus(0, 1), ContractError);
}

TEST(Cphase, FramePropagation) {
  const ComplexMatrix cz = logical_cphase();
  for (const PauliFrame a : {kFrameI, kFrameX, kFrameZ, kFrameXZ})
    for (const PauliFrame b : {kFrameI, kFrameX, kFrameZ, kFrameXZ}) {
      const auto [a2, b2] = conjugate_by_cphase(a, b);
      const ComplexMatrix lhs = cz * kron(a.matrix(), b.matrix());
      const ComplexMatrix rhs = kron(a2.matrix(), b2.matrix()) * cz;
      EXPECT_LT(testutil::phase_distance(lhs, rhs), 1e-14);
    }
}

TEST(Cphase, NineOutcomesOfOneNinth) {
  std::mt19937_64 rng(33);
  double success = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Register reg = ready_register(2, 2);
    reg.state = testutil::random_state(rng, 4);
    FixedOutcomes pick({static_cast<std::size_t>(trial % 9)});
    const AttemptResult r = cphase_attempt(reg, 0, 1, pick);
    ASSERT_EQ(r.branch_probabilities.size(), 9u);
    double sum = 0.0;
    for (int o = 0; o < 9; ++o) {
      EXPECT_NEAR(r.branch_probabilities[o], 1.0 / 9.0, 1e-10);
      sum += r.branch_probabilities[o];
      if (cphase_table()[o / 3][o % 3].success && trial == 0) success += r.branch_probabilities[o];
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
  EXPECT_NEAR(success, 4.0 / 9.0, 1e-10);
}

TEST(Cphase, SuccessfulAttemptAppliesGateModuloFrames) {
  std::mt19937_64 rng(34);
  for (std::size_t o : {0u, 1u, 3u, 4u, 2u, 8u}) {
    Register reg = ready_register(2, 2);
    FixedOutcomes pre({0, 1});
    teleport_step(reg, 0, pre);  // frames X and XZ before the gate
    teleport_step(reg, 1, pre);
    const ComplexVector logical = testutil::random_state(rng, 4);
    const ComplexMatrix before = kron(reg.frames[0].matrix(), reg.frames[1].matrix());
    reg.state = before * logical;
    FixedOutcomes pick({o});
    const AttemptResult r = cphase_attempt(reg, 0, 1, pick);
    const ComplexMatrix after = kron(reg.frames[0].matrix(), reg.frames[1].matrix());
    const ComplexVector expected = r.success ? ComplexVector(after * logical_cphase() * logical) : ComplexVector(after * logical);
    EXPECT_NEAR(testutil::overlap(reg.state, expected), 1.0, 1e-12) << o;
  }
}

TEST(Cphase, PartnersMustBeAligned) {
  Register reg = ready_register(2, 3);
  FixedOutcomes src({0});
  teleport_step(reg, 0, src);
  EXPECT_THROW(cphase_attempt(reg, 0, 1, src), ContractError);
  EXPECT_THROW(cphase_attempt(reg, 1, 1, src), ContractError);
}

TEST(Sampling, SeededStreamsRepeat) {
  Rng a(99), b(99), c(100);
  bool differs = false;
  for (int k = 0; k < 50; ++k) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    differs |= x != c.uniform();
  }
  EXPECT_TRUE(differs);
  SampledOutcomes s(5);
  const double p[] = {0.0, 1.0, 0.0};
  for (int k = 0; k < 20; ++k) EXPECT_EQ(s.choose(p), 1u);
}
