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

#include "gmqc/protocol.hpp"

#include <cmath>
#include <string>

#include "gmqc/errors.hpp"

namespace gmqc {

ComplexMatrix PauliFrame::matrix() const {
  ComplexMatrix m = identity(2);
  if (x) m = m * pauli(Axis::X);
  if (z) m = m * pauli(Axis::Z);
  return m;
}

std::string PauliFrame::name() const {
  if (x && z) return "XZ";
  if (x) return "X";
  if (z) return "Z";
  return "I";
}

std::optional<PauliFrame> PauliFrame::parse(std::string_view name) {
  if (name == "I") return kFrameI;
  if (name == "X") return kFrameX;
  if (name == "Z") return kFrameZ;
  if (name == "XZ") return kFrameXZ;
  return std::nullopt;
}

std::optional<PauliFrame> pauli_class(const ComplexMatrix& m, double tol) {
  if (m.rows() != 2 || m.cols() != 2) return std::nullopt;
  const double scale = m.norm() / std::sqrt(2.0);
  if (scale == 0.0) return std::nullopt;
  for (const PauliFrame p : {kFrameI, kFrameX, kFrameZ, kFrameXZ}) {
    const Complex overlap = (p.matrix().adjoint() * m).trace() / 2.0;
    if (std::abs(std::abs(overlap) - scale) < tol * scale) return p;
  }
  return std::nullopt;
}

ComplexMatrix logical_rz(double theta) {
  ComplexMatrix r = identity(2);
  r(1, 1) = std::exp(kI * theta);
  return r;
}

ComplexMatrix logical_rx(double theta) {
  const Complex e = std::exp(kI * theta);
  return 0.5 * (1.0 + e) * identity(2) + 0.5 * (1.0 - e) * pauli(Axis::X);
}

ComplexMatrix logical_cphase() {
  ComplexMatrix c = identity(4);
  c(3, 3) = -1.0;
  return c;
}

std::size_t SampledOutcomes::choose(std::span<const double> probabilities) {
  const double u = rng_.uniform();
  double total = 0.0;
  for (double p : probabilities) total += p;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] <= 0.0) continue;
    last_positive = k;
    cumulative += probabilities[k] / total;
    if (u < cumulative) return k;
  }
  return last_positive;
}

Register::Register(int wires, int sites) {
  if (wires < 1) throw ContractError("register needs at least one wire");
  if (wires > 16) throw SizeError("joint logical vector is limited to 16 wires");
  chains.assign(static_cast<std::size_t>(wires), build_aklt_mps(sites));
  frames.assign(static_cast<std::size_t>(wires), kFrameI);
  initialized.assign(static_cast<std::size_t>(wires), false);
  state = ComplexVector::Zero(Eigen::Index{1} << wires);
  state(0) = 1.0;
}

ComplexMatrix rz_basis(double theta) {
  const Complex e = std::exp(-kI * theta);
  ComplexMatrix b = ComplexMatrix::Zero(3, 3);
  b(0, 0) = 0.5 * (1.0 + e);
  b(1, 0) = 0.5 * (1.0 - e);
  b(0, 1) = 0.5 * (1.0 - e);
  b(1, 1) = 0.5 * (1.0 + e);
  b(2, 2) = 1.0;
  return b;
}

ComplexMatrix rx_basis(double theta) {
  const Complex e = std::exp(kI * theta);
  ComplexMatrix b = ComplexMatrix::Zero(3, 3);
  b(1, 0) = 0.5 * (1.0 + e);
  b(2, 0) = 0.5 * (1.0 - e);
  b(1, 1) = 0.5 * (1.0 - e);
  b(2, 1) = 0.5 * (1.0 + e);
  b(0, 2) = 1.0;
  return b;
}

std::array<PauliFrame, 3> rotation_byproducts(Axis axis) {
  switch (axis) {
    case Axis::Z: return {kFrameX, kFrameXZ, kFrameZ};
    case Axis::X: return {kFrameXZ, kFrameZ, kFrameX};
    case Axis::Y: break;
  }
  throw ContractError("logical rotations are only defined about Z and X");
}

std::array<PauliFrame, 3> teleport_byproducts() { return {kFrameX, kFrameXZ, kFrameZ}; }

double adapt_angle(PauliFrame frame, Axis axis, double theta) {
  switch (axis) {
    case Axis::Z: return frame.x ? -theta : theta;
    case Axis::X: return frame.z ? -theta : theta;
    case Axis::Y: break;
  }
  throw ContractError("logical rotations are only defined about Z and X");
}

namespace {

void require_wire(const Register& reg, int wire) {
  if (wire < 0 || wire >= reg.wires()) throw ContractError("wire index out of range");
}

void require_ready(const Register& reg, int wire) {
  require_wire(reg, wire);
  if (!reg.initialized[wire]) throw ContractError("wire is not initialised");
  if (reg.chains[wire].remaining() <= 0)
    throw ContractError("wire " + std::to_string(wire) + " has no unmeasured bulk sites");
}

// Measure the next site of `wire` in the basis given by the columns of `basis`.
AttemptResult measure_site(Register& reg, int wire, const ComplexMatrix& basis,
                           const std::array<PauliFrame, 3>& byproducts,
                           const std::array<bool, 3>& success, OutcomeSource& source) {
  require_ready(reg, wire);
  auto& chain = reg.chains[wire];
  std::array<ComplexMatrix, 3> kraus;
  AttemptResult r;
  r.site = chain.next_site();
  const int q[] = {wire};
  for (int o = 0; o < 3; ++o) {
    kraus[o] = outcome_kraus(chain, basis.col(o));
    r.branch_probabilities.push_back(branch_probability(reg.state, q, kraus[o]));
  }
  const auto pick = source.choose(r.branch_probabilities);
  r.probability = apply_site_operator(chain, reg.state, wire, kraus[pick]);
  r.outcome = {static_cast<int>(pick) + 1};
  r.success = success[pick];
  r.frame_delta = {byproducts[pick]};
  reg.frames[wire] *= byproducts[pick];
  return r;
}

}  // namespace

AttemptResult init_wire(Register& reg, int wire, OutcomeSource& source) {
  require_wire(reg, wire);
  if (reg.initialized[wire]) throw ContractError("wire is already initialised");
  auto& chain = reg.chains[wire];
  std::array<std::pair<ComplexVector, double>, 2> branches = {boundary_conditional(chain, 0),
                                                              boundary_conditional(chain, 1)};
  AttemptResult r;
  r.site = 0;
  r.branch_probabilities = {branches[0].second, branches[1].second};
  const auto pick = source.choose(r.branch_probabilities);
  const auto& [v, p] = branches[pick];
  // Record |1^L> as |0^L> carrying an X byproduct.
  const PauliFrame frame = std::abs(v(1)) > std::abs(v(0)) ? kFrameX : kFrameI;
  ComplexMatrix prepare = ComplexMatrix::Zero(2, 2);
  prepare.col(0) = v;
  reg.state = apply_local(prepare, std::span<const int>(&wire, 1),
                          SiteLayout(std::vector<int>(static_cast<std::size_t>(reg.wires()), 2)),
                          reg.state);
  reg.frames[wire] = frame;
  reg.initialized[wire] = true;
  chain.boundary_measured = true;
  r.probability = p;
  r.outcome = {static_cast<int>(pick)};
  r.frame_delta = {frame};
  return r;
}

AttemptResult attempt_rotation(Register& reg, int wire, Axis axis, double theta,
                               OutcomeSource& source) {
  const ComplexMatrix basis = axis == Axis::Z ? rz_basis(theta) : rx_basis(theta);
  return measure_site(reg, wire, basis, rotation_byproducts(axis), {true, true, false}, source);
}

AttemptResult teleport_step(Register& reg, int wire, OutcomeSource& source) {
  return measure_site(reg, wire, identity(3), teleport_byproducts(), {true, true, true}, source);
}

ComplexMatrix gamma_unitary() {
  const ComplexMatrix d = identity(2) - pauli(Axis::X);
  return identity(4) - 0.5 * kron(d, d);
}

ComplexMatrix interaction_unitary() {
  // H^int/χ = |Sz=1><Sz=1| ⊗ |Sz=1><Sz=1| is diagonal; exponentiate entrywise.
  ComplexMatrix u = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) {
    const double h = (i == 0) ? 1.0 : 0.0;
    u(i, i) = std::exp(kI * M_PI * h);
  }
  return u;
}

ComplexMatrix cphase_kraus(int alpha, int beta) {
  if (alpha < 1 || alpha > 3 || beta < 1 || beta > 3)
    throw ContractError("joint outcome labels must lie in 1..3");
  static const auto table = [] {
    const ComplexMatrix f = kron(frame_kets(), frame_kets());
    const ComplexMatrix u_frame = f.adjoint() * interaction_unitary() * f;
    const auto k = build_aklt_mps(1).site_kraus;
    std::array<ComplexMatrix, 9> out;
    for (int row = 0; row < 9; ++row) {
      out[row] = ComplexMatrix::Zero(4, 4);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) out[row] += u_frame(row, 3 * a + b) * kron(k[a], k[b]);
    }
    return out;
  }();
  return table[3 * (alpha - 1) + (beta - 1)];
}

namespace {

std::optional<std::pair<PauliFrame, PauliFrame>> two_qubit_pauli_class(const ComplexMatrix& m) {
  const double scale = m.norm() / 2.0;
  for (const PauliFrame p : {kFrameI, kFrameX, kFrameZ, kFrameXZ})
    for (const PauliFrame q : {kFrameI, kFrameX, kFrameZ, kFrameXZ}) {
      const Complex overlap = (kron(p.matrix(), q.matrix()).adjoint() * m).trace() / 4.0;
      if (std::abs(std::abs(overlap) - scale) < 1e-10 * scale) return std::pair{p, q};
    }
  return std::nullopt;
}

}  // namespace

const std::array<std::array<CphaseBranch, 3>, 3>& cphase_table() {
  static const auto table = [] {
    std::array<std::array<CphaseBranch, 3>, 3> t{};
    const ComplexMatrix cz = logical_cphase();
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        const ComplexMatrix k = 3.0 * cphase_kraus(a, b);
        auto& entry = t[a - 1][b - 1];
        if (auto local = two_qubit_pauli_class(k)) {
          entry = {false, local->first, local->second};
        } else if (auto entangled = two_qubit_pauli_class(k * cz.adjoint())) {
          entry = {true, entangled->first, entangled->second};
        } else {
          throw InconsistencyError("CPHASE Kraus operator has no Pauli decomposition");
        }
      }
    }
    return t;
  }();
  return table;
}

std::pair<PauliFrame, PauliFrame> conjugate_by_cphase(PauliFrame a, PauliFrame b) {
  // CPHASE·(X⊗1) = (X⊗Z)·CPHASE; Z factors commute through.
  return {{a.x, a.z != b.x}, {b.x, b.z != a.x}};
}

AttemptResult cphase_attempt(Register& reg, int wire_a, int wire_b, OutcomeSource& source) {
  require_ready(reg, wire_a);
  require_ready(reg, wire_b);
  if (wire_a == wire_b) throw ContractError("CPHASE needs two distinct wires");
  auto& ca = reg.chains[wire_a];
  auto& cb = reg.chains[wire_b];
  if (ca.next_site() != cb.next_site())
    throw ContractError("CPHASE partners must sit at the same site index");
  AttemptResult r;
  r.site = ca.next_site();
  const int q[] = {wire_a, wire_b};
  std::array<ComplexMatrix, 9> kraus;
  for (int o = 0; o < 9; ++o) {
    kraus[o] = cphase_kraus(o / 3 + 1, o % 3 + 1);
    r.branch_probabilities.push_back(branch_probability(reg.state, q, kraus[o]));
  }
  const auto pick = source.choose(r.branch_probabilities);
  r.probability = apply_pair_operator(ca, cb, reg.state, wire_a, wire_b, kraus[pick]);
  const int alpha = static_cast<int>(pick) / 3 + 1;
  const int beta = static_cast<int>(pick) % 3 + 1;
  const auto& branch = cphase_table()[alpha - 1][beta - 1];
  r.outcome = {alpha, beta};
  r.success = branch.success;
  r.frame_delta = {branch.first, branch.second};
  auto& fa = reg.frames[wire_a];
  auto& fb = reg.frames[wire_b];
  if (branch.success) std::tie(fa, fb) = conjugate_by_cphase(fa, fb);
  fa *= branch.first;
  fb *= branch.second;
  return r;
}

int decode_readout(int physical, PauliFrame frame) { return physical ^ int{frame.x}; }

ReadoutResult readout(Register& reg, int wire, OutcomeSource& source) {
  require_wire(reg, wire);
  if (!reg.initialized[wire]) throw ContractError("wire is not initialised");
  if (reg.chains[wire].remaining() != 0)
    throw ContractError("readout needs every bulk site of the wire consumed");
  std::array<ComplexMatrix, 2> projectors = {ComplexMatrix::Zero(2, 2),
                                             ComplexMatrix::Zero(2, 2)};
  projectors[0](0, 0) = 1.0;
  projectors[1](1, 1) = 1.0;
  const int q[] = {wire};
  const double probs[] = {branch_probability(reg.state, q, projectors[0]),
                          branch_probability(reg.state, q, projectors[1])};
  const auto pick = source.choose(probs);
  const SiteLayout layout(std::vector<int>(static_cast<std::size_t>(reg.wires()), 2));
  ComplexVector next = apply_local(projectors[pick], q, layout, reg.state);
  const double p = next.squaredNorm();
  if (p < 1e-14) throw ImpossibleOutcomeError("readout outcome has zero probability");
  reg.state = next / std::sqrt(p);
  ReadoutResult r;
  r.physical = static_cast<int>(pick);
  r.logical = decode_readout(r.physical, reg.frames[wire]);
  r.probability = p;
  r.branch_probabilities = {probs[0], probs[1]};
  return r;
}

}  // namespace gmqc
