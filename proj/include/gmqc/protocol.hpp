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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gmqc/linalg.hpp"
#include "gmqc/mps.hpp"
#include "gmqc/spin.hpp"

namespace gmqc {

/// Byproduct X^x Z^z, phase discarded.
struct PauliFrame {
  bool x = false;
  bool z = false;

  PauliFrame operator*(PauliFrame other) const { return {x != other.x, z != other.z}; }
  PauliFrame& operator*=(PauliFrame other) { return *this = *this * other; }
  bool operator==(const PauliFrame&) const = default;

  ComplexMatrix matrix() const;
  std::string name() const;  // "I", "X", "Z", "XZ"
  static std::optional<PauliFrame> parse(std::string_view name);
};

inline constexpr PauliFrame kFrameI{false, false};
inline constexpr PauliFrame kFrameX{true, false};
inline constexpr PauliFrame kFrameZ{false, true};
inline constexpr PauliFrame kFrameXZ{true, true};

/// Pauli class of a 2×2 matrix proportional to a unitary X^x Z^z, if any.
std::optional<PauliFrame> pauli_class(const ComplexMatrix& m, double tol = 1e-10);

/// R^Z(θ) = diag(1, e^{iθ}).
ComplexMatrix logical_rz(double theta);
/// R^X(θ) = |+><+| + e^{iθ}|-><-|.
ComplexMatrix logical_rx(double theta);
/// diag(1, 1, 1, -1).
ComplexMatrix logical_cphase();

/// Seeded generator; identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Picks a measurement outcome given the branch probabilities.
class OutcomeSource {
 public:
  virtual ~OutcomeSource() = default;
  virtual std::size_t choose(std::span<const double> probabilities) = 0;
};

class SampledOutcomes final : public OutcomeSource {
 public:
  explicit SampledOutcomes(std::uint64_t seed) : rng_(seed) {}
  std::size_t choose(std::span<const double> probabilities) override;

 private:
  Rng rng_;
};

/// Logical register: one chain per wire plus the joint logical vector of the
/// N+1 boundary spins (wire 0 is the most significant qubit).
struct Register {
  Register(int wires, int sites);

  int wires() const { return static_cast<int>(chains.size()); }

  std::vector<MpsChain> chains;
  std::vector<PauliFrame> frames;
  std::vector<bool> initialized;
  ComplexVector state;
};

struct AttemptResult {
  std::vector<int> outcome;              // frame labels 1..3 (or 0/1 spin labels)
  bool success = true;
  std::vector<PauliFrame> frame_delta;   // one per wire touched
  double probability = 1.0;
  std::vector<double> branch_probabilities;
  int site = 0;
};

/// Outcome states ½((1±e^{-iθ})|1> + (1∓e^{-iθ})|2>), |3>, as columns in the frame.
ComplexMatrix rz_basis(double theta);
/// Outcome states ½((1±e^{iθ})|2> + (1∓e^{iθ})|3>), |1>, as columns in the frame.
ComplexMatrix rx_basis(double theta);

/// Byproducts of the three outcomes of a rotation attempt (Z or X axis).
std::array<PauliFrame, 3> rotation_byproducts(Axis axis);
/// Byproducts of a standard-basis (teleport) measurement.
std::array<PauliFrame, 3> teleport_byproducts();

/// Z axis: -θ iff the frame contains X. X axis: -θ iff it contains Z.
double adapt_angle(PauliFrame frame, Axis axis, double theta);

/// Measure site 0 in ẑ. Outcome label 1 is s^z = -1/2 (logical |0>), label 0
/// is s^z = +1/2 (|1>, recorded as |0> with byproduct X).
AttemptResult init_wire(Register& reg, int wire, OutcomeSource& source);

/// One heralded attempt of R^axis(θ) at the next site; `theta` is the
/// already adapted angle. Updates the wire frame.
AttemptResult attempt_rotation(Register& reg, int wire, Axis axis, double theta,
                               OutcomeSource& source);

/// Standard-basis measurement of the next site: logical identity.
AttemptResult teleport_step(Register& reg, int wire, OutcomeSource& source);

/// Γ = 1₄ - ½(1₂-X)⊗(1₂-X) on span{|1>,|2>}⊗{|1>,|2>}.
ComplexMatrix gamma_unitary();

/// exp(iπ H^int/χ) on two spin-1 sites in the S^z⊗S^z basis.
ComplexMatrix interaction_unitary();

/// Logical 4×4 operator for joint outcome (α, β): Σ <αβ|U|ab> K_a⊗K_b.
ComplexMatrix cphase_kraus(int alpha, int beta);

struct CphaseBranch {
  bool success = false;
  PauliFrame first, second;
};

/// Byproduct table for the nine joint outcomes, indexed [α-1][β-1], derived
/// by decomposing each Kraus operator as (P⊗Q)·CPHASE or (P⊗Q).
const std::array<std::array<CphaseBranch, 3>, 3>& cphase_table();

/// Propagate an existing frame pair through a logical CPHASE.
std::pair<PauliFrame, PauliFrame> conjugate_by_cphase(PauliFrame a, PauliFrame b);

/// One heralded CPHASE attempt; both chains must sit at the same site.
AttemptResult cphase_attempt(Register& reg, int wire_a, int wire_b, OutcomeSource& source);

struct ReadoutResult {
  int physical = 0;  // 0: s^z = +1/2, 1: s^z = -1/2
  int logical = 0;
  double probability = 1.0;
  std::vector<double> branch_probabilities;
};

/// |0^L> if (s^z = +1/2 and no X) or (s^z = -1/2 and X).
int decode_readout(int physical, PauliFrame frame);

/// ẑ measurement of site N+1; every bulk site must already be consumed.
ReadoutResult readout(Register& reg, int wire, OutcomeSource& source);

}  // namespace gmqc
