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
#include <span>
#include <vector>

#include "gmqc/linalg.hpp"
#include "gmqc/spin.hpp"

namespace gmqc {

/// Bond-dimension-2 form of the AKLT ground state with the boundary singlet
/// on sites (0, N+1):
///
///   |G> = Σ_α |α_1..α_N> ⊗ (1 ⊗ K_{α_N}···K_{α_1}) |Ψ⁻_{0,N+1}>,  K_α = <α|M>/√3.
///
/// The chain also acts as a cursor for the measurement protocol: site 0 is
/// consumed by wire initialisation, bulk sites are consumed left to right, and
/// the logical qubit lives on site N+1.
struct MpsChain {
  int sites = 0;
  std::array<ComplexMatrix, 3> site_kraus;
  ComplexVector boundary_singlet;  // amplitudes over (site 0, site N+1)
  bool boundary_measured = false;
  int consumed = 0;                // bulk sites measured so far

  int next_site() const { return consumed + 1; }
  int remaining() const { return sites - consumed; }
};

MpsChain build_aklt_mps(int sites);

/// Basis labels for one amplitude. Spin-1/2 labels: 0 = up, 1 = down.
/// Bulk labels are frame labels 1..3 (amplitude) or S^z layout indices 0..2
/// (amplitude_sz, 0 ↔ Sz=+1).
struct Configuration {
  int left_spin = 0;
  std::vector<int> bulk;
  int right_spin = 0;
};

/// Amplitude in the {|1>,|2>,|3>} frame. ContractError on bad labels.
Complex amplitude(const MpsChain& chain, const Configuration& config);

/// Amplitude in the S^z basis, contracting site tensors rotated through W.
Complex amplitude_sz(const MpsChain& chain, const Configuration& config);

/// Dense S^z-basis vector on the layout [spin-1/2, bulk 1..N, spin-1/2].
ComplexVector to_dense(const MpsChain& chain);

/// <G|S^μ_j S^μ_j'|G> by transfer-channel contraction; j == j' gives <(S^μ_j)^2>.
double correlator(int sites, int j, int j_prime, Axis axis);

/// Logical-space operator for a single-site outcome: Σ_α conj(<α|γ>) K_α,
/// with `ket` the outcome state in the {|1>,|2>,|3>} frame.
ComplexMatrix outcome_kraus(const MpsChain& chain, const ComplexVector& ket);

/// Number of qubits of a 2^n joint logical vector.
int qubit_count(const ComplexVector& state);

/// ‖K·ψ‖² with K acting on the given qubits of the joint logical vector.
double branch_probability(const ComplexVector& state, std::span<const int> qubits,
                          const ComplexMatrix& kraus);

/// Consume the next bulk site of `chain`, apply `kraus` to `qubit` of the
/// joint logical vector and renormalise. Returns the branch probability.
/// ImpossibleOutcomeError on a zero-weight branch.
double apply_site_operator(MpsChain& chain, ComplexVector& state, int qubit,
                           const ComplexMatrix& kraus);

/// Two-chain version for a joint two-site outcome; both chains advance.
double apply_pair_operator(MpsChain& a, MpsChain& b, ComplexVector& state, int qubit_a,
                           int qubit_b, const ComplexMatrix& kraus);

/// State of site N+1 after site 0 is found in `spin` (0 = up, 1 = down),
/// normalised, together with the probability of that outcome.
std::pair<ComplexVector, double> boundary_conditional(const MpsChain& chain, int spin);

}  // namespace gmqc
