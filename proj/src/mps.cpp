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

#include "gmqc/mps.hpp"

#include <cmath>
#include <string>

#include "gmqc/errors.hpp"

namespace gmqc {

namespace {

constexpr double kZeroWeight = 1e-14;

SiteLayout qubit_layout(const ComplexVector& state) {
  return SiteLayout(std::vector<int>(static_cast<std::size_t>(qubit_count(state)), 2));
}

// A = K_{α_N} ··· K_{α_1} for per-site matrices picked by `pick(j)`.
template <typename Pick>
ComplexMatrix chain_product(int sites, Pick&& pick) {
  ComplexMatrix a = identity(2);
  for (int j = 0; j < sites; ++j) a = pick(j) * a;
  return a;
}

// <s0, s_{N+1}| (1 ⊗ A) |Ψ⁻>.
Complex boundary_contract(const MpsChain& chain, const ComplexMatrix& a, int left, int right) {
  Complex acc{0.0, 0.0};
  for (int t = 0; t < 2; ++t) acc += chain.boundary_singlet(2 * left + t) * a(right, t);
  return acc;
}

void check_spin(int s) {
  if (s != 0 && s != 1) throw ContractError("spin-1/2 label must be 0 (up) or 1 (down)");
}

}  // namespace

MpsChain build_aklt_mps(int sites) {
  if (sites < 1) throw ContractError("MPS chain needs at least one site");
  MpsChain chain;
  chain.sites = sites;
  const auto m = m_matrices();
  for (int a = 0; a < 3; ++a) chain.site_kraus[a] = m[a] / std::sqrt(3.0);
  chain.boundary_singlet = ComplexVector::Zero(4);
  chain.boundary_singlet(1) = 1.0 / std::sqrt(2.0);   // |up, down>
  chain.boundary_singlet(2) = -1.0 / std::sqrt(2.0);  // |down, up>
  return chain;
}

Complex amplitude(const MpsChain& chain, const Configuration& config) {
  check_spin(config.left_spin);
  check_spin(config.right_spin);
  if (static_cast<int>(config.bulk.size()) != chain.sites)
    throw ContractError("configuration length does not match the chain");
  for (int a : config.bulk)
    if (a < 1 || a > 3) throw ContractError("frame label must be 1, 2 or 3");
  const auto a = chain_product(chain.sites, [&](int j) -> const ComplexMatrix& {
    return chain.site_kraus[config.bulk[j] - 1];
  });
  return boundary_contract(chain, a, config.left_spin, config.right_spin);
}

Complex amplitude_sz(const MpsChain& chain, const Configuration& config) {
  check_spin(config.left_spin);
  check_spin(config.right_spin);
  if (static_cast<int>(config.bulk.size()) != chain.sites)
    throw ContractError("configuration length does not match the chain");
  const ComplexMatrix kets = frame_kets();
  std::array<ComplexMatrix, 3> sz_tensor;
  for (int m = 0; m < 3; ++m) {
    sz_tensor[m] = ComplexMatrix::Zero(2, 2);
    for (int a = 0; a < 3; ++a) sz_tensor[m] += kets(m, a) * chain.site_kraus[a];
  }
  for (int m : config.bulk)
    if (m < 0 || m > 2) throw ContractError("S^z label must be 0, 1 or 2");
  const auto a = chain_product(chain.sites, [&](int j) -> const ComplexMatrix& {
    return sz_tensor[config.bulk[j]];
  });
  return boundary_contract(chain, a, config.left_spin, config.right_spin);
}

ComplexVector to_dense(const MpsChain& chain) {
  if (chain.sites > 8) throw SizeError("dense MPS expansion is limited to 8 sites");
  const SiteLayout layout([&] {
    std::vector<int> dims(static_cast<std::size_t>(chain.sites) + 2, 3);
    dims.front() = dims.back() = 2;
    return dims;
  }());
  ComplexVector psi(static_cast<Eigen::Index>(layout.size()));
  Configuration config;
  config.bulk.resize(static_cast<std::size_t>(chain.sites));
  for (std::size_t i = 0; i < layout.size(); ++i) {
    config.left_spin = layout.digit(i, 0);
    for (int j = 0; j < chain.sites; ++j) config.bulk[j] = layout.digit(i, j + 1);
    config.right_spin = layout.digit(i, chain.sites + 1);
    psi(static_cast<Eigen::Index>(i)) = amplitude_sz(chain, config);
  }
  return psi;
}

double correlator(int sites, int j, int j_prime, Axis axis) {
  if (j > j_prime) std::swap(j, j_prime);
  if (j < 1 || j_prime > sites) throw ContractError("correlator sites must lie in 1..N");
  const MpsChain chain = build_aklt_mps(sites);
  const ComplexMatrix kets = frame_kets();
  const ComplexMatrix s = spin1_operators().along(axis);
  const ComplexMatrix s_frame = kets.adjoint() * s * kets;
  const ComplexMatrix s2_frame = kets.adjoint() * s * s * kets;

  // ρ ↦ Σ_{αβ} O_{βα} K_α ρ K_β†, starting from the reduced singlet state 1/2.
  ComplexMatrix rho = identity(2) / 2.0;
  for (int k = 1; k <= sites; ++k) {
    const ComplexMatrix* op = nullptr;
    if (k == j && j == j_prime) op = &s2_frame;
    else if (k == j || k == j_prime) op = &s_frame;
    ComplexMatrix next = ComplexMatrix::Zero(2, 2);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const Complex w = op ? (*op)(b, a) : Complex(a == b ? 1.0 : 0.0);
        if (w == Complex{0.0, 0.0}) continue;
        next += w * chain.site_kraus[a] * rho * chain.site_kraus[b].adjoint();
      }
    }
    rho = std::move(next);
  }
  return rho.trace().real();
}

ComplexMatrix outcome_kraus(const MpsChain& chain, const ComplexVector& ket) {
  if (ket.size() != 3) throw ContractError("outcome state must be a 3-vector in the frame basis");
  ComplexMatrix k = ComplexMatrix::Zero(2, 2);
  for (int a = 0; a < 3; ++a) k += std::conj(ket(a)) * chain.site_kraus[a];
  return k;
}

int qubit_count(const ComplexVector& state) {
  int n = 0;
  while ((Eigen::Index{1} << n) < state.size()) ++n;
  if ((Eigen::Index{1} << n) != state.size())
    throw ContractError("joint logical vector length must be a power of two");
  return n;
}

double branch_probability(const ComplexVector& state, std::span<const int> qubits,
                          const ComplexMatrix& kraus) {
  return apply_local(kraus, qubits, qubit_layout(state), state).squaredNorm();
}

namespace {

double apply_and_normalise(ComplexVector& state, std::span<const int> qubits,
                           const ComplexMatrix& kraus) {
  ComplexVector next = apply_local(kraus, qubits, qubit_layout(state), state);
  const double p = next.squaredNorm();
  if (p < kZeroWeight)
    throw ImpossibleOutcomeError("measurement outcome has zero probability (" +
                                 std::to_string(p) + ")");
  state = next / std::sqrt(p);
  return p;
}

void consume(MpsChain& chain) {
  if (chain.remaining() <= 0) throw ContractError("chain has no unmeasured bulk sites");
  ++chain.consumed;
}

}  // namespace

double apply_site_operator(MpsChain& chain, ComplexVector& state, int qubit,
                           const ComplexMatrix& kraus) {
  if (chain.remaining() <= 0) throw ContractError("chain has no unmeasured bulk sites");
  const int q[] = {qubit};
  const double p = apply_and_normalise(state, q, kraus);
  consume(chain);
  return p;
}

double apply_pair_operator(MpsChain& a, MpsChain& b, ComplexVector& state, int qubit_a,
                           int qubit_b, const ComplexMatrix& kraus) {
  if (a.remaining() <= 0 || b.remaining() <= 0)
    throw ContractError("chain has no unmeasured bulk sites");
  const int q[] = {qubit_a, qubit_b};
  const double p = apply_and_normalise(state, q, kraus);
  consume(a);
  consume(b);
  return p;
}

std::pair<ComplexVector, double> boundary_conditional(const MpsChain& chain, int spin) {
  check_spin(spin);
  ComplexVector v(2);
  v(0) = chain.boundary_singlet(2 * spin);
  v(1) = chain.boundary_singlet(2 * spin + 1);
  const double p = v.squaredNorm();
  if (p < kZeroWeight) throw ImpossibleOutcomeError("boundary outcome has zero probability");
  return {v / std::sqrt(p), p};
}

}  // namespace gmqc
