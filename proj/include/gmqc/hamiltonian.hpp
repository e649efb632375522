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
#include <optional>
#include <string>
#include <vector>

#include "gmqc/linalg.hpp"
#include "gmqc/spin.hpp"

namespace gmqc {

enum class Boundary { SpinHalfCoupled, Absent };

/// Open spin-1 chain of `sites` bulk sites with optional spin-1/2 end spins.
/// Layout order: [left spin-1/2], bulk 1..N, [right spin-1/2].
struct ChainSpec {
  static constexpr std::size_t kDenseCap = 8748;

  int sites = 1;
  Boundary left = Boundary::SpinHalfCoupled;
  Boundary right = Boundary::SpinHalfCoupled;
  double coupling = 1.0;  // J

  static ChainSpec both(int n) { return {n, Boundary::SpinHalfCoupled, Boundary::SpinHalfCoupled}; }
  static ChainSpec right_only(int n) { return {n, Boundary::Absent, Boundary::SpinHalfCoupled}; }
  static ChainSpec none(int n) { return {n, Boundary::Absent, Boundary::Absent}; }

  bool has_left() const { return left == Boundary::SpinHalfCoupled; }
  bool has_right() const { return right == Boundary::SpinHalfCoupled; }
  int boundary_count() const { return int{has_left()} + int{has_right()}; }

  /// 3^N · 2^{#boundaries}; no cap check.
  std::size_t dimension() const;

  /// Throws ContractError for N < 1 or J <= 0, SizeError above kDenseCap.
  void validate() const;

  SiteLayout layout() const;

  /// Layout position of bulk site j (1-based).
  int bulk_position(int j) const { return (has_left() ? 1 : 0) + j - 1; }
  std::optional<int> left_position() const;
  std::optional<int> right_position() const;
};

/// Residual stage: the first unmeasured bulk site.
struct ResidualIndex {
  int j = 1;
};

/// One positive summand J·P acting on a few sites of the layout.
struct Term {
  std::string label;
  std::vector<int> sites;
  ComplexMatrix op;
};

class Hamiltonian {
 public:
  Hamiltonian(SiteLayout layout, std::vector<Term> terms);

  const SiteLayout& layout() const { return layout_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t dimension() const { return layout_.size(); }

  ComplexVector apply(const ComplexVector& psi) const;

  /// Full dense matrix; SizeError above ChainSpec::kDenseCap.
  ComplexMatrix dense() const;

  /// Twice the total S^z of every basis state.
  std::vector<int> twice_sz() const;

  /// Dense block restricted to the given basis indices (rows and columns).
  ComplexMatrix block(const std::vector<std::size_t>& indices) const;

  struct Entry {
    std::size_t row, col;
    Complex value;
  };
  /// Nonzero matrix elements, one per (term, column, row); duplicates add.
  std::vector<Entry> matrix_elements() const;

 private:
  SiteLayout layout_;
  std::vector<Term> terms_;
};

/// J·[Σ P²_{k,k+1} + P^{3/2}_{0,1} + P^{3/2}_{N,N+1}] with the boundary
/// terms present as configured.
Hamiltonian build_hamiltonian(const ChainSpec& spec);

/// H(j) = J·[Σ_{k=j}^{N-1} P²_{k,k+1} + P^{3/2}_{N,N+1}] on the full layout of
/// `spec`. The right boundary term is dropped once j > N.
Hamiltonian residual_hamiltonian(const ChainSpec& spec, ResidualIndex index);

struct GroundSpace {
  double energy = 0.0;
  ComplexMatrix basis;  // orthonormal columns

  int degeneracy() const { return static_cast<int>(basis.cols()); }
};

/// Zero-energy eigenspace of a dense Hermitian matrix: every eigenvector
/// whose eigenvalue is below `tol`. InconsistencyError when there is none.
GroundSpace ground_space(const ComplexMatrix& h, double tol);

/// Same, resolved by total-S^z sectors; vectors are embedded in the full space.
GroundSpace ground_space(const Hamiltonian& h, double tol);

/// Every eigenvalue, ascending, assembled from the total-S^z sectors.
RealVector sector_spectrum(const Hamiltonian& h);

struct SpectralSummary {
  double ground_energy = 0.0;  // units of J
  int degeneracy = 0;
  double gap = 0.0;            // units of J
};

/// Ground band: eigenvalues < 1e-9·J. Gap: first eigenvalue above 1e-6·J.
SpectralSummary spectral_summary(const ChainSpec& spec);

/// ΔE / J.
double spectral_gap(const ChainSpec& spec);

/// Σ^μ(j) = exp(iπ Σ_{k=j}^N S^μ_k) ⊗ σ^μ_{N+1} on the full layout of `spec`.
ComplexMatrix string_operator(const ChainSpec& spec, ResidualIndex index, Axis axis);

/// max over terms and columns v of `basis` of ‖term·v‖.
double frustration_residual(const Hamiltonian& h, const ComplexMatrix& basis);

}  // namespace gmqc
