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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gmqc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Kronecker product; (a⊗b)(i·p+k, j·q+l) = a(i,j)·b(k,l) for b of shape p×q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Left-to-right Kronecker product of a list of factors.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns, vectors.col(k) ↔ values(k)
};

/// Hermitian eigendecomposition. Throws ContractError when `h` is not
/// Hermitian within 1e-12. Purely real input takes the real-symmetric path.
EigenDecomposition eigh(const ComplexMatrix& h);

/// Eigenvalues only, ascending.
RealVector eigvalsh(const ComplexMatrix& h);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius norm of [a,b] (sign = -1) or {a,b} (sign = +1). Uses sparse
/// products when both operands are mostly zero.
double bracket_norm(const ComplexMatrix& a, const ComplexMatrix& b, int sign);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const ComplexVector& a, const ComplexVector& b);

/// Mixed-radix tensor-product layout. Site 0 is the most significant digit,
/// matching kron ordering.
class SiteLayout {
 public:
  SiteLayout() = default;
  explicit SiteLayout(std::vector<int> dims);

  std::size_t num_sites() const { return dims_.size(); }
  int dim(std::size_t site) const { return dims_[site]; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return size_; }
  std::size_t stride(std::size_t site) const { return strides_[site]; }
  int digit(std::size_t index, std::size_t site) const {
    return static_cast<int>((index / strides_[site]) % dims_[site]);
  }

 private:
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Offsets of every local configuration of `sites` (first listed site most
/// significant) within the full index space.
std::vector<std::size_t> local_offsets(std::span<const int> sites, const SiteLayout& layout);

/// Apply `op`, whose tensor factors follow the order of `sites`, to `psi`.
ComplexVector apply_local(const ComplexMatrix& op, std::span<const int> sites,
                          const SiteLayout& layout, const ComplexVector& psi);

/// Dense embedding of a local operator into the full layout.
ComplexMatrix embed_local(const ComplexMatrix& op, std::span<const int> sites,
                          const SiteLayout& layout);

}  // namespace gmqc
