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

#include "gmqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SparseCore>
#include <unsupported/Eigen/KroneckerProduct>

#include "gmqc/errors.hpp"

namespace gmqc {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (std::abs(a(i, j) - std::conj(a(j, i))) >= tol) return false;
  return true;
}

namespace {

bool purely_real(const ComplexMatrix& a) {
  return (a.imag().array() == 0.0).all();
}

void require_hermitian(const ComplexMatrix& h) {
  if (!is_hermitian(h, 1e-12))
    throw ContractError("eigh: input matrix is not Hermitian within 1e-12");
}

EigenDecomposition solve(const ComplexMatrix& h, bool want_vectors) {
  require_hermitian(h);
  EigenDecomposition out;
  if (h.rows() == 0) return out;
  const int options = want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  if (purely_real(h)) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), options);
    if (es.info() != Eigen::Success) throw InconsistencyError("eigh: eigensolver did not converge");
    out.values = es.eigenvalues();
    if (want_vectors) out.vectors = es.eigenvectors().cast<Complex>();
  } else {
    const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, options);
    if (es.info() != Eigen::Success) throw InconsistencyError("eigh: eigensolver did not converge");
    out.values = es.eigenvalues();
    if (want_vectors) out.vectors = es.eigenvectors();
  }
  return out;
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& h) { return solve(h, true); }

RealVector eigvalsh(const ComplexMatrix& h) { return solve(h, false).values; }

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

double bracket_norm(const ComplexMatrix& a, const ComplexMatrix& b, int sign) {
  const auto sparse_enough = [](const ComplexMatrix& m) {
    const auto nnz = (m.array() != Complex{0.0, 0.0}).count();
    return nnz * 10 < m.size();
  };
  const double s = sign >= 0 ? 1.0 : -1.0;
  if (sparse_enough(a) && sparse_enough(b)) {
    using Sparse = Eigen::SparseMatrix<Complex>;
    const Sparse sa = a.sparseView();
    const Sparse sb = b.sparseView();
    const Sparse ab = sa * sb;
    const Sparse ba = sb * sa;
    return Sparse(ab + s * ba).norm();
  }
  return (a * b + s * (b * a)).norm();
}

double fidelity(const ComplexVector& a, const ComplexVector& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(a.dot(b)) / (na * nb);
}

SiteLayout::SiteLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  strides_.assign(dims_.size(), 1);
  size_ = 1;
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] < 1) throw ContractError("SiteLayout: local dimension must be positive");
    strides_[k] = size_;
    size_ *= static_cast<std::size_t>(dims_[k]);
  }
}

std::vector<std::size_t> local_offsets(std::span<const int> sites, const SiteLayout& layout) {
  std::size_t local_dim = 1;
  for (int s : sites) {
    if (s < 0 || static_cast<std::size_t>(s) >= layout.num_sites())
      throw ContractError("local_offsets: site index out of range");
    local_dim *= static_cast<std::size_t>(layout.dim(s));
  }
  std::vector<std::size_t> offsets(local_dim, 0);
  for (std::size_t l = 0; l < local_dim; ++l) {
    std::size_t rest = l;
    std::size_t off = 0;
    for (std::size_t k = sites.size(); k-- > 0;) {
      const auto d = static_cast<std::size_t>(layout.dim(sites[k]));
      off += (rest % d) * layout.stride(sites[k]);
      rest /= d;
    }
    offsets[l] = off;
  }
  return offsets;
}

namespace {

// Calls fn(base) for every full index whose digits on `sites` are all zero.
template <typename Fn>
void for_each_base(std::span<const int> sites, const SiteLayout& layout, Fn&& fn) {
  for (std::size_t i = 0; i < layout.size(); ++i) {
    bool zero = true;
    for (int s : sites) {
      if (layout.digit(i, s) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) fn(i);
  }
}

}  // namespace

ComplexVector apply_local(const ComplexMatrix& op, std::span<const int> sites,
                          const SiteLayout& layout, const ComplexVector& psi) {
  const auto offsets = local_offsets(sites, layout);
  const auto d = static_cast<Eigen::Index>(offsets.size());
  if (op.rows() != d || op.cols() != d)
    throw ContractError("apply_local: operator shape does not match the selected sites");
  if (static_cast<std::size_t>(psi.size()) != layout.size())
    throw ContractError("apply_local: state size does not match layout");
  ComplexVector out = ComplexVector::Zero(psi.size());
  ComplexVector local(d);
  for_each_base(sites, layout, [&](std::size_t base) {
    for (Eigen::Index c = 0; c < d; ++c) local(c) = psi(base + offsets[c]);
    for (Eigen::Index r = 0; r < d; ++r) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index c = 0; c < d; ++c) acc += op(r, c) * local(c);
      out(base + offsets[r]) = acc;
    }
  });
  return out;
}

ComplexMatrix embed_local(const ComplexMatrix& op, std::span<const int> sites,
                          const SiteLayout& layout) {
  const auto offsets = local_offsets(sites, layout);
  const auto d = static_cast<Eigen::Index>(offsets.size());
  if (op.rows() != d || op.cols() != d)
    throw ContractError("embed_local: operator shape does not match the selected sites");
  const auto n = static_cast<Eigen::Index>(layout.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for_each_base(sites, layout, [&](std::size_t base) {
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) out(base + offsets[r], base + offsets[c]) = op(r, c);
  });
  return out;
}

}  // namespace gmqc
