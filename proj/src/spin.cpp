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

#include "gmqc/spin.hpp"

#include <cmath>

namespace gmqc {

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

const ComplexMatrix& SpinOperators::along(Axis axis) const {
  switch (axis) {
    case Axis::X: return x;
    case Axis::Y: return y;
    case Axis::Z: break;
  }
  return z;
}

SpinOperators spin1_operators() {
  const double r = 1.0 / std::sqrt(2.0);
  SpinOperators s;
  s.x = ComplexMatrix::Zero(3, 3);
  s.y = ComplexMatrix::Zero(3, 3);
  s.z = ComplexMatrix::Zero(3, 3);
  s.x(0, 1) = s.x(1, 0) = s.x(1, 2) = s.x(2, 1) = r;
  s.y(0, 1) = s.y(1, 2) = -kI * r;
  s.y(1, 0) = s.y(2, 1) = kI * r;
  s.z(0, 0) = 1.0;
  s.z(2, 2) = -1.0;
  return s;
}

SpinOperators spin_half_operators() {
  return {0.5 * pauli(Axis::X), 0.5 * pauli(Axis::Y), 0.5 * pauli(Axis::Z)};
}

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  switch (axis) {
    case Axis::X:
      p(0, 1) = p(1, 0) = 1.0;
      break;
    case Axis::Y:
      p(0, 1) = -kI;
      p(1, 0) = kI;
      break;
    case Axis::Z:
      p(0, 0) = 1.0;
      p(1, 1) = -1.0;
      break;
  }
  return p;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix projector_spin2() {
  const auto s = spin1_operators();
  const ComplexMatrix dot = kron(s.x, s.x) + kron(s.y, s.y) + kron(s.z, s.z);
  return 0.5 * (dot + dot * dot / 3.0) + identity(9) / 3.0;
}

ComplexMatrix projector_spin32() {
  const auto half = spin_half_operators();
  const auto one = spin1_operators();
  const ComplexMatrix dot = kron(half.x, one.x) + kron(half.y, one.y) + kron(half.z, one.z);
  return (2.0 / 3.0) * (identity(6) + dot);
}

ComplexMatrix frame_kets() {
  // |1> = -(|+1> - |-1>)/√2,  |2> = -(|+1> + |-1>)/√2,  |3> = |0>.
  // The overall sign of |2> is the one for which the X, -iY, Z matrix
  // product state is the ground state of the standard spin-1 AKLT chain.
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix k = ComplexMatrix::Zero(3, 3);
  k(0, 0) = -r;
  k(2, 0) = r;
  k(0, 1) = -r;
  k(2, 1) = -r;
  k(1, 2) = 1.0;
  return k;
}

LocalBasis local_basis(LocalBasisKind kind) {
  if (kind == LocalBasisKind::Sz) return {kind, identity(3)};
  return {kind, frame_kets().adjoint()};
}

std::array<ComplexMatrix, 3> m_matrices() {
  return {pauli(Axis::X), ComplexMatrix(-kI * pauli(Axis::Y)), pauli(Axis::Z)};
}

ComplexMatrix spin1_pi_rotation(Axis axis) {
  const auto dec = eigh(spin1_operators().along(axis));
  ComplexMatrix phases = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    // Eigenvalues are exactly -1, 0, 1; snap before exponentiating.
    const double m = std::round(dec.values(k));
    phases(k, k) = (static_cast<long>(m) % 2 == 0) ? 1.0 : -1.0;
  }
  return dec.vectors * phases * dec.vectors.adjoint();
}

}  // namespace gmqc
