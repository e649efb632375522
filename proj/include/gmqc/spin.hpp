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

#include "gmqc/linalg.hpp"

// Local operators. Conventions used everywhere in the project:
//   spin-1 sites:   ordered basis (|Sz=+1>, |Sz=0>, |Sz=-1>)
//   spin-1/2 sites: ordered basis (|up>, |down>), Z|up> = |up>
//   measurement frame {|1>,|2>,|3>} indexed 0,1,2 in code.

namespace gmqc {

enum class Axis { X, Y, Z };

char axis_name(Axis axis);

struct SpinOperators {
  ComplexMatrix x, y, z;

  const ComplexMatrix& along(Axis axis) const;
};

SpinOperators spin1_operators();

/// s = σ/2.
SpinOperators spin_half_operators();

ComplexMatrix pauli(Axis axis);
ComplexMatrix identity(int dim);

/// Projector onto total spin 2 of two spin-1 sites (9×9).
ComplexMatrix projector_spin2();

/// Projector onto total spin 3/2 of (spin-1/2 ⊗ spin-1), 6×6, spin-1/2 factor first.
ComplexMatrix projector_spin32();

enum class LocalBasisKind { Sz, M };

struct LocalBasis {
  LocalBasisKind kind;
  /// Rows are the bras <1|,<2|,<3| (or <Sz=m| for Sz) in the Sz basis.
  ComplexMatrix w;
};

LocalBasis local_basis(LocalBasisKind kind);

/// The measurement-frame kets as columns in the Sz basis (= W†).
ComplexMatrix frame_kets();

/// <alpha|M> for alpha = 1,2,3: X, -iY (= XZ), Z.
std::array<ComplexMatrix, 3> m_matrices();

/// exp(i·π·S^axis) for spin 1, from the eigendecomposition of S^axis.
ComplexMatrix spin1_pi_rotation(Axis axis);

}  // namespace gmqc
