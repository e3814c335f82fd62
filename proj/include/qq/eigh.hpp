// Copyright 2026 The qq developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qq/matrix.hpp"

namespace qq {

// Result of a Hermitian eigendecomposition M = V diag(w) V^dag.
//
// Eigenvalues are real and sorted in ascending order; eigenvector k is the
// k-th *column* of `vectors` and the columns form an orthonormal set.
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;

  // Convenience accessor for eigenvector k as a column vector.
  CVector vector(std::size_t k) const { return vectors.col(k); }
};

// Full eigendecomposition of a Hermitian matrix.
//
// The input must be Hermitian to within a tolerance that scales with the
// magnitude of its entries; a non-Hermitian matrix raises
// std::invalid_argument rather than silently returning garbage.
//
// Method: unitary Householder reduction to tridiagonal form, a diagonal
// phase transformation that makes the subdiagonal real, then the implicit
// QL algorithm with Wilkinson shifts. The rotations are accumulated into
// the complex eigenvector matrix. Intended for dense matrices up to a few
// thousand rows; all stages run through the qq::kernels layer so they pick
// up the serial/OpenMP dispatch policy.
EigenSystem eigh(const CMatrix& m);

// Eigenvalues only (ascending). Identical reduction and QL iteration but
// skips all eigenvector updates; use for large matrices where only the
// spectrum is needed.
std::vector<double> eigh_values(const CMatrix& m);

}  // namespace qq
