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

namespace qq::tol {

/// Max-norm deviation allowed for a matrix tagged Hermitian.
inline constexpr double HERM_TOL = 1e-12;

/// Relative reconstruction tolerance for eigendecompositions.
inline constexpr double RECON_TOL = 1e-10;

/// Max-norm deviation allowed for a matrix tagged unitary.
inline constexpr double UNITARY_TOL = 1e-10;

/// Smallest eigenvalue allowed for a density matrix built in floating point.
inline constexpr double PSD_TOL = -1e-10;

/// Relative gap below which two levels are treated as degenerate.
inline constexpr double DEGENERACY_TOL = 1e-9;

}  // namespace qq::tol
