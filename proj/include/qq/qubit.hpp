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

#include <array>
#include <utility>
#include <vector>

#include "qq/matrix.hpp"

namespace qq {

using Vec3 = std::array<double, 3>;

// The six cardinal single-qubit states sit on the axes of the Bloch
// sphere; "axis" and "sign" select one of them.
enum class Axis { X, Y, Z };
enum class Sign { Plus, Minus };

// Normalized single-qubit state in the z basis with a canonical global
// phase: the first amplitude above a small threshold is made real and
// non-negative. Operations that produce a physically meaningful phase
// report it separately (see PhasedState).
class QubitState {
 public:
  // Normalizes and canonicalizes; throws on the zero vector.
  QubitState(cplx alpha, cplx beta);

  // cos(theta/2)|+z> + e^{i phi} sin(theta/2)|-z>.
  static QubitState from_angles(double theta, double phi);

  // One of the six cardinal states.
  static QubitState cube(Axis axis, Sign sign);

  cplx alpha() const { return amp_[0]; }
  cplx beta() const { return amp_[1]; }
  const CVector& vec() const { return amp_; }

  // Bloch angles: theta in [0, pi], phi in [0, 2 pi).
  double theta() const;
  double phi() const;

 private:
  CVector amp_;
};

// A canonical state together with the global phase that was stripped from
// it, so that (input) = phase * (state).
struct PhasedState {
  QubitState state;
  cplx phase;
};

// Pauli matrices and friends.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

// n . sigma for a unit vector n.
CMatrix axis_operator(const Vec3& n);

// R_n(theta) = cos(theta/2) I - i sin(theta/2) (n . sigma).
CMatrix rotation_matrix(const Vec3& axis, double angle);

// The three quarter-turn operators in their printed z-basis forms:
// Z = diag(1, i), and the X/Y analogues with entries (1 +/- i)/2.
CMatrix cube_op_matrix(Axis which);

// Basis-change matrices between the cardinal bases, as printed:
// z->x, z->y (both expressed in the z basis) and x->y (in the x basis).
enum class BasisChange { ZtoX, ZtoY, XtoY };
CMatrix basis_change(BasisChange which);

// <a|b>.
cplx inner(const QubitState& a, const QubitState& b);

// Born rule |<outcome|state>|^2.
double born(const QubitState& state, const QubitState& outcome);

// Rotate a state about an axis (unit 3-vector within 1e-9); the global
// phase produced by the half-angle representation is reported, so a 2 pi
// turn shows up as phase -1.
PhasedState rotate(const QubitState& state, const Vec3& axis, double angle);

// Apply a quarter-turn operator and report the stripped phase.
PhasedState apply_cube_op(Axis which, const QubitState& state);

// 2x2 density matrix with the usual physicality checks.
class QubitDensity {
 public:
  // Validates Hermiticity, unit trace, and positivity.
  explicit QubitDensity(const CMatrix& rho);

  static QubitDensity pure(const QubitState& s);

  // rho = (I + r . sigma) / 2 for |r| <= 1.
  static QubitDensity from_bloch(const Vec3& r);

  // Convex combination sum p_k |psi_k><psi_k|; weights must sum to 1.
  static QubitDensity mixture(
      const std::vector<std::pair<double, QubitState>>& parts);

  const CMatrix& matrix() const { return rho_; }
  double purity() const;  // Tr rho^2

 private:
  CMatrix rho_;
};

// Tr(rho O) for Hermitian O; the result is real to 1e-10 and returned as
// such. Throws on non-Hermitian observables.
double expectation(const QubitDensity& rho, const CMatrix& obs);

// r_i = Tr(rho sigma_i).
Vec3 bloch_vector(const QubitDensity& rho);

}  // namespace qq
