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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qq/matrix.hpp"
#include "qq/qubit.hpp"

namespace qq {

// Pure state of n qubits in the computational basis. Qubit 1 is the slow
// (leftmost) index: the basis label |b1 b2 ... bn> maps to the amplitude
// index j = b1 2^{n-1} + b2 2^{n-2} + ... + bn, so |00> <-> 0, |01> <-> 1,
// |10> <-> 2, |11> <-> 3.
class MultiQubitState {
 public:
  // Validates the amplitude count (2^n) and unit norm, then renormalizes
  // so the stored norm is exact to machine precision.
  MultiQubitState(std::size_t n_qubits, CVector amplitudes);

  // Computational basis state |index>.
  static MultiQubitState basis(std::size_t n_qubits, std::size_t index);

  // Basis state from the printed bit string, e.g. "100" -> |100>.
  static MultiQubitState from_bits(const std::string& bits);

  // Tensor product of single-qubit factors; factors[0] becomes qubit 1.
  static MultiQubitState product(const std::vector<QubitState>& factors);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const CVector& amplitudes() const { return amp_; }
  cplx amplitude(std::size_t index) const { return amp_[index]; }

 private:
  std::size_t n_ = 0;
  CVector amp_;
};

// <a|b>; both states must have the same qubit count.
cplx inner(const MultiQubitState& a, const MultiQubitState& b);

// u must be dim x dim for the state's dimension; the result is
// renormalized, so u should be (at least close to) unitary.
MultiQubitState apply(const CMatrix& u, const MultiQubitState& s);

// Standard gates, embedded as 2^n x 2^n unitaries acting on the listed
// qubits (1-based) and as the identity on all others. Two-qubit names take
// targets = {first, second}; for CNOT the first target is the control.
// CPhase additionally takes the phase angle phi.
enum class GateName { CNOT, CZ, SWAP, SqrtSwap, H, X, Y, Z, T, CPhase };

CMatrix gate(std::size_t n_qubits, GateName name,
             const std::vector<std::size_t>& targets, double phi = 0.0);

// One branch of a projective measurement of a single qubit along a Bloch
// axis. Sign::Plus is the +1 eigenvalue of the axis Pauli (outcome "0" for
// the z axis). The post state is absent when the branch has essentially
// zero probability, since there is nothing to renormalize.
struct SubsystemOutcome {
  Sign outcome;
  double probability;
  std::optional<MultiQubitState> post;
};

// Both branches, in the order {Plus, Minus}; probabilities sum to 1.
std::vector<SubsystemOutcome> measure_subsystem(const MultiQubitState& s,
                                                std::size_t qubit, Axis basis);

// Probability that simultaneous single-qubit measurements yield the given
// outcome state on every qubit: |<o1 o2 ... on|s>|^2.
double joint_probability(const MultiQubitState& s,
                         const std::vector<QubitState>& outcomes);

// Density matrix of n qubits with the usual physicality checks.
class MultiQubitDensity {
 public:
  // Validates dimensions, Hermiticity, unit trace, and positivity (the
  // smallest eigenvalue may be no less than -1e-10).
  MultiQubitDensity(std::size_t n_qubits, const CMatrix& rho);

  static MultiQubitDensity pure(const MultiQubitState& s);

  std::size_t n_qubits() const { return n_; }
  const CMatrix& matrix() const { return rho_; }
  double purity() const;  // Tr rho^2

 private:
  std::size_t n_ = 0;
  CMatrix rho_;
};

// Reduced density matrix over the kept qubits (1-based, in increasing
// order), summing the discarded qubits' diagonal indices:
// (rho_keep)_{ij} = sum_k rho_{(i,k),(j,k)}.
MultiQubitDensity partial_trace(const MultiQubitDensity& rho,
                                const std::vector<std::size_t>& keep);

// Schmidt form of a bipartite pure state: |s> = sum_i sqrt(c_i)
// |left_i>|right_i> with coefficients descending and summing to 1, and
// each family orthonormal.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<CVector> left;
  std::vector<CVector> right;

  // Number of coefficients above the tolerance; 1 for product states.
  std::size_t schmidt_number(double tol = 1e-10) const;
};

// Splits the state into qubits 1..cut versus the rest (0 < cut < n).
SchmidtDecomposition schmidt(const MultiQubitState& s, std::size_t cut);

// Von Neumann entropy of either half, in bits: -sum c_i log2 c_i.
double entanglement_entropy(const MultiQubitState& s, std::size_t cut);

// Wootters concurrence of a two-qubit density: max(0, l1 - l2 - l3 - l4)
// where l_i are the descending eigenvalues of sqrt(sqrt(rho) rho~
// sqrt(rho)) and rho~ = (sy x sy) conj(rho) (sy x sy).
double concurrence(const MultiQubitDensity& rho);

// Smallest eigenvalue of the partial transpose (over the second qubit) of
// a two-qubit density; a negative value certifies entanglement.
double ppt_min_eigenvalue(const MultiQubitDensity& rho);

// The four Bell states, the two three-qubit GHZ sign variants, and the
// three-qubit W state.
enum class NamedState { PhiPlus, PhiMinus, PsiPlus, PsiMinus, GHZ, GHZMinus, W };

MultiQubitState named_state(NamedState which);

}  // namespace qq
