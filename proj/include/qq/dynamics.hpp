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

/// \file
/// Time evolution by exact diagonalization, first-order Trotter splitting
/// with measured error, conservation checks, Rabi/rotating-frame physics,
/// and geometric (Berry) phases on discretized parameter paths.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qq/matrix.hpp"

namespace qq {

/// psi(t) = e^{-iHt} psi(0) for Hermitian H (hbar = 1 throughout).
CVector evolve(const CMatrix& h, const CVector& psi0, double t);

/// The unitary U(t) = e^{-iHt}.
CMatrix propagator(const CMatrix& h, double t);

/// Real expectation value <psi|A|psi> of a Hermitian observable.
double expectation(const CMatrix& obs, const CVector& psi);

/// A sampled evolution: strictly increasing times, one named real series
/// per requested observable, and (optionally) the state snapshots.
struct Trajectory {
  std::vector<double> times;
  std::map<std::string, std::vector<double>> observables;
  std::optional<std::vector<CVector>> states;
};

/// Evolve psi0 under H and record <A>(t) for each named observable.
/// Times must be strictly increasing; snapshots stay normalized because
/// the evolution is unitary. Set keep_states to retain the snapshots.
Trajectory make_trajectory(
    const CMatrix& h, const CVector& psi0, const std::vector<double>& times,
    const std::vector<std::pair<std::string, CMatrix>>& observables,
    bool keep_states = false);

/// First-order Trotter splitting: the product of per-term exponentials
/// (in the given order) applied n_steps times with step t/n_steps, plus
/// the two-norm distance to the exact evolution under the summed
/// Hamiltonian. The error decreases ~1/n_steps for non-commuting terms
/// and vanishes when the terms commute.
struct TrotterResult {
  CVector state;
  double error_norm;
};
TrotterResult trotter_evolve(const std::vector<CMatrix>& terms,
                             const CVector& psi0, double t,
                             std::size_t n_steps);

/// Time-ordered evolution for a time-dependent Hamiltonian, approximated
/// by the piecewise-constant midpoint product  prod_k e^{-iH(t_k) dt}
/// with t_k the midpoint of step k. Converges quadratically in 1/n_steps;
/// halve the step and compare to check convergence.
CVector evolve_time_dependent(const std::function<CMatrix(double)>& h_of_t,
                              const CVector& psi0, double t,
                              std::size_t n_steps);

/// <A> is conserved under H exactly when [H, A] = 0. `commutator_norm`
/// is the max-entry norm of [H, A]; `conserved` holds when that norm is
/// below tol relative to the operator scales.
struct ConservationCheck {
  bool conserved;
  double commutator_norm;
};
ConservationCheck conserved(const CMatrix& h, const CMatrix& a,
                            double tol = 1e-12);

/// Excited-state population of a driven two-level system in the rotating
/// frame: P(t) = (Omega/Omega_eff)^2 sin^2(Omega_eff t / 2) with
/// Omega_eff = sqrt(Omega^2 + detuning^2). On resonance this is the Rabi
/// flopping sin^2(Omega t/2); for weak drive it reduces to the
/// perturbative (Omega/detuning)^2 sin^2(detuning t/2).
double rabi_excited_prob(double omega, double detuning, double t);

/// The rotating-frame effective Hamiltonian (detuning/2) sigma_z +
/// (Omega/2) sigma_x whose dynamics reproduce rabi_excited_prob.
CMatrix rabi_effective_hamiltonian(double omega, double detuning);

/// Which adiabatic eigenstate of H(n) = -n.sigma is transported: the
/// ground band has Bloch vector +n (spin aligned with the swept field),
/// the excited band -n.
enum class Band { Ground, Excited };

/// A closed, discretized path of unit 3-vectors n(s_k) on the sphere.
/// Construction validates unit length (a zero/short vector would be a
/// degeneracy of the two-level Hamiltonian), closure (first == last),
/// and a maximum angular step between consecutive points.
class ParameterPath {
 public:
  using Point = std::array<double, 3>;

  explicit ParameterPath(std::vector<Point> points, double max_step = 1.6);

  /// Circle of constant polar angle alpha, traversed with increasing
  /// azimuth (counterclockwise seen from +z), n_points segments.
  static ParameterPath latitude_loop(double alpha, std::size_t n_points);

  /// Closed polygon whose edges are great-circle arcs between the given
  /// vertices (last edge returns to the first vertex), each sampled with
  /// points_per_edge segments.
  static ParameterPath geodesic_polygon(const std::vector<Point>& vertices,
                                        std::size_t points_per_edge);

  const std::vector<Point>& points() const { return pts_; }

  /// Same vertices traversed in the opposite orientation.
  ParameterPath reversed() const;

 private:
  std::vector<Point> pts_;
};

/// Geometric phase of the chosen band transported around the closed
/// path: the Pancharatnam phase accumulated from the overlaps of
/// consecutive instantaneous eigenstates. Converges to -Omega/2, half
/// the solid angle enclosed by that band's Bloch-vector trace, and is
/// reported modulo 2*pi in (-2*pi, 0] (up to numerical slack at the
/// closure). Throws if consecutive states become nearly orthogonal.
double berry_phase(const ParameterPath& path, Band band);

}  // namespace qq
