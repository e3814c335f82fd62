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
/// Hydrogen-like spectra and radial wavefunctions in atomic units
/// (hbar = m_e = e = a0 = 1, energies in Hartree), plus generic
/// matrix perturbation theory (nondegenerate first/second order and
/// degenerate first order), dipole matrix elements and the linear
/// Stark problem, the Lyman-alpha spontaneous-emission rate,
/// one-parameter variational minimization, sudden-approximation
/// overlaps, semiclassical (WKB) quantization, and the Sommerfeld
/// fine-structure formula.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qq/eigh.hpp"
#include "qq/matrix.hpp"

namespace qq {

// ---------------------------------------------------------------------------
// Unit conversions and reference constants. Everything internal is in
// atomic units; these convert results to laboratory units.
// ---------------------------------------------------------------------------

/// One Hartree in electron-volts.
inline constexpr double kHartreeEv = 27.211386;
/// One atomic time unit in seconds.
inline constexpr double kAtomicTimeSeconds = 2.4188843e-17;
/// Fine-structure constant alpha.
inline constexpr double kFineStructure = 1.0 / 137.035999;
/// One Rydberg in Hartree.
inline constexpr double kRydbergHartree = 0.5;
/// Reference value for the hydrogen ground-state hyperfine splitting:
/// the 21 cm radio line at 1420.4 MHz. Quoted as a constant only; the
/// hyperfine Hamiltonian itself is out of scope here.
inline constexpr double kHyperfineLineMHz = 1420.4;

// ---------------------------------------------------------------------------
// Bound levels and radial wavefunctions.
// ---------------------------------------------------------------------------

/// Energy of the n-th bound level of a hydrogen-like ion with nuclear
/// charge z, in Hartree: E_n = -z^2 / (2 n^2).
double hydrogen_energy(int n, int z = 1);

/// Number of degenerate states in shell n (all l, all m): n^2.
int shell_degeneracy(int n);

/// A bound level |n, l> of a hydrogen-like ion. Validates n >= 1,
/// 0 <= l < n, z >= 1.
struct HydrogenLevel {
  int n;
  int l;
  int z;

  explicit HydrogenLevel(int n_in, int l_in, int z_in = 1);

  /// Level energy in Hartree, -z^2/(2n^2); independent of l.
  double energy() const;
};

/// Normalized radial wavefunction R_{nl}(r) for nuclear charge z,
///
///   R_{nl}(r) = N exp(-Zr/n) (2Zr/n)^l L^{2l+1}_{n-l-1}(2Zr/n),
///   N = sqrt((2Z/n)^3 (n-l-1)! / (2n (n+l)!)),
///
/// with L the associated Laguerre polynomials. Carries an immutable
/// 200-node Gauss-Laguerre quadrature grid whose weight function is
/// matched to the e^{-2Zr/n} decay of R^2, so that integrals of
/// R^2 * polynomial are exact to machine precision.
class RadialFunction {
 public:
  RadialFunction(int n, int l, int z = 1);

  int n() const { return n_; }
  int l() const { return l_; }
  int z() const { return z_; }

  /// R_{nl}(r), with r in units of the Bohr radius.
  double operator()(double r) const;
  /// dR_{nl}/dr, analytic via the Laguerre derivative relation.
  double derivative(double r) const;

  /// Quadrature abscissas (radii) and weights: for integrands f(r)
  /// decaying like this state's density, integral_0^inf f(r) dr is
  /// approximated by sum_i weights[i] f(nodes[i]).
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// sum_i w_i f(r_i), i.e. the grid's estimate of integral f dr.
  double integrate(const std::function<double(double)>& f) const;

  /// |integral R^2 r^2 dr - 1| on the configured grid.
  double normalization_error() const;

 private:
  int n_;
  int l_;
  int z_;
  double norm_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Convenience factory for RadialFunction.
RadialFunction radial(int n, int l, int z = 1);

/// Radial moment <r^k> in the state |n, l> of charge z, computed by
/// quadrature. Supported powers: k in {-2, -1, 1, 2}.
double hydrogen_expectation(int n, int l, int z, int k);

/// Effective radial potential -Z/r + l(l+1)/(2 r^2) in Hartree.
double effective_potential(double r, int l, int z = 1);

/// Location and value of the effective-potential minimum for l >= 1:
/// r = l(l+1)/Z, value -Z^2/(2 l(l+1)).
struct PotentialMin {
  double r;
  double value;
};
PotentialMin effective_potential_min(int l, int z = 1);

// ---------------------------------------------------------------------------
// Matrix perturbation theory: H = H0 + lambda V.
// ---------------------------------------------------------------------------

/// A perturbation problem H = H0 + lambda V with both matrices
/// Hermitian and of equal dimension. The unperturbed eigensystem is
/// computed once at construction; levels are indexed by ascending
/// unperturbed energy.
struct PerturbationProblem {
  CMatrix h0;
  CMatrix v;
  double lambda;
  EigenSystem eigen;

  PerturbationProblem(const CMatrix& h0_in, const CMatrix& v_in,
                      double lambda_in);

  std::size_t dim() const { return h0.rows(); }
};

/// First-order energy correction lambda <n|V|n> for the (ascending)
/// level index `level`. Throws if the level is degenerate at the
/// 1e-9-relative gap threshold; use pt_degenerate for those.
double pt_first(const PerturbationProblem& problem, std::size_t level);

/// First-order state correction, expressed in the original basis:
/// sum_{m != n} lambda <m|V|n> / (E_n - E_m) |m>.
CVector pt_state_first(const PerturbationProblem& problem, std::size_t level);

/// Second-order energy correction
/// lambda^2 sum_{m != n} |<m|V|n>|^2 / (E_n - E_m). For the ground
/// state this is always <= 0.
double pt_second(const PerturbationProblem& problem, std::size_t level);

/// Result of degenerate first-order perturbation theory: corrections
/// are the eigenvalues of the g x g matrix W_ij = lambda <i|V|j>
/// restricted to the degenerate subspace, in ascending order, and
/// states holds the matching zeroth-order eigenvectors as columns in
/// the original basis.
struct DegenerateCorrection {
  std::vector<double> corrections;
  CMatrix states;
};

/// Degenerate first-order perturbation theory on the levels listed in
/// `levels`, which must form a complete degenerate cluster: all listed
/// levels equal within the gap threshold, and no unlisted level that
/// close to the cluster.
DegenerateCorrection pt_degenerate(const PerturbationProblem& problem,
                                   const std::vector<std::size_t>& levels);

// ---------------------------------------------------------------------------
// Dipole matrix elements and radiative decay.
// ---------------------------------------------------------------------------

/// <n1 l1 m1| z |n2 l2 m2> for hydrogen-like states of charge z, by
/// numerical radial (Gauss-Laguerre) and angular (Gauss-Legendre in
/// cos theta times trapezoidal in phi) integration. Requires
/// l1, l2 <= 3. The result is real for z-dipole elements; the
/// vanishing imaginary part is discarded.
double dipole_z_element(int n1, int l1, int m1, int n2, int l2, int m2,
                        int z = 1);

/// The linear-Stark off-diagonal element <2s| z |2p_z> = -3 (atomic
/// units), evaluated by quadrature.
double stark_matrix_element();

/// An electric-dipole decay channel: spontaneous-emission rate (1/s),
/// lifetime (s), and transition energy (Hartree and eV).
struct DecayChannel {
  double rate;
  double lifetime;
  double energy_hartree;
  double energy_ev;
};

/// The hydrogen Lyman-alpha channel 2p -> 1s: rate
/// A = (4/3) alpha^3 w^3 |<1s|z|2p_z>|^2 in atomic units, converted
/// to 1/s, about 6.27e8 1/s (lifetime about 1.6 ns).
DecayChannel lyman_alpha_rate();

// ---------------------------------------------------------------------------
// Variational minimization.
// ---------------------------------------------------------------------------

/// Location and value of a one-dimensional minimum.
struct Minimum {
  double x;
  double value;
};

/// Golden-section minimization of a unimodal function on [lo, hi] to
/// absolute tolerance tol in x. Throws if no interior minimum is
/// found (the minimizer lands on a bracket edge).
Minimum variational_minimize(const std::function<double(double)>& f,
                             double lo, double hi, double tol = 1e-10);

/// Variational energy of the helium ground state with a screened
/// hydrogenic trial orbital of effective charge zeff, in Hartree:
/// E(zeff) = zeff^2 - 4 zeff + (5/8) zeff. Minimized at
/// zeff = 27/16, E = -(27/16)^2 = -2.8477 Hartree = -77.5 eV.
double helium_trial_energy(double zeff);

// ---------------------------------------------------------------------------
// Sudden approximation.
// ---------------------------------------------------------------------------

/// Probability of remaining in the ground state when a harmonic
/// oscillator's frequency jumps from w1 to w2:
/// P0 = 4 w1 w2 / (w1 + w2)^2.
double sudden_overlap_ho(double w1, double w2);

/// Probability of remaining in the 1s state when a hydrogen-like
/// nuclear charge jumps from z1 to z2:
/// P = [8 (z1 z2)^{3/2} / (z1 + z2)^3]^2.
double sudden_overlap_hydrogenic(double z1, double z2);

// ---------------------------------------------------------------------------
// Semiclassical quantization.
// ---------------------------------------------------------------------------

/// First `count` bound-state energies of a confining one-dimensional
/// potential from the semiclassical quantization rule
///
///   integral_{x1}^{x2} sqrt(2 m (E - V(x))) dx = pi (n + 1/2),
///
/// solved for E at each n by bracketing and bisection, with the
/// turning points x1 < x2 located numerically. Throws if the
/// potential does not confine (no bracketable turning points).
std::vector<double> wkb_levels(const std::function<double(double)>& potential,
                               double mass, std::size_t count);

// ---------------------------------------------------------------------------
// Fine structure.
// ---------------------------------------------------------------------------

/// Leading relativistic correction to the hydrogen level (n, j), in
/// Hartree (the Sommerfeld formula; depends only on n and the total
/// angular momentum j = l +- 1/2):
///
///   E_fine = -(alpha^2 Ry / n^3) [1/(j + 1/2) - 3/(4n)].
///
/// Requires half-odd-integer j with 1/2 <= j <= n - 1/2.
double fine_structure_energy(int n, double j);

}  // namespace qq
