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
/// Truncated Fock-space harmonic oscillator: ladder operators, coherent
/// and squeezed states, displacement/squeeze unitaries, quadrature
/// statistics, and coherent-state time evolution. Units use hbar = 1.

#pragma once

#include <cstddef>

#include "qq/matrix.hpp"

namespace qq {

/// A harmonic oscillator truncated to the lowest n_max number states
/// |0> ... |n_max - 1>, with angular frequency omega and mass m.
struct FockSpace {
  std::size_t n_max;
  double omega;
  double mass;

  FockSpace(std::size_t n_max_in, double omega_in, double mass_in = 1.0);

  /// Oscillator length scale sqrt(hbar / (m omega)).
  double x0() const;
  /// Momentum scale sqrt(m omega hbar).
  double p0() const;
};

/// The ladder algebra as truncated matrices: a |n> = sqrt(n)|n-1>,
/// a^dag |n> = sqrt(n+1)|n+1>, number = a^dag a = diag(0..n_max-1),
/// x = x0 (a + a^dag)/sqrt(2), p = p0 (a - a^dag)/(i sqrt(2)).
/// [a, a^dag] = 1 holds exactly away from the truncation edge; the last
/// diagonal entry is -(n_max - 1) because the top rung is missing.
struct LadderOps {
  CMatrix a;
  CMatrix a_dag;
  CMatrix number;
  CMatrix x;
  CMatrix p;
};
LadderOps ladder_ops(const FockSpace& space);

/// H = omega (number + 1/2), diagonal in the Fock basis.
CMatrix oscillator_hamiltonian(const FockSpace& space);

/// |alpha> truncated to the space: amplitudes c_n = e^{-|alpha|^2/2}
/// alpha^n / sqrt(n!). `leakage` is the weight lost to truncation,
/// 1 - sum |c_n|^2; `edge_weight` is the weight in the top three rungs
/// (n > n_max - 4). Treat edge_weight > 1e-8 as a sign the truncation
/// is too tight for this amplitude.
struct CoherentState {
  cplx alpha;
  CVector amplitudes;
  double leakage;
  double edge_weight;

  bool truncation_warning() const { return edge_weight > 1e-8; }
};
CoherentState coherent(const FockSpace& space, cplx alpha);

/// Overlap probability of two ideal coherent states,
/// |<alpha|beta>|^2 = e^{-|alpha - beta|^2}.
double overlap2(cplx alpha, cplx beta);

/// Phase-space displacement D(alpha) = exp(alpha a^dag - alpha^* a),
/// with D(alpha)|0> = |alpha>.
CMatrix displacement(const FockSpace& space, cplx alpha);

/// Squeeze S(r) = exp[(r/2) a^2 - (r/2) (a^dag)^2] for real r. Position
/// variance on S(r)|0> shrinks by e^{-2r} while momentum grows by
/// e^{2r}, preserving the minimum uncertainty product.
CMatrix squeeze(const FockSpace& space, double r);

/// A coherent state stays coherent under the oscillator Hamiltonian:
/// e^{-iHt}|alpha> = e^{-i omega t / 2} |alpha e^{-i omega t}>.
struct CoherentEvolution {
  CoherentState state;
  double global_phase;
};
CoherentEvolution coherent_evolve(const FockSpace& space, cplx alpha0,
                                  double t);

}  // namespace qq
