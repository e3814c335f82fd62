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

#include "qq/oscillator.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qq/expm.hpp"

namespace qq {

FockSpace::FockSpace(std::size_t n_max_in, double omega_in, double mass_in)
    : n_max(n_max_in), omega(omega_in), mass(mass_in) {
  if (n_max < 4) {
    throw std::invalid_argument("Fock space needs n_max >= 4");
  }
  if (!(omega > 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("Fock space needs positive omega and mass");
  }
}

double FockSpace::x0() const { return std::sqrt(1.0 / (mass * omega)); }

double FockSpace::p0() const { return std::sqrt(mass * omega); }

LadderOps ladder_ops(const FockSpace& space) {
  const std::size_t d = space.n_max;
  LadderOps ops{CMatrix(d, d), CMatrix(d, d), CMatrix(d, d), CMatrix(d, d),
                CMatrix(d, d)};
  for (std::size_t n = 1; n < d; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    ops.a(n - 1, n) = root;
    ops.a_dag(n, n - 1) = root;
  }
  for (std::size_t n = 0; n < d; ++n) {
    ops.number(n, n) = static_cast<double>(n);
  }
  const double xs = space.x0() / std::sqrt(2.0);
  const double ps = space.p0() / std::sqrt(2.0);
  for (std::size_t n = 1; n < d; ++n) {
    const double root = std::sqrt(static_cast<double>(n));
    ops.x(n - 1, n) = xs * root;
    ops.x(n, n - 1) = xs * root;
    ops.p(n - 1, n) = cplx{0.0, -ps * root};
    ops.p(n, n - 1) = cplx{0.0, ps * root};
  }
  return ops;
}

CMatrix oscillator_hamiltonian(const FockSpace& space) {
  CMatrix h(space.n_max, space.n_max);
  for (std::size_t n = 0; n < space.n_max; ++n) {
    h(n, n) = space.omega * (static_cast<double>(n) + 0.5);
  }
  return h;
}

CoherentState coherent(const FockSpace& space, cplx alpha) {
  CVector c(space.n_max);
  c[0] = cplx{std::exp(-0.5 * std::norm(alpha)), 0.0};
  for (std::size_t n = 1; n < space.n_max; ++n) {
    c[n] = c[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  double captured = 0.0;
  double edge = 0.0;
  for (std::size_t n = 0; n < space.n_max; ++n) {
    const double w = std::norm(c[n]);
    captured += w;
    if (n + 4 > space.n_max) edge += w;
  }
  return CoherentState{alpha, std::move(c), 1.0 - captured, edge};
}

double overlap2(cplx alpha, cplx beta) {
  return std::exp(-std::norm(alpha - beta));
}

CMatrix displacement(const FockSpace& space, cplx alpha) {
  const LadderOps ops = ladder_ops(space);
  return expm(alpha * ops.a_dag - std::conj(alpha) * ops.a);
}

CMatrix squeeze(const FockSpace& space, double r) {
  const LadderOps ops = ladder_ops(space);
  return expm(0.5 * r * (ops.a * ops.a - ops.a_dag * ops.a_dag));
}

CoherentEvolution coherent_evolve(const FockSpace& space, cplx alpha0,
                                  double t) {
  const cplx alpha_t = alpha0 * std::polar(1.0, -space.omega * t);
  return CoherentEvolution{coherent(space, alpha_t), -0.5 * space.omega * t};
}

}  // namespace qq
