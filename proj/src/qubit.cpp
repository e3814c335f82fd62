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

#include "qq/qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "qq/eigh.hpp"
#include "qq/tolerances.hpp"

namespace qq {
namespace {

constexpr double kAmpThreshold = 1e-12;

// Split a raw amplitude pair into (canonical pair, stripped phase).
std::pair<CVector, cplx> canonicalize(cplx alpha, cplx beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (n < kAmpThreshold) {
    throw std::invalid_argument("QubitState: zero vector");
  }
  alpha /= n;
  beta /= n;
  cplx phase{1.0, 0.0};
  if (std::abs(alpha) > kAmpThreshold) {
    phase = alpha / std::abs(alpha);
  } else if (std::abs(beta) > kAmpThreshold) {
    phase = beta / std::abs(beta);
  }
  return {CVector{alpha / phase, beta / phase}, phase};
}

}  // namespace

QubitState::QubitState(cplx alpha, cplx beta)
    : amp_(canonicalize(alpha, beta).first) {}

QubitState QubitState::from_angles(double theta, double phi) {
  return QubitState(std::cos(0.5 * theta),
                    std::exp(cplx{0.0, phi}) * std::sin(0.5 * theta));
}

QubitState QubitState::cube(Axis axis, Sign sign) {
  const double r = 1.0 / std::sqrt(2.0);
  const double s = (sign == Sign::Plus) ? 1.0 : -1.0;
  switch (axis) {
    case Axis::X:
      return QubitState(r, s * r);
    case Axis::Y:
      return QubitState(r, cplx{0.0, s * r});
    case Axis::Z:
    default:
      return (sign == Sign::Plus) ? QubitState(1.0, 0.0)
                                  : QubitState(0.0, 1.0);
  }
}

double QubitState::theta() const {
  return 2.0 * std::atan2(std::abs(amp_[1]), std::abs(amp_[0]));
}

double QubitState::phi() const {
  if (std::abs(amp_[1]) < kAmpThreshold || std::abs(amp_[0]) < kAmpThreshold) {
    return 0.0;  // poles: azimuth is arbitrary, pick 0
  }
  double p = std::arg(amp_[1]) - std::arg(amp_[0]);
  if (p < 0.0) p += 2.0 * M_PI;
  return p;
}

CMatrix pauli_x() { return CMatrix::from_rows({{0, 1}, {1, 0}}); }

CMatrix pauli_y() {
  return CMatrix::from_rows({{0, cplx{0, -1}}, {cplx{0, 1}, 0}});
}

CMatrix pauli_z() { return CMatrix::from_rows({{1, 0}, {0, -1}}); }

CMatrix axis_operator(const Vec3& n) {
  return n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
}

CMatrix rotation_matrix(const Vec3& axis, double angle) {
  const double len =
      std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (std::fabs(len - 1.0) > 1e-9) {
    throw std::invalid_argument("rotation_matrix: axis must be a unit vector");
  }
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  return c * CMatrix::identity(2) + cplx{0.0, -s} * axis_operator(axis);
}

CMatrix cube_op_matrix(Axis which) {
  const cplx p{0.5, 0.5};   // (1+i)/2
  const cplx m{0.5, -0.5};  // (1-i)/2
  switch (which) {
    case Axis::X:
      return CMatrix::from_rows({{p, m}, {m, p}});
    case Axis::Y:
      return CMatrix::from_rows({{p, -p}, {p, p}});
    case Axis::Z:
    default:
      return CMatrix::from_rows({{1, 0}, {0, cplx{0, 1}}});
  }
}

CMatrix basis_change(BasisChange which) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case BasisChange::ZtoX:
      return CMatrix::from_rows({{r, r}, {r, -r}});
    case BasisChange::ZtoY:
      return CMatrix::from_rows({{r, r}, {cplx{0, r}, cplx{0, -r}}});
    case BasisChange::XtoY:
    default: {
      const cplx p{0.5, 0.5};
      const cplx m{0.5, -0.5};
      return CMatrix::from_rows({{p, m}, {m, p}});
    }
  }
}

cplx inner(const QubitState& a, const QubitState& b) {
  return inner(a.vec(), b.vec());
}

double born(const QubitState& state, const QubitState& outcome) {
  return std::norm(inner(outcome, state));
}

PhasedState rotate(const QubitState& state, const Vec3& axis, double angle) {
  const CMatrix u = rotation_matrix(axis, angle);
  const CVector out = u * state.vec();
  auto [amp, phase] = canonicalize(out[0], out[1]);
  return PhasedState{QubitState(amp[0], amp[1]), phase};
}

PhasedState apply_cube_op(Axis which, const QubitState& state) {
  const CVector out = cube_op_matrix(which) * state.vec();
  auto [amp, phase] = canonicalize(out[0], out[1]);
  return PhasedState{QubitState(amp[0], amp[1]), phase};
}

QubitDensity::QubitDensity(const CMatrix& rho) : rho_(rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("QubitDensity: matrix must be 2x2");
  }
  if (rho.hermiticity_error() > tol::HERM_TOL) {
    throw std::invalid_argument("QubitDensity: matrix not Hermitian");
  }
  if (std::abs(rho.trace() - cplx{1.0, 0.0}) > 1e-12) {
    throw std::invalid_argument("QubitDensity: trace must be 1");
  }
  const auto vals = eigh_values(rho);
  if (vals.front() < tol::PSD_TOL) {
    throw std::invalid_argument("QubitDensity: negative eigenvalue");
  }
}

QubitDensity QubitDensity::pure(const QubitState& s) {
  return QubitDensity(CMatrix::outer(s.vec(), s.vec()));
}

QubitDensity QubitDensity::from_bloch(const Vec3& r) {
  const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (len > 1.0 + 1e-10) {
    throw std::invalid_argument("QubitDensity: Bloch vector outside sphere");
  }
  CMatrix rho = 0.5 * (CMatrix::identity(2) + axis_operator(r));
  return QubitDensity(rho);
}

QubitDensity QubitDensity::mixture(
    const std::vector<std::pair<double, QubitState>>& parts) {
  CMatrix rho(2, 2);
  double total = 0.0;
  for (const auto& [p, s] : parts) {
    if (p < -1e-12) {
      throw std::invalid_argument("QubitDensity: negative weight");
    }
    rho += p * CMatrix::outer(s.vec(), s.vec());
    total += p;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("QubitDensity: weights must sum to 1");
  }
  return QubitDensity(rho);
}

double QubitDensity::purity() const { return (rho_ * rho_).trace().real(); }

double expectation(const QubitDensity& rho, const CMatrix& obs) {
  if (!obs.is_hermitian(tol::HERM_TOL)) {
    throw std::invalid_argument("expectation: observable not Hermitian");
  }
  const cplx tr = (rho.matrix() * obs).trace();
  return tr.real();
}

Vec3 bloch_vector(const QubitDensity& rho) {
  return {expectation(rho, pauli_x()), expectation(rho, pauli_y()),
          expectation(rho, pauli_z())};
}

}  // namespace qq
