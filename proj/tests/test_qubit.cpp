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

#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "qq/qubit.hpp"

namespace {

using qq::Axis;
using qq::CMatrix;
using qq::cplx;
using qq::QubitDensity;
using qq::QubitState;
using qq::Sign;

constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<QubitState> all_cube_states() {
  std::vector<QubitState> out;
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      out.push_back(QubitState::cube(a, s));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cross-basis inner product <+x|+y> = (1+i)/2") {
  const auto px = QubitState::cube(Axis::X, Sign::Plus);
  const auto py = QubitState::cube(Axis::Y, Sign::Plus);
  CHECK(std::abs(qq::inner(px, py) - cplx{0.5, 0.5}) < 1e-12);
  CHECK(std::abs(qq::inner(px, px) - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(std::abs(qq::inner(QubitState::cube(Axis::Z, Sign::Plus), px)) -
                 kInvSqrt2) < 1e-13);
}

TEST_CASE("all 30 ordered cardinal-state overlaps are 0 or 1/sqrt(2)") {
  const auto states = all_cube_states();
  int zero_count = 0, adjacent_count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (i == j) continue;
      const double mag = std::abs(qq::inner(states[i], states[j]));
      // Opposite faces orthogonal, adjacent faces at 1/sqrt(2).
      if (mag < 1e-12) {
        ++zero_count;
      } else {
        CHECK(mag == doctest::Approx(kInvSqrt2).epsilon(1e-12));
        ++adjacent_count;
      }
    }
  }
  CHECK(zero_count == 6);
  CHECK(adjacent_count == 24);
}

TEST_CASE("Born rule on cardinal states and general angles") {
  const auto px = QubitState::cube(Axis::X, Sign::Plus);
  const auto pz = QubitState::cube(Axis::Z, Sign::Plus);
  const auto py = QubitState::cube(Axis::Y, Sign::Plus);
  const auto my = QubitState::cube(Axis::Y, Sign::Minus);

  CHECK(qq::born(px, pz) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(qq::born(py, my) < 1e-15);

  const double theta = 1.1, phi = 2.3;
  const auto s = QubitState::from_angles(theta, phi);
  CHECK(qq::born(s, pz) ==
        doctest::Approx(std::cos(0.5 * theta) * std::cos(0.5 * theta))
            .epsilon(1e-13));

  // Probabilities over any orthonormal pair sum to 1.
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    const double total = qq::born(s, QubitState::cube(a, Sign::Plus)) +
                         qq::born(s, QubitState::cube(a, Sign::Minus));
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("canonical phase: states differing by a global phase are equal") {
  const cplx phase = std::exp(cplx{0.0, 1.234});
  const QubitState a(phase * cplx{0.6, 0.0}, phase * cplx{0.0, 0.8});
  const QubitState b(0.6, cplx{0.0, 0.8});
  CHECK(std::abs(a.alpha() - b.alpha()) < 1e-14);
  CHECK(std::abs(a.beta() - b.beta()) < 1e-14);
  CHECK(a.alpha().imag() == 0.0);
  CHECK(a.alpha().real() >= 0.0);
}

TEST_CASE("Bloch angles round-trip") {
  const double theta = 0.77, phi = 4.2;
  const auto s = QubitState::from_angles(theta, phi);
  CHECK(s.theta() == doctest::Approx(theta).epsilon(1e-12));
  CHECK(s.phi() == doctest::Approx(phi).epsilon(1e-12));
}

TEST_CASE("rotation operator: eigenstate, quarter turn, 2 pi sign") {
  const qq::Vec3 zhat{0, 0, 1};
  const auto pz = QubitState::cube(Axis::Z, Sign::Plus);
  const auto px = QubitState::cube(Axis::X, Sign::Plus);

  // Rotating |+z> about z only produces a phase.
  const auto r1 = qq::rotate(pz, zhat, 0.9);
  CHECK(qq::born(r1.state, pz) == doctest::Approx(1.0).epsilon(1e-13));

  // Quarter turn about z sends +x to +y.
  const auto r2 = qq::rotate(px, zhat, M_PI / 2);
  CHECK(qq::born(r2.state, QubitState::cube(Axis::Y, Sign::Plus)) ==
        doctest::Approx(1.0).epsilon(1e-13));

  // Full 2 pi turn flips the sign of the state.
  const auto r3 = qq::rotate(px, zhat, 2.0 * M_PI);
  CHECK(std::abs(r3.phase - cplx{-1.0, 0.0}) < 1e-12);
  CHECK(qq::born(r3.state, px) == doctest::Approx(1.0).epsilon(1e-13));

  // Composition about a fixed axis adds angles (up to global phase).
  const qq::Vec3 axis{kInvSqrt2, 0.0, kInvSqrt2};
  const auto a1 = qq::rotate(px, axis, 0.4);
  const auto a2 = qq::rotate(a1.state, axis, 0.9);
  const auto a12 = qq::rotate(px, axis, 1.3);
  CHECK(qq::born(a2.state, a12.state) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS(qq::rotate(px, qq::Vec3{0, 0, 0}, 1.0));
}

TEST_CASE("quarter-turn operators reproduce the printed actions and phases") {
  const auto pz = QubitState::cube(Axis::Z, Sign::Plus);
  const auto px = QubitState::cube(Axis::X, Sign::Plus);
  const cplx e4 = std::exp(cplx{0.0, M_PI / 4});
  const cplx e34 = std::exp(cplx{0.0, 3 * M_PI / 4});

  // Z|+x> = |+y> with no extra phase.
  const auto z_px = qq::apply_cube_op(Axis::Z, px);
  CHECK(qq::born(z_px.state, QubitState::cube(Axis::Y, Sign::Plus)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(z_px.phase - cplx{1.0, 0.0}) < 1e-12);

  // X|+z> = e^{i pi/4}|-y>.
  const auto x_pz = qq::apply_cube_op(Axis::X, pz);
  CHECK(qq::born(x_pz.state, QubitState::cube(Axis::Y, Sign::Minus)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(x_pz.phase - e4) < 1e-12);

  // Y|+z> = e^{i pi/4}|+x>.
  const auto y_pz = qq::apply_cube_op(Axis::Y, pz);
  CHECK(qq::born(y_pz.state, px) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(y_pz.phase - e4) < 1e-12);

  // Order matters: YX|+z> = e^{i 3pi/4}|-y> but XY|+z> = e^{i pi/4}|+x>.
  const auto yx = qq::apply_cube_op(Axis::Y, x_pz.state);
  CHECK(qq::born(yx.state, QubitState::cube(Axis::Y, Sign::Minus)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(x_pz.phase * yx.phase - e34) < 1e-12);

  const auto xy = qq::apply_cube_op(Axis::X, y_pz.state);
  CHECK(qq::born(xy.state, px) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(y_pz.phase * xy.phase - e4) < 1e-12);
}

TEST_CASE("basis-change matrices are the printed ones and act correctly") {
  const CMatrix uxz = qq::basis_change(qq::BasisChange::ZtoX);
  const CMatrix uyz = qq::basis_change(qq::BasisChange::ZtoY);
  const CMatrix uyx = qq::basis_change(qq::BasisChange::XtoY);

  CHECK(uxz.is_unitary(1e-12));
  CHECK(uyz.is_unitary(1e-12));
  CHECK(uyx.is_unitary(1e-12));

  // Columns are the named basis states written in the host basis.
  CHECK(std::abs(uxz(0, 0) - kInvSqrt2) < 1e-15);
  CHECK(std::abs(uxz(1, 1) + kInvSqrt2) < 1e-15);
  CHECK(std::abs(uyz(1, 0) - kI * kInvSqrt2) < 1e-15);
  CHECK(std::abs(uyz(1, 1) + kI * kInvSqrt2) < 1e-15);
  CHECK(std::abs(uyx(0, 0) - cplx{0.5, 0.5}) < 1e-15);
  CHECK(std::abs(uyx(0, 1) - cplx{0.5, -0.5}) < 1e-15);

  // U(z->y) carries y-basis components to z-basis amplitudes.
  const qq::CVector plus_y_in_y{cplx{1, 0}, cplx{0, 0}};
  const qq::CVector in_z = uyz * plus_y_in_y;
  const auto py = QubitState::cube(Axis::Y, Sign::Plus);
  CHECK(std::abs(in_z[0] - py.alpha()) < 1e-14);
  CHECK(std::abs(in_z[1] - py.beta()) < 1e-14);

  // |-z> expressed in the y basis is (-i, i)/sqrt(2).
  const qq::CVector mz{cplx{0, 0}, cplx{1, 0}};
  const qq::CVector mz_in_y = uyz.adjoint() * mz;
  CHECK(std::abs(mz_in_y[0] - cplx{0.0, -kInvSqrt2}) < 1e-14);
  CHECK(std::abs(mz_in_y[1] - cplx{0.0, kInvSqrt2}) < 1e-14);
}

TEST_CASE("density matrices: expectation values and validation") {
  const auto px = QubitState::cube(Axis::X, Sign::Plus);
  const auto rho_x = QubitDensity::pure(px);
  CHECK(qq::expectation(rho_x, qq::pauli_x()) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::fabs(qq::expectation(rho_x, qq::pauli_z())) < 1e-13);
  CHECK(rho_x.purity() == doctest::Approx(1.0).epsilon(1e-13));

  // 0.6 |+z><+z| + 0.4 |-z><-z| has <sigma_z> = 0.2.
  const auto mix = QubitDensity::mixture(
      {{0.6, QubitState::cube(Axis::Z, Sign::Plus)},
       {0.4, QubitState::cube(Axis::Z, Sign::Minus)}});
  CHECK(qq::expectation(mix, qq::pauli_z()) ==
        doctest::Approx(0.2).epsilon(1e-13));
  CHECK(mix.purity() == doctest::Approx(0.52).epsilon(1e-13));

  CHECK_THROWS(qq::expectation(mix, CMatrix::from_rows({{0, 1}, {0, 0}})));
  CHECK_THROWS(QubitDensity(CMatrix::from_rows({{0.7, 0}, {0, 0.7}})));
  CHECK_THROWS(QubitDensity::from_bloch({0.0, 0.0, 1.5}));
}

TEST_CASE("Bloch vectors: origin, axes, and general angles") {
  const auto origin = qq::bloch_vector(QubitDensity::from_bloch({0, 0, 0}));
  CHECK(std::fabs(origin[0]) < 1e-14);
  CHECK(std::fabs(origin[1]) < 1e-14);
  CHECK(std::fabs(origin[2]) < 1e-14);

  const auto ry =
      qq::bloch_vector(QubitDensity::pure(QubitState::cube(Axis::Y, Sign::Plus)));
  CHECK(ry[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(ry[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ry[2] == doctest::Approx(0.0).epsilon(1e-13));

  const double theta = 1.3, phi = 0.4;
  const auto r = qq::bloch_vector(
      QubitDensity::pure(QubitState::from_angles(theta, phi)));
  CHECK(r[0] == doctest::Approx(std::sin(theta) * std::cos(phi)).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(std::sin(theta) * std::sin(phi)).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(std::cos(theta)).epsilon(1e-12));

  // Purity 1 iff |r| = 1: the mixed example sits inside the sphere.
  const auto mix = QubitDensity::from_bloch({0.3, 0.0, 0.4});
  const auto rm = qq::bloch_vector(mix);
  const double rlen = std::sqrt(rm[0] * rm[0] + rm[1] * rm[1] + rm[2] * rm[2]);
  CHECK(rlen == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mix.purity() == doctest::Approx(0.5 * (1 + 0.25)).epsilon(1e-12));
}

TEST_CASE("Pauli identities: product chain and rotation consistency") {
  // sigma_x sigma_y sigma_z = i I.
  const CMatrix prod = qq::pauli_x() * qq::pauli_y() * qq::pauli_z();
  CHECK((prod - kI * CMatrix::identity(2)).max_abs() < 1e-14);

  // rotation_matrix at angle pi about z equals -i sigma_z.
  const CMatrix rz = qq::rotation_matrix({0, 0, 1}, M_PI);
  CHECK((rz - cplx{0, -1} * qq::pauli_z()).max_abs() < 1e-14);

  // The quarter-turn operators are e^{i pi/4} times rotation matrices.
  const cplx e4 = std::exp(cplx{0.0, M_PI / 4});
  CHECK((qq::cube_op_matrix(Axis::X) -
         e4 * qq::rotation_matrix({1, 0, 0}, M_PI / 2))
            .max_abs() < 1e-14);
  CHECK((qq::cube_op_matrix(Axis::Y) -
         e4 * qq::rotation_matrix({0, 1, 0}, M_PI / 2))
            .max_abs() < 1e-14);
  CHECK((qq::cube_op_matrix(Axis::Z) -
         e4 * qq::rotation_matrix({0, 0, 1}, M_PI / 2))
            .max_abs() < 1e-14);
}
