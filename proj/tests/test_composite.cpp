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

#include "qq/composite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qq/eigh.hpp"
#include "qq/matrix.hpp"
#include "qq/qubit.hpp"
#include "qq/rng.hpp"

using qq::CMatrix;
using qq::cplx;
using qq::CVector;
using qq::MultiQubitDensity;
using qq::MultiQubitState;

namespace {

const double kRoot2 = std::sqrt(2.0);

MultiQubitState random_state(std::size_t n_qubits, qq::Rng& rng) {
  CVector amp(std::size_t{1} << n_qubits);
  for (cplx& a : amp) a = cplx{rng.normal(), rng.normal()};
  qq::normalize(amp);
  return MultiQubitState(n_qubits, amp);
}

// Random full-rank density: B B^dag normalized to unit trace.
MultiQubitDensity random_density(std::size_t n_qubits, qq::Rng& rng) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMatrix b(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      b(i, j) = cplx{rng.normal(), rng.normal()};
    }
  }
  CMatrix rho = b * b.adjoint();
  rho *= 1.0 / rho.trace();
  return MultiQubitDensity(n_qubits, rho);
}

// p |Phi+><Phi+| + (1-p) I/4.
MultiQubitDensity werner(double p) {
  const MultiQubitState phi = qq::named_state(qq::NamedState::PhiPlus);
  CMatrix rho = CMatrix::outer(phi.amplitudes(), phi.amplitudes());
  rho *= p;
  rho += (1.0 - p) / 4.0 * CMatrix::identity(4);
  return MultiQubitDensity(2, rho);
}

double max_entry_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).max_abs();
}

}  // namespace

TEST_CASE("bit-string convention maps labels to indices") {
  // |b1 b2 ... bn> has qubit 1 as the slow index: |01> is index 1,
  // |10> index 2, |110> index 6.
  CHECK(MultiQubitState::from_bits("01").amplitude(1) == cplx{1.0, 0.0});
  CHECK(MultiQubitState::from_bits("10").amplitude(2) == cplx{1.0, 0.0});
  CHECK(MultiQubitState::from_bits("110").amplitude(6) == cplx{1.0, 0.0});
  CHECK(MultiQubitState::from_bits("111").amplitude(7) == cplx{1.0, 0.0});
  CHECK(MultiQubitState::basis(3, 5).amplitude(5) == cplx{1.0, 0.0});

  const MultiQubitState s = MultiQubitState::product(
      {qq::QubitState::cube(qq::Axis::Z, qq::Sign::Plus),
       qq::QubitState::cube(qq::Axis::X, qq::Sign::Plus)});
  // |0>|+x> = (|00> + |01>)/sqrt(2).
  CHECK(std::abs(s.amplitude(0) - cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(s.amplitude(1) - cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(s.amplitude(2)) < 1e-15);
  CHECK(std::abs(s.amplitude(3)) < 1e-15);

  CHECK_THROWS(MultiQubitState(2, CVector{1.0, 1.0, 0.0, 0.0}));
  CHECK_THROWS(MultiQubitState(2, CVector{1.0, 0.0}));
  CHECK_THROWS(MultiQubitState::from_bits("102"));
}

TEST_CASE("two-qubit gates match their printed matrices") {
  const CMatrix cnot = qq::gate(2, qq::GateName::CNOT, {1, 2});
  const CMatrix printed = CMatrix::from_rows({{1, 0, 0, 0},
                                              {0, 1, 0, 0},
                                              {0, 0, 0, 1},
                                              {0, 0, 1, 0}});
  CHECK(max_entry_diff(cnot, printed) == 0.0);

  // Action table: CNOT flips the target exactly when the control is 1.
  for (std::size_t in : {0u, 1u, 2u, 3u}) {
    const std::size_t expected = (in & 2u) ? (in ^ 1u) : in;
    const MultiQubitState out =
        qq::apply(cnot, MultiQubitState::basis(2, in));
    CHECK(std::abs(out.amplitude(expected) - cplx{1.0, 0.0}) < 1e-15);
  }

  const CMatrix cz = qq::gate(2, qq::GateName::CZ, {1, 2});
  CHECK(max_entry_diff(cz, CMatrix::diagonal(std::vector<double>{
                               1.0, 1.0, 1.0, -1.0})) == 0.0);
  // CPhase(pi) is exactly CZ up to the cos(pi) rounding of the last entry.
  CHECK(max_entry_diff(qq::gate(2, qq::GateName::CPhase, {1, 2}, M_PI), cz) <
        1e-15);

  const CMatrix swap = qq::gate(2, qq::GateName::SWAP, {1, 2});
  CHECK(max_entry_diff(swap, CMatrix::from_rows({{1, 0, 0, 0},
                                                 {0, 0, 1, 0},
                                                 {0, 1, 0, 0},
                                                 {0, 0, 0, 1}})) == 0.0);

  // CNOT and SWAP are involutions, exactly.
  CHECK(max_entry_diff(cnot * cnot, CMatrix::identity(4)) == 0.0);
  CHECK(max_entry_diff(swap * swap, CMatrix::identity(4)) == 0.0);

  // sqrt(SWAP) squares to SWAP.
  const CMatrix root_swap = qq::gate(2, qq::GateName::SqrtSwap, {1, 2});
  CHECK(max_entry_diff(root_swap * root_swap, swap) < 1e-15);
}

TEST_CASE("CNOT entangles the equal superposition of the control") {
  // CNOT on (|00> + |10>)/sqrt(2) gives the Bell state (|00> + |11>)/sqrt(2).
  const MultiQubitState in(2, {1.0 / kRoot2, 0.0, 1.0 / kRoot2, 0.0});
  const MultiQubitState out =
      qq::apply(qq::gate(2, qq::GateName::CNOT, {1, 2}), in);
  CHECK(std::abs(out.amplitude(0) - cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(out.amplitude(3) - cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(out.amplitude(1)) < 1e-15);
  CHECK(std::abs(out.amplitude(2)) < 1e-15);
}

TEST_CASE("gate embedding acts as identity on untouched qubits") {
  // Y on qubit 2 of 2 is I x Y, with the printed block form.
  const CMatrix y2 = qq::gate(2, qq::GateName::Y, {2});
  CHECK(max_entry_diff(y2, qq::kron(CMatrix::identity(2), qq::pauli_y())) ==
        0.0);

  // Applying it to (|00> + |11>)/sqrt(2) gives i(|01> - |10>)/sqrt(2).
  const MultiQubitState bell = qq::named_state(qq::NamedState::PhiPlus);
  const MultiQubitState rotated = qq::apply(y2, bell);
  CHECK(std::abs(rotated.amplitude(1) - cplx{0.0, 1.0 / kRoot2}) < 1e-15);
  CHECK(std::abs(rotated.amplitude(2) - cplx{0.0, -1.0 / kRoot2}) < 1e-15);

  // Two-qubit gates on adjacent pairs of a 3-qubit register are plain
  // Kronecker factors.
  const CMatrix cnot = qq::gate(2, qq::GateName::CNOT, {1, 2});
  CHECK(max_entry_diff(qq::gate(3, qq::GateName::CNOT, {1, 2}),
                       qq::kron(cnot, CMatrix::identity(2))) == 0.0);
  CHECK(max_entry_diff(qq::gate(3, qq::GateName::CNOT, {2, 3}),
                       qq::kron(CMatrix::identity(2), cnot)) == 0.0);

  // Reversed target order swaps control and target: CNOT(2,1) maps
  // |01> -> |11> and |11> -> |01>.
  const CMatrix rev = qq::gate(2, qq::GateName::CNOT, {2, 1});
  const MultiQubitState out =
      qq::apply(rev, MultiQubitState::basis(2, 1));
  CHECK(std::abs(out.amplitude(3) - cplx{1.0, 0.0}) < 1e-15);

  // All embedded gates are unitary.
  for (qq::GateName g : {qq::GateName::CNOT, qq::GateName::SqrtSwap,
                         qq::GateName::CPhase}) {
    CHECK(qq::gate(4, g, {3, 1}, 0.7).unitarity_error() < 1e-14);
  }
  for (qq::GateName g : {qq::GateName::H, qq::GateName::T, qq::GateName::X}) {
    CHECK(qq::gate(4, g, {2}).unitarity_error() < 1e-14);
  }

  CHECK_THROWS(qq::gate(2, qq::GateName::CNOT, {1, 1}));
  CHECK_THROWS(qq::gate(2, qq::GateName::CNOT, {1, 3}));
  CHECK_THROWS(qq::gate(2, qq::GateName::H, {1, 2}));
  CHECK_THROWS(qq::gate(2, qq::GateName::SWAP, {2}));
}

TEST_CASE("sqrt(SWAP) delocalizes a particle across the swapped pair") {
  // On three qubits, sqrt(SWAP) on qubits 1,2 sends |100> to
  // (1+i)/2 |100> + (1-i)/2 |010>.
  const CMatrix u = qq::gate(3, qq::GateName::SqrtSwap, {1, 2});
  const MultiQubitState out =
      qq::apply(u, MultiQubitState::from_bits("100"));
  CHECK(std::abs(out.amplitude(4) - cplx{0.5, 0.5}) < 1e-15);
  CHECK(std::abs(out.amplitude(2) - cplx{0.5, -0.5}) < 1e-15);
  for (std::size_t i : {0u, 1u, 3u, 5u, 6u, 7u}) {
    CHECK(std::abs(out.amplitude(i)) < 1e-15);
  }

  // Applying it twice completes the swap: |100> -> |010>.
  const MultiQubitState swapped = qq::apply(u, out);
  CHECK(std::abs(swapped.amplitude(2) - cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("partial measurement projects and renormalizes") {
  // Measuring qubit 1 of (|00>+|01>+|10>+|11>)/2 along z gives 0 with
  // probability 1/2 and leaves |0>(|0>+|1>)/sqrt(2).
  const MultiQubitState s(2, {0.5, 0.5, 0.5, 0.5});
  const auto outcomes = qq::measure_subsystem(s, 1, qq::Axis::Z);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].outcome == qq::Sign::Plus);
  CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(outcomes[0].post.has_value());
  const MultiQubitState& post = *outcomes[0].post;
  CHECK(std::abs(post.amplitude(0) - cplx{1.0 / kRoot2, 0.0}) < 1e-12);
  CHECK(std::abs(post.amplitude(1) - cplx{1.0 / kRoot2, 0.0}) < 1e-12);
  CHECK(std::abs(post.amplitude(2)) < 1e-15);
  CHECK(std::abs(post.amplitude(3)) < 1e-15);
}

TEST_CASE("measuring one GHZ qubit collapses all three") {
  const MultiQubitState ghz = qq::named_state(qq::NamedState::GHZ);
  const auto outcomes = qq::measure_subsystem(ghz, 1, qq::Axis::Z);
  CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(outcomes[0].post->amplitude(0) - cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(outcomes[1].post->amplitude(7) - cplx{1.0, 0.0}) < 1e-12);

  // A product state measured along its own axis is deterministic.
  const MultiQubitState prod = MultiQubitState::product(
      {qq::QubitState::cube(qq::Axis::Z, qq::Sign::Plus),
       qq::QubitState::cube(qq::Axis::X, qq::Sign::Plus)});
  const auto x2 = qq::measure_subsystem(prod, 2, qq::Axis::X);
  CHECK(x2[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x2[1].probability == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(!x2[1].post.has_value());

  // Probabilities always sum to 1.
  qq::Rng rng(qq::Rng::default_seed(), 32);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiQubitState r = random_state(3, rng);
    for (std::size_t q : {1u, 2u, 3u}) {
      for (qq::Axis ax : {qq::Axis::X, qq::Axis::Y, qq::Axis::Z}) {
        const auto outs = qq::measure_subsystem(r, q, ax);
        CHECK(outs[0].probability + outs[1].probability ==
              doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("measurement order leaves the final joint distribution alone") {
  // Measure Z then X versus X then Z, starting from |+y>; every joint
  // outcome has probability 1/4 either way.
  const MultiQubitState plus_y = MultiQubitState::product(
      {qq::QubitState::cube(qq::Axis::Y, qq::Sign::Plus)});
  auto joint = [](const MultiQubitState& s, qq::Axis first, qq::Axis second,
                  int i, int j) {
    const auto firsts = qq::measure_subsystem(s, 1, first);
    if (!firsts[i].post.has_value()) return 0.0;
    const auto seconds = qq::measure_subsystem(*firsts[i].post, 1, second);
    return firsts[i].probability * seconds[j].probability;
  };
  for (int i : {0, 1}) {
    for (int j : {0, 1}) {
      const double zx = joint(plus_y, qq::Axis::Z, qq::Axis::X, i, j);
      const double xz = joint(plus_y, qq::Axis::X, qq::Axis::Z, j, i);
      CHECK(zx == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(zx == doctest::Approx(xz).epsilon(1e-12));
    }
  }
}

TEST_CASE("joint probabilities follow the Born rule across bases") {
  const MultiQubitState bell = qq::named_state(qq::NamedState::PhiPlus);
  const qq::QubitState px = qq::QubitState::cube(qq::Axis::X, qq::Sign::Plus);
  const qq::QubitState mx = qq::QubitState::cube(qq::Axis::X, qq::Sign::Minus);
  // (|00>+|11>)/sqrt(2) = (|+x,+x> + |-x,-x>)/sqrt(2): the mixed-sign
  // outcomes vanish.
  CHECK(qq::joint_probability(bell, {px, px}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(qq::joint_probability(bell, {px, mx}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(qq::joint_probability(bell, {mx, mx}) ==
        doctest::Approx(0.5).epsilon(1e-12));

  const qq::QubitState zero = qq::QubitState::cube(qq::Axis::Z, qq::Sign::Plus);
  CHECK(qq::joint_probability(MultiQubitState::from_bits("00"), {zero, zero}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // The four joint outcomes of any product basis are exhaustive.
  qq::Rng rng(qq::Rng::default_seed(), 33);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiQubitState s = random_state(2, rng);
    double total = 0.0;
    for (qq::Sign s1 : {qq::Sign::Plus, qq::Sign::Minus}) {
      for (qq::Sign s2 : {qq::Sign::Plus, qq::Sign::Minus}) {
        total += qq::joint_probability(
            s, {qq::QubitState::cube(qq::Axis::X, s1),
                qq::QubitState::cube(qq::Axis::Y, s2)});
      }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("the worked 4x4 density reduces to maximally mixed halves") {
  const CMatrix rho_ab = CMatrix::from_rows({{0.4, 0.0, 0.0, 0.2},
                                             {0.0, 0.1, 0.05, 0.0},
                                             {0.0, 0.05, 0.1, 0.0},
                                             {0.2, 0.0, 0.0, 0.4}});
  const MultiQubitDensity rho(2, rho_ab);
  const CMatrix half = 0.5 * CMatrix::identity(2);
  CHECK(max_entry_diff(qq::partial_trace(rho, {1}).matrix(), half) < 1e-15);
  CHECK(max_entry_diff(qq::partial_trace(rho, {2}).matrix(), half) < 1e-15);
}

TEST_CASE("partial trace of a product density recovers each factor") {
  const qq::QubitDensity a = qq::QubitDensity::from_bloch({0.3, -0.2, 0.4});
  const qq::QubitDensity b = qq::QubitDensity::from_bloch({-0.1, 0.5, 0.2});
  const MultiQubitDensity rho(2, qq::kron(a.matrix(), b.matrix()));
  CHECK(max_entry_diff(qq::partial_trace(rho, {1}).matrix(), a.matrix()) <
        1e-12);
  CHECK(max_entry_diff(qq::partial_trace(rho, {2}).matrix(), b.matrix()) <
        1e-12);
}

TEST_CASE("tracing half a Bell pair leaves the maximally mixed state") {
  const MultiQubitDensity rho =
      MultiQubitDensity::pure(qq::named_state(qq::NamedState::PhiPlus));
  const MultiQubitDensity reduced = qq::partial_trace(rho, {1});
  CHECK(max_entry_diff(reduced.matrix(), 0.5 * CMatrix::identity(2)) < 1e-12);
  CHECK(reduced.purity() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("three partial-trace computations agree on random densities") {
  // The library's index summation is checked against the projection form
  // sum_j (I x <j|) rho (I x |j>) and against summing/tracing 2x2 blocks.
  qq::Rng rng(qq::Rng::default_seed(), 34);
  const CMatrix bra0 = CMatrix::from_rows({{1, 0}});
  const CMatrix bra1 = CMatrix::from_rows({{0, 1}});
  const CMatrix eye = CMatrix::identity(2);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiQubitDensity rho = random_density(2, rng);
    const CMatrix& m = rho.matrix();

    CMatrix proj_a(2, 2), proj_b(2, 2), block_a(2, 2), block_b(2, 2);
    for (const CMatrix& bra : {bra0, bra1}) {
      const CMatrix sel_b = qq::kron(eye, bra);   // discard qubit 2
      const CMatrix sel_a = qq::kron(bra, eye);   // discard qubit 1
      proj_a += sel_b * m * sel_b.adjoint();
      proj_b += sel_a * m * sel_a.adjoint();
    }
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        // Trace within blocks for the fast qubit, sum diagonal blocks for
        // the slow one.
        block_a(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
        block_b(i, j) = m(i, j) + m(2 + i, 2 + j);
      }
    }

    const CMatrix lib_a = qq::partial_trace(rho, {1}).matrix();
    const CMatrix lib_b = qq::partial_trace(rho, {2}).matrix();
    CHECK(max_entry_diff(lib_a, proj_a) < 1e-12);
    CHECK(max_entry_diff(lib_a, block_a) < 1e-12);
    CHECK(max_entry_diff(lib_b, proj_b) < 1e-12);
    CHECK(max_entry_diff(lib_b, block_b) < 1e-12);
  }
}

TEST_CASE("partial trace keeps non-adjacent qubits in order") {
  const qq::QubitState a = qq::QubitState::from_angles(0.7, 1.1);
  const qq::QubitState b = qq::QubitState::from_angles(2.1, -0.4);
  const qq::QubitState c = qq::QubitState::from_angles(1.3, 2.9);
  const MultiQubitDensity rho =
      MultiQubitDensity::pure(MultiQubitState::product({a, b, c}));
  const CMatrix expected = qq::kron(qq::QubitDensity::pure(a).matrix(),
                                    qq::QubitDensity::pure(c).matrix());
  CHECK(max_entry_diff(qq::partial_trace(rho, {1, 3}).matrix(), expected) <
        1e-12);

  // GHZ keeps only the classical correlations once a qubit is dropped.
  const MultiQubitDensity ghz =
      MultiQubitDensity::pure(qq::named_state(qq::NamedState::GHZ));
  CMatrix classical(4, 4);
  classical(0, 0) = 0.5;
  classical(3, 3) = 0.5;
  CHECK(max_entry_diff(qq::partial_trace(ghz, {1, 2}).matrix(), classical) <
        1e-12);
}

TEST_CASE("Schmidt form of Bell and biased superpositions") {
  const qq::SchmidtDecomposition bell =
      qq::schmidt(qq::named_state(qq::NamedState::PhiPlus), 1);
  REQUIRE(bell.coefficients.size() == 2);
  CHECK(bell.coefficients[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell.coefficients[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bell.schmidt_number() == 2);

  const MultiQubitState biased(
      2, {std::sqrt(0.7), 0.0, 0.0, std::sqrt(0.3)});
  const qq::SchmidtDecomposition sd = qq::schmidt(biased, 1);
  CHECK(sd.coefficients[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(sd.coefficients[1] == doctest::Approx(0.3).epsilon(1e-12));

  const MultiQubitState product = MultiQubitState::product(
      {qq::QubitState::cube(qq::Axis::X, qq::Sign::Plus),
       qq::QubitState::cube(qq::Axis::X, qq::Sign::Minus)});
  const qq::SchmidtDecomposition prod_sd = qq::schmidt(product, 1);
  CHECK(prod_sd.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(prod_sd.coefficients[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(prod_sd.schmidt_number() == 1);
  // The rank-1 factor is |+x> up to a phase.
  CHECK(std::abs(std::abs(qq::inner(
            prod_sd.left[0],
            qq::QubitState::cube(qq::Axis::X, qq::Sign::Plus).vec())) -
        1.0) < 1e-10);
}

TEST_CASE("Schmidt vectors reconstruct random states at every cut") {
  qq::Rng rng(qq::Rng::default_seed(), 35);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t cut = 1; cut < n; ++cut) {
      for (int trial = 0; trial < 5; ++trial) {
        const MultiQubitState s = random_state(n, rng);
        const qq::SchmidtDecomposition sd = qq::schmidt(s, cut);
        const std::size_t da = std::size_t{1} << cut;
        const std::size_t db = std::size_t{1} << (n - cut);
        const std::size_t r = std::min(da, db);
        REQUIRE(sd.coefficients.size() == r);
        REQUIRE(sd.left.size() == r);
        REQUIRE(sd.right.size() == r);

        double total = 0.0;
        for (std::size_t k = 0; k < r; ++k) {
          total += sd.coefficients[k];
          if (k + 1 < r) CHECK(sd.coefficients[k] >= sd.coefficients[k + 1]);
          for (std::size_t l = 0; l <= k; ++l) {
            const double want = (k == l) ? 1.0 : 0.0;
            CHECK(std::abs(qq::inner(sd.left[k], sd.left[l]) -
                           cplx{want, 0.0}) < 1e-9);
            CHECK(std::abs(qq::inner(sd.right[k], sd.right[l]) -
                           cplx{want, 0.0}) < 1e-9);
          }
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

        CVector rebuilt(s.dim(), cplx{0.0, 0.0});
        for (std::size_t k = 0; k < r; ++k) {
          const double root = std::sqrt(std::max(0.0, sd.coefficients[k]));
          for (std::size_t a = 0; a < da; ++a) {
            for (std::size_t b = 0; b < db; ++b) {
              rebuilt[a * db + b] += root * sd.left[k][a] * sd.right[k][b];
            }
          }
        }
        CHECK(qq::max_abs_diff(rebuilt, s.amplitudes()) < 1e-10);
      }
    }
  }
}

TEST_CASE("entanglement entropy in bits") {
  CHECK(qq::entanglement_entropy(qq::named_state(qq::NamedState::PhiPlus), 1) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const MultiQubitState product = MultiQubitState::product(
      {qq::QubitState::from_angles(0.3, 0.8),
       qq::QubitState::from_angles(1.9, 2.2)});
  CHECK(qq::entanglement_entropy(product, 1) ==
        doctest::Approx(0.0).epsilon(1e-9));

  // sqrt(0.7)|00> + sqrt(0.3)|11> carries the binary entropy of 0.7.
  const MultiQubitState biased(
      2, {std::sqrt(0.7), 0.0, 0.0, std::sqrt(0.3)});
  const double h = -0.7 * std::log2(0.7) - 0.3 * std::log2(0.3);
  CHECK(qq::entanglement_entropy(biased, 1) ==
        doctest::Approx(h).epsilon(1e-12));
  CHECK(h == doctest::Approx(0.8813).epsilon(1e-4));
}

TEST_CASE("both halves of a pure state carry the same entropy") {
  // S_A from the Schmidt route must match S_B computed independently from
  // the spectrum of the other reduced density matrix.
  qq::Rng rng(qq::Rng::default_seed(), 36);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (std::size_t cut = 1; cut < n; ++cut) {
      const MultiQubitState s = random_state(n, rng);
      const double s_a = qq::entanglement_entropy(s, cut);

      std::vector<std::size_t> b_side;
      for (std::size_t q = cut + 1; q <= n; ++q) b_side.push_back(q);
      const MultiQubitDensity rho_b =
          qq::partial_trace(MultiQubitDensity::pure(s), b_side);
      double s_b = 0.0;
      for (double lam : qq::eigh_values(rho_b.matrix())) {
        if (lam > 1e-15) s_b -= lam * std::log2(lam);
      }
      CHECK(s_a == doctest::Approx(s_b).epsilon(1e-10));
    }
  }
}

TEST_CASE("concurrence matches the pure-state determinant formula") {
  for (qq::NamedState bell : {qq::NamedState::PhiPlus, qq::NamedState::PhiMinus,
                              qq::NamedState::PsiPlus,
                              qq::NamedState::PsiMinus}) {
    CHECK(qq::concurrence(MultiQubitDensity::pure(qq::named_state(bell))) ==
          doctest::Approx(1.0).epsilon(1e-7));
  }

  const MultiQubitState product = MultiQubitState::product(
      {qq::QubitState::from_angles(0.9, 0.2),
       qq::QubitState::from_angles(2.4, 1.7)});
  // Zero eigenvalues of the flipped product pick up sqrt-amplified
  // roundoff, so the tolerance is looser than elsewhere.
  CHECK(qq::concurrence(MultiQubitDensity::pure(product)) ==
        doctest::Approx(0.0).epsilon(1e-7));

  // For pure two-qubit states the Wootters eigenvalue form reduces to
  // 2 |ad - bc|; the general route must agree with that oracle.
  qq::Rng rng(qq::Rng::default_seed(), 37);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiQubitState s = random_state(2, rng);
    const cplx det = s.amplitude(0) * s.amplitude(3) -
                     s.amplitude(1) * s.amplitude(2);
    CHECK(qq::concurrence(MultiQubitDensity::pure(s)) ==
          doctest::Approx(2.0 * std::abs(det)).epsilon(1e-7));
  }
}

TEST_CASE("Werner mixtures lose their entanglement at p = 1/3") {
  // Eigenvalue brute force gives C(p) = max(0, (3p-1)/2) for the
  // Bell-plus-white-noise family.
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.1 * i;
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(qq::concurrence(werner(p)) ==
          doctest::Approx(expected).epsilon(1e-7));
  }
  CHECK(qq::concurrence(werner(1.0 / 3.0)) ==
        doctest::Approx(0.0).epsilon(1e-7));
  CHECK(qq::concurrence(werner(1.0 / 3.0 + 0.01)) > 1e-3);
}

TEST_CASE("GHZ and W states share entanglement differently") {
  // Dropping any qubit of GHZ leaves a separable pair; dropping any qubit
  // of W leaves pairwise concurrence 2/3.
  const MultiQubitDensity ghz =
      MultiQubitDensity::pure(qq::named_state(qq::NamedState::GHZ));
  const MultiQubitDensity w =
      MultiQubitDensity::pure(qq::named_state(qq::NamedState::W));
  const std::vector<std::vector<std::size_t>> pairs = {{2, 3}, {1, 3}, {1, 2}};
  for (const auto& keep : pairs) {
    CHECK(qq::concurrence(qq::partial_trace(ghz, keep)) ==
          doctest::Approx(0.0).epsilon(1e-7));
    CHECK(qq::concurrence(qq::partial_trace(w, keep)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-7));
  }
}

TEST_CASE("partial transpose flags entangled two-qubit densities") {
  const MultiQubitDensity bell =
      MultiQubitDensity::pure(qq::named_state(qq::NamedState::PhiPlus));
  CHECK(qq::ppt_min_eigenvalue(bell) == doctest::Approx(-0.5).epsilon(1e-12));

  const MultiQubitState product = MultiQubitState::product(
      {qq::QubitState::from_angles(1.1, 0.6),
       qq::QubitState::from_angles(0.4, 2.8)});
  CHECK(qq::ppt_min_eigenvalue(MultiQubitDensity::pure(product)) >= -1e-12);

  // The Bell-plus-noise family has partial-transpose spectrum
  // {(1+p)/4 (x3), (1-3p)/4}: positive through p = 1/3, negative past it.
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.1 * i;
    CHECK(qq::ppt_min_eigenvalue(werner(p)) ==
          doctest::Approx((1.0 - 3.0 * p) / 4.0).epsilon(1e-10));
  }
  CHECK(qq::ppt_min_eigenvalue(werner(0.2)) >= 0.0);
}

TEST_CASE("named states have their textbook amplitudes") {
  const MultiQubitState psi_minus = qq::named_state(qq::NamedState::PsiMinus);
  CHECK(std::abs(psi_minus.amplitude(0)) < 1e-15);
  CHECK(std::abs(psi_minus.amplitude(1) - cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(psi_minus.amplitude(2) + cplx{1.0 / kRoot2, 0.0}) < 1e-15);
  CHECK(std::abs(psi_minus.amplitude(3)) < 1e-15);

  // The four Bell states are orthonormal.
  const std::vector<qq::NamedState> bells = {
      qq::NamedState::PhiPlus, qq::NamedState::PhiMinus,
      qq::NamedState::PsiPlus, qq::NamedState::PsiMinus};
  for (std::size_t i = 0; i < bells.size(); ++i) {
    for (std::size_t j = 0; j < bells.size(); ++j) {
      const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      CHECK(std::abs(qq::inner(qq::named_state(bells[i]),
                               qq::named_state(bells[j])) -
                     want) < 1e-15);
    }
  }

  const MultiQubitState w = qq::named_state(qq::NamedState::W);
  const double third = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(w.amplitude(1) - cplx{third, 0.0}) < 1e-15);
  CHECK(std::abs(w.amplitude(2) - cplx{third, 0.0}) < 1e-15);
  CHECK(std::abs(w.amplitude(4) - cplx{third, 0.0}) < 1e-15);

  // The two GHZ sign variants are orthogonal.
  CHECK(std::abs(qq::inner(qq::named_state(qq::NamedState::GHZ),
                           qq::named_state(qq::NamedState::GHZMinus))) <
        1e-15);
}

TEST_CASE("density validation rejects unphysical matrices") {
  CHECK_THROWS(MultiQubitDensity(2, CMatrix::identity(4)));  // trace 4
  CMatrix skew = 0.25 * CMatrix::identity(4);
  skew(0, 1) = cplx{0.1, 0.0};  // not Hermitian
  CHECK_THROWS(MultiQubitDensity(2, skew));
  CHECK_THROWS(MultiQubitDensity(
      2, CMatrix::diagonal(std::vector<double>{1.5, -0.5, 0.0, 0.0})));
  CHECK_THROWS(qq::concurrence(MultiQubitDensity(
      1, 0.5 * CMatrix::identity(2))));
}
