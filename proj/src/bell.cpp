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

#include "qq/bell.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qq/kernels.hpp"
#include "qq/rng.hpp"

namespace qq {

namespace {

double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

void check_two_qubits(std::size_t n_qubits, const char* where) {
  if (n_qubits != 2) {
    throw std::invalid_argument(std::string(where) +
                                ": expected a two-qubit state");
  }
}

double state_expectation(const MultiQubitState& state, const CMatrix& op) {
  return inner(state.amplitudes(), op * state.amplitudes()).real();
}

// Classification of an axis against the cube grid: index of the single
// +-1 component for a face, the two +-1/sqrt(2) components for an edge.
constexpr double kGridTol = 1e-9;

bool is_face(const Vec3& n, std::size_t* index, int* sign) {
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    if (std::abs(std::abs(n[i]) - 1.0) <= kGridTol &&
        std::abs(n[j]) <= kGridTol && std::abs(n[k]) <= kGridTol) {
      if (index != nullptr) *index = i;
      if (sign != nullptr) *sign = n[i] > 0.0 ? 1 : -1;
      return true;
    }
  }
  return false;
}

bool is_edge(const Vec3& n) {
  const double h = 1.0 / std::sqrt(2.0);
  int zeros = 0;
  int halves = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(n[i]) <= kGridTol) {
      ++zeros;
    } else if (std::abs(std::abs(n[i]) - h) <= kGridTol) {
      ++halves;
    }
  }
  return zeros == 1 && halves == 2;
}

int resolve_sign(double x, TieBreak tie, Rng& rng) {
  if (x > 0.0) return 1;
  if (x < 0.0) return -1;
  switch (tie) {
    case TieBreak::kPlus:
      return 1;
    case TieBreak::kMinus:
      return -1;
    case TieBreak::kCoinFlip:
      return rng.uniform() < 0.5 ? -1 : 1;
  }
  throw std::logic_error("resolve_sign: unknown tie break");
}

// Sum of outcome products for samples [lo, hi) drawn from one stream.
// Products are +-1, so the double accumulator is exact.
double block_sum(const LHVModel& model, const Vec3& a, const Vec3& b,
                 std::size_t lo, std::size_t hi, std::uint64_t stream) {
  Rng rng(model.seed, stream);
  double sum = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    Vec3 lambda;
    if (model.kind == LHVKind::kSphereSign) {
      lambda = rng.unit_vector();
    } else {
      for (std::size_t c = 0; c < 3; ++c) {
        lambda[c] = rng.uniform() < 0.5 ? -1.0 : 1.0;
      }
    }
    const int alice = resolve_sign(dot(a, lambda), model.tie_break, rng);
    const int bob = -resolve_sign(dot(b, lambda), model.tie_break, rng);
    sum += static_cast<double>(alice * bob);
  }
  return sum;
}

bool run_blocks_parallel(std::size_t n_samples) {
#ifdef _OPENMP
  switch (kernels::policy()) {
    case kernels::Policy::ForceSerial:
      return false;
    case kernels::Policy::ForceParallel:
      return true;
    case kernels::Policy::Auto:
      return n_samples >= kernels::kParallelCutoff;
  }
  return false;
#else
  (void)n_samples;
  return false;
#endif
}

}  // namespace

MeasurementAxis::MeasurementAxis(double x, double y, double z)
    : MeasurementAxis(Vec3{x, y, z}) {}

MeasurementAxis::MeasurementAxis(const Vec3& n) {
  const double norm = std::sqrt(dot(n, n));
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("MeasurementAxis: direction must be a unit "
                                "vector to 1e-12");
  }
  n_ = {n[0] / norm, n[1] / norm, n[2] / norm};
}

CMatrix MeasurementAxis::observable() const { return axis_operator(n_); }

double angle_between(const MeasurementAxis& a, const MeasurementAxis& b) {
  const double c = std::clamp(dot(a.direction(), b.direction()), -1.0, 1.0);
  return std::acos(c);
}

MeasurementAxis face_x() { return MeasurementAxis(1.0, 0.0, 0.0); }
MeasurementAxis face_y() { return MeasurementAxis(0.0, 1.0, 0.0); }
MeasurementAxis face_z() { return MeasurementAxis(0.0, 0.0, 1.0); }

MeasurementAxis edge_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return MeasurementAxis(h, 0.0, h);
}

MeasurementAxis edge_minus() {
  const double h = 1.0 / std::sqrt(2.0);
  return MeasurementAxis(h, 0.0, -h);
}

MeasurementAxis axis_xz(double theta) {
  return MeasurementAxis(std::sin(theta), 0.0, std::cos(theta));
}

MultiQubitDensity werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner: singlet fraction must lie in [0, 1]");
  }
  const CVector singlet = named_state(NamedState::PsiMinus).amplitudes();
  const CMatrix rho = cplx(p) * CMatrix::outer(singlet, singlet) +
                      cplx((1.0 - p) / 4.0) * CMatrix::identity(4);
  return MultiQubitDensity(2, rho);
}

double quantum_correlation(const MultiQubitState& state,
                           const MeasurementAxis& a, const MeasurementAxis& b) {
  check_two_qubits(state.n_qubits(), "quantum_correlation");
  return state_expectation(state, kron(a.observable(), b.observable()));
}

double quantum_correlation(const MultiQubitDensity& rho,
                           const MeasurementAxis& a, const MeasurementAxis& b) {
  check_two_qubits(rho.n_qubits(), "quantum_correlation");
  return (rho.matrix() * kron(a.observable(), b.observable())).trace().real();
}

double quantum_correlation(const MultiQubitState& state,
                           const MeasurementAxis& a, const MeasurementAxis& b,
                           const MeasurementAxis& c) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument(
        "quantum_correlation: expected a three-qubit state");
  }
  const CMatrix op =
      kron(kron(a.observable(), b.observable()), c.observable());
  return state_expectation(state, op);
}

namespace {

template <typename State>
double chsh_impl(const State& state, const MeasurementAxis& a,
                 const MeasurementAxis& a_prime, const MeasurementAxis& b,
                 const MeasurementAxis& b_prime) {
  return quantum_correlation(state, a, b) -
         quantum_correlation(state, a, b_prime) +
         quantum_correlation(state, a_prime, b) +
         quantum_correlation(state, a_prime, b_prime);
}

}  // namespace

double chsh(const MultiQubitState& state, const MeasurementAxis& a,
            const MeasurementAxis& a_prime, const MeasurementAxis& b,
            const MeasurementAxis& b_prime) {
  return chsh_impl(state, a, a_prime, b, b_prime);
}

double chsh(const MultiQubitDensity& rho, const MeasurementAxis& a,
            const MeasurementAxis& a_prime, const MeasurementAxis& b,
            const MeasurementAxis& b_prime) {
  return chsh_impl(rho, a, a_prime, b, b_prime);
}

ChshAxes face_edge_axes() {
  return ChshAxes{face_z(), face_x(), edge_plus(), edge_minus()};
}

LHVEstimate lhv_correlation(const LHVModel& model, const MeasurementAxis& a,
                            const MeasurementAxis& b, std::size_t n_samples) {
  if (n_samples == 0) {
    throw std::invalid_argument("lhv_correlation: need at least one sample");
  }
  // Fixed block structure: sample i always lives in the same block with
  // the same RNG stream, so the estimate does not depend on the thread
  // count or the dispatch policy.
  constexpr std::size_t kBlocks = 256;
  const std::size_t blocks = std::min(kBlocks, n_samples);
  std::vector<double> partial(blocks, 0.0);
  const Vec3& na = a.direction();
  const Vec3& nb = b.direction();
  if (run_blocks_parallel(n_samples)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(blocks);
         ++blk) {
      const auto u = static_cast<std::size_t>(blk);
      partial[u] = block_sum(model, na, nb, n_samples * u / blocks,
                             n_samples * (u + 1) / blocks, u);
    }
  } else {
    for (std::size_t u = 0; u < blocks; ++u) {
      partial[u] = block_sum(model, na, nb, n_samples * u / blocks,
                             n_samples * (u + 1) / blocks, u);
    }
  }
  const double mean =
      kernels::pairwise_sum(partial.data(), blocks) / static_cast<double>(n_samples);
  // Every product is +-1, so the mean of squares is exactly 1 and the
  // sample variance reduces to (1 - mean^2) n/(n-1).
  double std_error = 0.0;
  if (n_samples > 1) {
    const double var = std::max(0.0, 1.0 - mean * mean);
    std_error = std::sqrt(var / static_cast<double>(n_samples - 1));
  }
  return LHVEstimate{mean, std_error, n_samples};
}

double face_model_prob(const MeasurementAxis& prepared,
                       const MeasurementAxis& axis) {
  std::size_t fixed_index = 0;
  int fixed_sign = 0;
  if (!is_face(prepared.direction(), &fixed_index, &fixed_sign)) {
    throw std::invalid_argument(
        "face_model_prob: preparation must be a face axis");
  }
  const Vec3& n = axis.direction();
  if (!is_face(n, nullptr, nullptr) && !is_edge(n)) {
    throw std::invalid_argument(
        "face_model_prob: the model only answers face and edge axes");
  }
  // Enumerate the four hidden triples compatible with the preparation and
  // award full weight to strictly positive projections, half weight to
  // boundary ones.
  double prob = 0.0;
  for (int s1 = -1; s1 <= 1; s1 += 2) {
    for (int s2 = -1; s2 <= 1; s2 += 2) {
      Vec3 lambda;
      lambda[fixed_index] = fixed_sign;
      lambda[(fixed_index + 1) % 3] = s1;
      lambda[(fixed_index + 2) % 3] = s2;
      const double d = dot(n, lambda);
      if (d > kGridTol) {
        prob += 0.25;
      } else if (d >= -kGridTol) {
        prob += 0.125;
      }
    }
  }
  return prob;
}

MultiQubitState ghz_state() { return named_state(NamedState::GHZMinus); }

CMatrix parity_operator(ParityWord which) {
  const CMatrix x = pauli_x();
  const CMatrix y = pauli_y();
  switch (which) {
    case ParityWord::kXYY:
      return kron(kron(x, y), y);
    case ParityWord::kYXY:
      return kron(kron(y, x), y);
    case ParityWord::kYYX:
      return kron(kron(y, y), x);
    case ParityWord::kXXX:
      return kron(kron(x, x), x);
  }
  throw std::invalid_argument("parity_operator: unknown word");
}

int ghz_parity(ParityWord which) {
  const MultiQubitState state = ghz_state();
  const CVector applied = parity_operator(which) * state.amplitudes();
  const double expectation = inner(state.amplitudes(), applied).real();
  const int eigenvalue = expectation > 0.0 ? 1 : -1;
  const CVector scaled = cplx(eigenvalue) * state.amplitudes();
  if (max_abs_diff(applied, scaled) > 1e-12) {
    throw std::logic_error("ghz_parity: state is not an eigenvector");
  }
  return eigenvalue;
}

double mermin(const MultiQubitState& state, const MeasurementAxis& a1,
              const MeasurementAxis& a2, const MeasurementAxis& b1,
              const MeasurementAxis& b2, const MeasurementAxis& c1,
              const MeasurementAxis& c2) {
  return quantum_correlation(state, a1, b1, c1) +
         quantum_correlation(state, a1, b2, c2) +
         quantum_correlation(state, a2, b1, c2) -
         quantum_correlation(state, a2, b2, c1);
}

CMatrix teleport_correction(NamedState bell_outcome) {
  switch (bell_outcome) {
    case NamedState::PhiPlus:
      return CMatrix::identity(2);
    case NamedState::PsiPlus:
      return pauli_x();
    case NamedState::PhiMinus:
      return pauli_z();
    case NamedState::PsiMinus:
      return pauli_z() * pauli_x();
    default:
      throw std::invalid_argument(
          "teleport_correction: outcome must be one of the four Bell states");
  }
}

}  // namespace qq
