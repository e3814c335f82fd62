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
#include <cstdint>

#include "qq/composite.hpp"
#include "qq/matrix.hpp"
#include "qq/qubit.hpp"

namespace qq {

// A spin measurement direction: a unit 3-vector n with observable n.sigma
// (eigenvalues +1 and -1).
class MeasurementAxis {
 public:
  // Validates |n| = 1 to 1e-12 and stores the vector renormalized.
  MeasurementAxis(double x, double y, double z);
  explicit MeasurementAxis(const Vec3& n);

  const Vec3& direction() const { return n_; }
  CMatrix observable() const;  // n.sigma

 private:
  Vec3 n_;
};

// Angle between two axes, in [0, pi].
double angle_between(const MeasurementAxis& a, const MeasurementAxis& b);

// The cube taxonomy of directions used throughout: the coordinate faces
// and the two edge midpoints in the xz-plane, each 45 degrees from its
// neighbouring faces.
MeasurementAxis face_x();
MeasurementAxis face_y();
MeasurementAxis face_z();
MeasurementAxis edge_plus();   // (z + x)/sqrt(2), between +z and +x
MeasurementAxis edge_minus();  // (x - z)/sqrt(2), between +x and -z

// Axis in the xz-plane at polar angle theta from +z: (sin t, 0, cos t).
MeasurementAxis axis_xz(double theta);

// Singlet fraction p mixed with white noise: p |Psi-><Psi-| + (1-p) I/4.
// Requires p in [0, 1].
MultiQubitDensity werner(double p);

// <(a.sigma) x (b.sigma)> for a two-qubit pure state or density matrix.
// The singlet gives -cos(theta_ab) for any pair of axes.
double quantum_correlation(const MultiQubitState& state,
                           const MeasurementAxis& a, const MeasurementAxis& b);
double quantum_correlation(const MultiQubitDensity& rho,
                           const MeasurementAxis& a, const MeasurementAxis& b);

// Three-qubit extension <(a.sigma) x (b.sigma) x (c.sigma)>.
double quantum_correlation(const MultiQubitState& state,
                           const MeasurementAxis& a, const MeasurementAxis& b,
                           const MeasurementAxis& c);

// CHSH combination S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
// Deterministic +-1 assignments satisfy |S| <= 2; the singlet reaches
// -2 sqrt(2) on the face/edge axes below.
double chsh(const MultiQubitState& state, const MeasurementAxis& a,
            const MeasurementAxis& a_prime, const MeasurementAxis& b,
            const MeasurementAxis& b_prime);
double chsh(const MultiQubitDensity& rho, const MeasurementAxis& a,
            const MeasurementAxis& a_prime, const MeasurementAxis& b,
            const MeasurementAxis& b_prime);

// The maximally violating measurement set: one party along the two faces
// z and x, the other along the two edges between them, so three pairs sit
// 45 degrees apart and one pair 135.
struct ChshAxes {
  MeasurementAxis a;
  MeasurementAxis a_prime;
  MeasurementAxis b;
  MeasurementAxis b_prime;
};
ChshAxes face_edge_axes();

// Local hidden variable models for an anti-correlated pair. Each pair
// carries one shared hidden vector lambda; the first party reports
// sign(a.lambda) and the second reports -sign(b.lambda), so neither
// outcome depends on the other party's axis.
enum class LHVKind {
  kFaceCube,    // lambda uniform over the eight sign triples (+-1,+-1,+-1)
  kSphereSign,  // lambda uniform on the unit sphere
};

// What to report when an axis is exactly orthogonal to lambda. The sign
//-triple model ties at edge axes; the continuous model almost never ties.
enum class TieBreak { kPlus, kMinus, kCoinFlip };

struct LHVModel {
  LHVKind kind = LHVKind::kSphereSign;
  TieBreak tie_break = TieBreak::kCoinFlip;
  std::uint64_t seed = 0;
};

struct LHVEstimate {
  double estimate;    // mean of the +-1 outcome products
  double std_error;   // sample standard deviation / sqrt(n)
  std::size_t n_samples;
};

// Monte Carlo estimate of the model's correlation from n_samples pairs.
// The sphere model converges to -1 + 2 theta/pi, the straight line that
// any such average traces between perfect anti-correlation and perfect
// correlation. Work is split over fixed sample blocks, one RNG stream
// per block, so the result is identical however many threads run.
// Requires n_samples >= 1.
LHVEstimate lhv_correlation(const LHVModel& model, const MeasurementAxis& a,
                            const MeasurementAxis& b, std::size_t n_samples);

// Exact single-particle probability that the sign-triple model answers +1
// when a particle prepared along the face axis `prepared` is measured
// along `axis` (a face or an edge). The hidden value along the prepared
// axis is fixed at the visible answer and the other two are independent
// fair signs; triples landing exactly on the boundary (zero dot product)
// split their weight evenly between the answers, which is what makes the
// edge prediction 3/4 instead of the quantum cos^2(22.5 deg).
// Throws std::invalid_argument for non-face preparations or axes outside
// the face/edge set.
double face_model_prob(const MeasurementAxis& prepared,
                       const MeasurementAxis& axis);

// Three-qubit Pauli parity words. On (|000> - |111>)/sqrt(2) the three
// words with two Y factors have eigenvalue +1 and the all-X word has -1,
// so the product of outcomes is fixed on every run; no assignment of
// predetermined per-qubit signs can satisfy all four at once.
enum class ParityWord { kXYY, kYXY, kYYX, kXXX };

// (|000> - |111>)/sqrt(2).
MultiQubitState ghz_state();

// The 8x8 Pauli product for the word.
CMatrix parity_operator(ParityWord which);

// Eigenvalue of the word on ghz_state(): +1, +1, +1, -1. Verifies the
// state is an exact eigenvector (residual <= 1e-12) before returning.
int ghz_parity(ParityWord which);

// Mermin combination
//   M = E(a1,b1,c1) + E(a1,b2,c2) + E(a2,b1,c2) - E(a2,b2,c1)
// with E the three-qubit correlation. Predetermined +-1 answers give
// |M| <= 2; ghz_state() reaches 4 when the four terms are its parity
// words (a = (y, x), b = (y, x), c = (x, y)).
double mermin(const MultiQubitState& state, const MeasurementAxis& a1,
              const MeasurementAxis& a2, const MeasurementAxis& b1,
              const MeasurementAxis& b2, const MeasurementAxis& c1,
              const MeasurementAxis& c2);

// Correction the receiver applies after a Bell-basis measurement on the
// sender's two qubits, for a shared Phi+ pair: Phi+ -> I, Psi+ -> X,
// Phi- -> Z, Psi- -> ZX. Accepts only the four Bell members of
// NamedState.
CMatrix teleport_correction(NamedState bell_outcome);

}  // namespace qq
