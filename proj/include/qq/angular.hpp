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

// Angular momentum in the |j, m> basis with m listed in descending order
// (+j first), hbar = 1 throughout.  Matrix representations for arbitrary
// half-integer j, Clebsch-Gordan tables built by the highest-weight /
// lowering construction with the Condon-Shortley phase (all coefficients
// real, highest-m1 coefficient of each j positive), Wigner rotation
// matrices, and closed-form spherical harmonics up to l = 3.

#include <array>
#include <cstddef>
#include <vector>

#include "qq/matrix.hpp"

namespace qq {

// Matrix representation of an angular momentum j (integer or half-integer)
// on the (2j+1)-dimensional space spanned by |j, m>, m = j, j-1, ..., -j.
struct JRep {
  double j = 0.0;
  CMatrix jz;       // diag(j, j-1, ..., -j)
  CMatrix jplus;    // <j,m+1|J+|j,m> = sqrt((j-m)(j+m+1))
  CMatrix jminus;   // <j,m-1|J-|j,m> = sqrt((j+m)(j-m+1))
  CMatrix jx;       // (J+ + J-)/2
  CMatrix jy;       // (J+ - J-)/(2i)
  CMatrix jsq;      // j(j+1) I

  std::size_t dim() const { return jz.rows(); }
};

// Builds the J matrices for a nonnegative integer or half-integer j.
// Throws std::invalid_argument otherwise.
JRep j_rep(double j);

// Clebsch-Gordan coefficients <j1,m1; j2,m2 | j,m> for fixed (j1, j2),
// built once and queried by quantum numbers.  All coefficients are real.
class CGTable {
 public:
  CGTable(double j1, double j2, std::vector<double> coeffs,
          std::size_t dim);

  double j1() const { return j1_; }
  double j2() const { return j2_; }

  // Dimension (2 j1 + 1)(2 j2 + 1) of the product space.
  std::size_t dim() const { return dim_; }

  // <j1,m1; j2,m2 | j,m>.  Returns 0 when m != m1 + m2, when j is
  // outside |j1-j2| .. j1+j2, or when any magnetic number is out of
  // range.  Throws std::invalid_argument if an argument is not an
  // integer or half-integer.
  double coefficient(double j, double m, double m1, double m2) const;

  // The coupled j values, descending from j1 + j2 to |j1 - j2|.
  std::vector<double> coupled_j() const;

  // Unitary change of basis: rows indexed by the uncoupled pairs
  // (m1, m2) (m1 descending, then m2 descending), columns indexed by
  // the coupled states (j descending, then m descending).
  CMatrix unitary() const;

  // Projector onto the total-angular-momentum-j subspace, expressed in
  // the uncoupled product basis.
  CMatrix projector(double j) const;

 private:
  std::size_t row_index(int tm1, int tm2) const;
  std::size_t col_index(int tj, int tm) const;

  double j1_ = 0.0;
  double j2_ = 0.0;
  int tj1_ = 0;  // 2 * j1
  int tj2_ = 0;  // 2 * j2
  std::size_t dim_ = 0;
  std::vector<double> coeffs_;  // row-major [uncoupled][coupled]
};

// Builds the full Clebsch-Gordan table for coupling j1 with j2.
CGTable clebsch_gordan(double j1, double j2);

// Wigner 3j symbol, as the standard phase/normalization rewrite of the
// Clebsch-Gordan coefficient <j1,m1; j2,m2 | j3,-m3>.  Returns 0 when
// selection rules (m1+m2+m3 = 0, triangle, |m_i| <= j_i) fail.
double wigner_3j(double j1, double j2, double j3, double m1, double m2,
                 double m3);

// Reduced rotation matrix d^(j)(beta) = exp(-i beta J_y), which is real
// in this basis; the matrix is returned with zero imaginary parts.
// Indices follow the |j, m> ordering (m descending).
CMatrix wigner_d(double j, double beta);

// Full rotation matrix for Euler angles (z-y-z convention):
// D^(j)(alpha, beta, gamma) = exp(-i alpha J_z) d^(j)(beta) exp(-i gamma J_z).
CMatrix wigner_D(double j, double alpha, double beta, double gamma);

// Rotates the coefficients of an l = 1 wavefunction expanded in
// {Y_1^1, Y_1^0, Y_1^-1}: c' = D^(1)(alpha, beta, gamma) c.
std::array<cplx, 3> rotate_l1_coeffs(const std::array<cplx, 3>& c,
                                     double alpha, double beta,
                                     double gamma);

// Spherical harmonic Y_l^m(theta, phi) for l <= 3, Condon-Shortley
// phase.  Throws std::invalid_argument for l > 3 or |m| > l.
cplx sph_harm(int l, int m, double theta, double phi);

}  // namespace qq
