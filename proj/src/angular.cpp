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

#include "qq/angular.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qq/expm.hpp"

namespace qq {

namespace {

// Doubles the quantum number and checks it is an integer or half-integer.
int twice(double x, const char* what) {
  const double t = 2.0 * x;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-6) {
    throw std::invalid_argument(std::string(what) +
                                " must be an integer or half-integer");
  }
  return int(r);
}

double lower_factor(int tj, int tm) {
  // sqrt((j + m)(j - m + 1)) with quantum numbers passed as 2j, 2m.
  return std::sqrt(0.25 * double(tj + tm) * double(tj - tm + 2));
}

}  // namespace

JRep j_rep(double j) {
  const int tj = twice(j, "j");
  if (tj < 0) throw std::invalid_argument("j must be nonnegative");
  const std::size_t dim = std::size_t(tj) + 1;

  JRep rep;
  rep.j = 0.5 * tj;
  rep.jz = CMatrix(dim, dim);
  rep.jplus = CMatrix(dim, dim);
  rep.jminus = CMatrix(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const int tm = tj - 2 * int(k);  // m at row k, descending from +j
    rep.jz(k, k) = cplx{0.5 * tm, 0.0};
    if (k > 0) {
      // J+ |j,m> = sqrt((j-m)(j+m+1)) |j,m+1>
      rep.jplus(k - 1, k) =
          cplx{std::sqrt(0.25 * double(tj - tm) * double(tj + tm + 2)), 0.0};
    }
    if (k + 1 < dim) {
      rep.jminus(k + 1, k) = cplx{lower_factor(tj, tm), 0.0};
    }
  }
  rep.jx = 0.5 * (rep.jplus + rep.jminus);
  rep.jy = cplx{0.0, -0.5} * (rep.jplus - rep.jminus);
  rep.jsq = CMatrix::diagonal(
      std::vector<double>(dim, rep.j * (rep.j + 1.0)));
  return rep;
}

CGTable::CGTable(double j1, double j2, std::vector<double> coeffs,
                 std::size_t dim)
    : j1_(j1),
      j2_(j2),
      tj1_(twice(j1, "j1")),
      tj2_(twice(j2, "j2")),
      dim_(dim),
      coeffs_(std::move(coeffs)) {}

std::size_t CGTable::row_index(int tm1, int tm2) const {
  const std::size_t i1 = std::size_t(tj1_ - tm1) / 2;
  const std::size_t i2 = std::size_t(tj2_ - tm2) / 2;
  return i1 * (std::size_t(tj2_) + 1) + i2;
}

std::size_t CGTable::col_index(int tj, int tm) const {
  // Columns list j descending from j1+j2; block for coupled j starts
  // after the blocks of all larger j values.
  std::size_t start = 0;
  for (int t = tj1_ + tj2_; t > tj; t -= 2) start += std::size_t(t) + 1;
  return start + std::size_t(tj - tm) / 2;
}

double CGTable::coefficient(double j, double m, double m1, double m2) const {
  const int tj = twice(j, "j");
  const int tm = twice(m, "m");
  const int tm1 = twice(m1, "m1");
  const int tm2 = twice(m2, "m2");
  if (tm != tm1 + tm2) return 0.0;
  if (tj < std::abs(tj1_ - tj2_) || tj > tj1_ + tj2_) return 0.0;
  if ((tj1_ + tj2_ - tj) % 2 != 0) return 0.0;
  if (std::abs(tm) > tj || (tj - tm) % 2 != 0) return 0.0;
  if (std::abs(tm1) > tj1_ || (tj1_ - tm1) % 2 != 0) return 0.0;
  if (std::abs(tm2) > tj2_ || (tj2_ - tm2) % 2 != 0) return 0.0;
  return coeffs_[row_index(tm1, tm2) * dim_ + col_index(tj, tm)];
}

std::vector<double> CGTable::coupled_j() const {
  std::vector<double> js;
  for (int tj = tj1_ + tj2_; tj >= std::abs(tj1_ - tj2_); tj -= 2) {
    js.push_back(0.5 * tj);
  }
  return js;
}

CMatrix CGTable::unitary() const {
  CMatrix u(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      u(r, c) = cplx{coeffs_[r * dim_ + c], 0.0};
    }
  }
  return u;
}

CMatrix CGTable::projector(double j) const {
  const int tj = twice(j, "j");
  if (tj < std::abs(tj1_ - tj2_) || tj > tj1_ + tj2_ ||
      (tj1_ + tj2_ - tj) % 2 != 0) {
    throw std::invalid_argument("j is not in the coupled decomposition");
  }
  CMatrix p(dim_, dim_);
  for (int tm = tj; tm >= -tj; tm -= 2) {
    const std::size_t c = col_index(tj, tm);
    for (std::size_t r1 = 0; r1 < dim_; ++r1) {
      for (std::size_t r2 = 0; r2 < dim_; ++r2) {
        p(r1, r2) += cplx{coeffs_[r1 * dim_ + c] * coeffs_[r2 * dim_ + c],
                          0.0};
      }
    }
  }
  return p;
}

CGTable clebsch_gordan(double j1, double j2) {
  const int tj1 = twice(j1, "j1");
  const int tj2 = twice(j2, "j2");
  if (tj1 < 0 || tj2 < 0) {
    throw std::invalid_argument("j1 and j2 must be nonnegative");
  }
  const std::size_t d1 = std::size_t(tj1) + 1;
  const std::size_t d2 = std::size_t(tj2) + 1;
  const std::size_t dim = d1 * d2;

  const auto row = [&](int tm1, int tm2) {
    return (std::size_t(tj1 - tm1) / 2) * d2 + std::size_t(tj2 - tm2) / 2;
  };

  // Column-major scratch: one real vector over the product basis per
  // coupled state, filled in column order (j descending, m descending).
  std::vector<std::vector<double>> columns;
  columns.reserve(dim);

  // Earlier top states |j'', m = j''> grouped by tm for Gram-Schmidt.
  for (int tj = tj1 + tj2; tj >= std::abs(tj1 - tj2); tj -= 2) {
    std::vector<double> top(dim, 0.0);
    if (tj == tj1 + tj2) {
      top[row(tj1, tj2)] = 1.0;  // highest weight: |j1,j1> |j2,j2>
    } else {
      // The m = j subspace, minus the span of the |j'', j> states with
      // j'' > j already built (one lowering step into each column block).
      std::vector<const std::vector<double>*> prior;
      std::size_t start = 0;
      for (int t = tj1 + tj2; t > tj; t -= 2) {
        prior.push_back(&columns[start + std::size_t(t - tj) / 2]);
        start += std::size_t(t) + 1;
      }
      // Enumerate product states with m1 + m2 = j, m1 descending, and
      // pick the Gram-Schmidt residual of largest norm for stability.
      double best_norm2 = -1.0;
      std::vector<double> best;
      for (int tm1 = std::min(tj1, tj + tj2); tm1 >= -tj1; tm1 -= 2) {
        const int tm2 = tj - tm1;
        if (std::abs(tm2) > tj2) continue;
        std::vector<double> cand(dim, 0.0);
        cand[row(tm1, tm2)] = 1.0;
        for (const auto* p : prior) {
          double dot = 0.0;
          for (std::size_t i = 0; i < dim; ++i) dot += (*p)[i] * cand[i];
          for (std::size_t i = 0; i < dim; ++i) cand[i] -= dot * (*p)[i];
        }
        double n2 = 0.0;
        for (double v : cand) n2 += v * v;
        if (n2 > best_norm2) {
          best_norm2 = n2;
          best = std::move(cand);
        }
      }
      const double inv = 1.0 / std::sqrt(best_norm2);
      for (double& v : best) v *= inv;
      // Condon-Shortley: the coefficient on the highest-m1 product
      // state (m1 = j1, m2 = j - j1) is positive.
      if (best[row(tj1, tj - tj1)] < 0.0) {
        for (double& v : best) v = -v;
      }
      top = std::move(best);
    }
    columns.push_back(top);

    // Lower through the block: |j, m-1> = J- |j, m> / sqrt((j+m)(j-m+1)).
    for (int tm = tj; tm > -tj; tm -= 2) {
      const std::vector<double>& cur = columns.back();
      std::vector<double> next(dim, 0.0);
      for (int tm1 = tj1; tm1 >= -tj1; tm1 -= 2) {
        for (int tm2 = tj2; tm2 >= -tj2; tm2 -= 2) {
          const double c = cur[row(tm1, tm2)];
          if (c == 0.0) continue;
          if (tm1 > -tj1) {
            next[row(tm1 - 2, tm2)] += c * lower_factor(tj1, tm1);
          }
          if (tm2 > -tj2) {
            next[row(tm1, tm2 - 2)] += c * lower_factor(tj2, tm2);
          }
        }
      }
      const double inv = 1.0 / lower_factor(tj, tm);
      for (double& v : next) v *= inv;
      columns.push_back(std::move(next));
    }
  }

  std::vector<double> coeffs(dim * dim, 0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) {
      coeffs[r * dim + c] = columns[c][r];
    }
  }
  return CGTable(j1, j2, std::move(coeffs), dim);
}

double wigner_3j(double j1, double j2, double j3, double m1, double m2,
                 double m3) {
  const int tj1 = twice(j1, "j1");
  const int tj2 = twice(j2, "j2");
  const int tj3 = twice(j3, "j3");
  const int tm1 = twice(m1, "m1");
  const int tm2 = twice(m2, "m2");
  const int tm3 = twice(m3, "m3");
  if (tm1 + tm2 + tm3 != 0) return 0.0;
  if (tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tj3) % 2 != 0) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) {
    return 0.0;
  }
  const CGTable table = clebsch_gordan(j1, j2);
  const double cg = table.coefficient(j3, -m3, m1, m2);
  // (-1)^(j1 - j2 - m3): the exponent is an integer whenever the
  // selection rules above hold.
  const int expo = (tj1 - tj2 - tm3) / 2;
  const double phase = (expo % 2 == 0) ? 1.0 : -1.0;
  return phase * cg / std::sqrt(double(tj3) + 1.0);
}

CMatrix wigner_d(double j, double beta) {
  const JRep rep = j_rep(j);
  CMatrix d = expm_i(rep.jy, beta);
  // exp(-i beta J_y) is exactly real in this basis (i J_y is a real
  // antisymmetric matrix); drop the numerical-noise imaginary parts.
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      d(r, c) = cplx{d(r, c).real(), 0.0};
    }
  }
  return d;
}

CMatrix wigner_D(double j, double alpha, double beta, double gamma) {
  const int tj = twice(j, "j");
  CMatrix d = wigner_d(j, beta);
  const std::size_t dim = d.rows();
  for (std::size_t r = 0; r < dim; ++r) {
    const double mp = 0.5 * (tj - 2 * int(r));
    for (std::size_t c = 0; c < dim; ++c) {
      const double m = 0.5 * (tj - 2 * int(c));
      d(r, c) *= std::polar(1.0, -mp * alpha) * std::polar(1.0, -m * gamma);
    }
  }
  return d;
}

std::array<cplx, 3> rotate_l1_coeffs(const std::array<cplx, 3>& c,
                                     double alpha, double beta,
                                     double gamma) {
  const CMatrix d = wigner_D(1.0, alpha, beta, gamma);
  std::array<cplx, 3> out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 0; k < 3; ++k) out[r] += d(r, k) * c[k];
  }
  return out;
}

cplx sph_harm(int l, int m, double theta, double phi) {
  if (l < 0 || l > 3 || std::abs(m) > l) {
    throw std::invalid_argument("sph_harm supports l <= 3 with |m| <= l");
  }
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  double mag = 0.0;
  switch (4 * l + std::abs(m)) {
    case 0:  // l = 0
      mag = std::sqrt(1.0 / (4.0 * M_PI));
      break;
    case 4:  // l = 1, m = 0
      mag = std::sqrt(3.0 / (4.0 * M_PI)) * ct;
      break;
    case 5:  // l = 1, |m| = 1
      mag = -std::sqrt(3.0 / (8.0 * M_PI)) * st;
      break;
    case 8:  // l = 2, m = 0
      mag = std::sqrt(5.0 / (16.0 * M_PI)) * (3.0 * ct * ct - 1.0);
      break;
    case 9:  // l = 2, |m| = 1
      mag = -std::sqrt(15.0 / (8.0 * M_PI)) * st * ct;
      break;
    case 10:  // l = 2, |m| = 2
      mag = std::sqrt(15.0 / (32.0 * M_PI)) * st * st;
      break;
    case 12:  // l = 3, m = 0
      mag = std::sqrt(7.0 / (16.0 * M_PI)) * (5.0 * ct * ct - 3.0) * ct;
      break;
    case 13:  // l = 3, |m| = 1
      mag = -std::sqrt(21.0 / (64.0 * M_PI)) * st * (5.0 * ct * ct - 1.0);
      break;
    case 14:  // l = 3, |m| = 2
      mag = std::sqrt(105.0 / (32.0 * M_PI)) * st * st * ct;
      break;
    case 15:  // l = 3, |m| = 3
      mag = -std::sqrt(35.0 / (64.0 * M_PI)) * st * st * st;
      break;
    default:
      throw std::invalid_argument("unreachable spherical harmonic index");
  }
  if (m < 0) {
    // Y_l^{-|m|} = (-1)^{|m|} conj(Y_l^{|m|}); the magnitude above
    // already carries the Condon-Shortley sign of the +|m| harmonic.
    const double sign = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
    mag *= sign;
  }
  return mag * std::polar(1.0, double(m) * phi);
}

}  // namespace qq
