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

#include "qq/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qq/kernels.hpp"
#include "qq/tolerances.hpp"

namespace qq {
namespace {

using kernels::cplx;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxQlIterations = 64;

// NR-style SIGN: magnitude of a with the sign of b, where b == 0 counts as
// positive (std::copysign would inspect the sign bit of -0.0 instead).
double sign_like(double a, double b) {
  return b >= 0.0 ? std::fabs(a) : -std::fabs(a);
}

// Unitary Householder reduction of the Hermitian matrix in `a` (n x n,
// row-major) to tridiagonal form. If `q` is non-null the accumulated
// transformation lands there (q must come in as the identity). On return
// the tridiagonal matrix lives in `a`.
void householder_tridiag(cplx* a, cplx* q, std::size_t n) {
  if (n < 3) return;  // 1x1 and 2x2 are already tridiagonal
  std::vector<cplx> u(n), p(n), t(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t br = n - k - 1;  // trailing block size
    // Column below the diagonal: x_i = a(k+1+i, k).
    double sigma_tail = 0.0;
    for (std::size_t i = 0; i < br; ++i) {
      u[i] = a[(k + 1 + i) * n + k];
      if (i > 0) sigma_tail += std::norm(u[i]);
    }
    if (sigma_tail == 0.0) continue;  // column already tridiagonal
    const double xnorm = std::sqrt(std::norm(u[0]) + sigma_tail);
    const cplx phase =
        (u[0] == cplx{0.0, 0.0}) ? cplx{1.0, 0.0} : u[0] / std::abs(u[0]);
    const cplx alpha = -phase * xnorm;
    u[0] -= alpha;  // u = x - alpha e1; |u0| = |x0| + |x|, no cancellation
    const double beta = 2.0 / (std::norm(u[0]) + sigma_tail);

    // Rank-2 update of the trailing block B -= u w^dag + w u^dag with
    // w = beta B u - (beta^2/2) (u^dag B u) u, which realises H B H for
    // the reflector H = I - beta u u^dag.
    cplx* block = a + (k + 1) * n + (k + 1);
    kernels::matvec_strided(block, n, u.data(), p.data(), br, br);
    cplx udp{0.0, 0.0};
    for (std::size_t i = 0; i < br; ++i) {
      p[i] *= beta;
      udp += std::conj(u[i]) * p[i];
    }
    const double kappa = 0.5 * beta * udp.real();  // u^dag B u is real
    for (std::size_t i = 0; i < br; ++i) p[i] -= kappa * u[i];
    kernels::her2_update(block, n, br, u.data(), p.data());

    // The transformed column k has a single subdiagonal entry alpha.
    a[(k + 1) * n + k] = alpha;
    a[k * n + (k + 1)] = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a[i * n + k] = cplx{0.0, 0.0};
      a[k * n + i] = cplx{0.0, 0.0};
    }

    if (q != nullptr) {
      // Q <- Q H applied to columns k+1..n-1: Q -= beta (Q u) u^dag.
      kernels::matvec_strided(q + (k + 1), n, u.data(), t.data(), n, br);
      kernels::rank1_update(q + (k + 1), n, n, br, cplx{beta, 0.0}, t.data(),
                            u.data());
    }
  }
}

// Implicit QL with Wilkinson shifts on a real symmetric tridiagonal matrix
// (diagonal d, subdiagonal e with e[n-1] a zero sentinel). If `z` is
// non-null every rotation is applied to its columns as well.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, cplx* z,
                std::size_t n) {
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      // Locate the first negligible subdiagonal element at or after l.
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
        ++m;
      }
      if (m == l) break;  // d[l] has converged
      if (++iter > kMaxQlIterations) {
        throw std::runtime_error(
            "eigh: QL iteration failed to converge; matrix may be "
            "ill-conditioned");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool recovered = false;
      for (long long i = static_cast<long long>(m) - 1;
           i >= static_cast<long long>(l); --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {  // rotation annihilated early: restart the sweep
          d[i + 1] -= p;
          e[m] = 0.0;
          recovered = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          kernels::givens_cols(z, n, n, static_cast<std::size_t>(i), c, s);
        }
      }
      if (recovered) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

void check_input(const CMatrix& m) {
  if (!m.square() || m.rows() == 0) {
    throw std::invalid_argument("eigh: matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermiticity_error() > tol::HERM_TOL * scale) {
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  }
}

// Shared driver. `want_vectors` selects whether the unitary is accumulated.
EigenSystem decompose(const CMatrix& m, bool want_vectors) {
  check_input(m);
  const std::size_t n = m.rows();

  // Work on the Hermitized copy so the tiny admissible asymmetry of the
  // input cannot leak into the iteration.
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }

  std::vector<cplx> q;
  cplx* qptr = nullptr;
  if (want_vectors) {
    q.assign(n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) q[i * n + i] = cplx{1.0, 0.0};
    qptr = q.data();
  }

  householder_tridiag(a.data(), qptr, n);

  // Diagonal phase transformation S = diag(s_k) with s_0 = 1 and
  // s_{k+1} = s_k e_k / |e_k| turns the complex subdiagonal real while
  // keeping S^dag T S similar to T; the phases fold into the columns of Q.
  std::vector<double> d(n), e(n, 0.0);
  cplx s{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a[i * n + i].real();
    if (i + 1 < n) {
      const cplx esub = a[(i + 1) * n + i];
      const double mag = std::abs(esub);
      e[i] = mag;
      if (mag > 0.0) s *= esub / mag;
      if (qptr != nullptr && s != cplx{1.0, 0.0}) {
        for (std::size_t row = 0; row < n; ++row) q[row * n + (i + 1)] *= s;
      }
    }
  }

  tridiag_ql(d, e, qptr, n);

  // Ascending order, reordering the eigenvector columns to match.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t x, std::size_t y) { return d[x] < d[y]; });

  EigenSystem out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
  if (want_vectors) {
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t src = order[k];
      for (std::size_t row = 0; row < n; ++row) {
        out.vectors(row, k) = q[row * n + src];
      }
    }
  }
  return out;
}

}  // namespace

EigenSystem eigh(const CMatrix& m) { return decompose(m, true); }

std::vector<double> eigh_values(const CMatrix& m) {
  return decompose(m, false).values;
}

}  // namespace qq
