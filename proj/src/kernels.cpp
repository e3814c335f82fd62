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

#include "qq/kernels.hpp"

#include <vector>

namespace qq::kernels {

namespace {
Policy g_policy = Policy::Auto;

bool use_parallel(std::size_t work) {
#ifdef _OPENMP
  switch (g_policy) {
    case Policy::ForceSerial:
      return false;
    case Policy::ForceParallel:
      return true;
    case Policy::Auto:
      return work >= kParallelCutoff;
  }
  return false;
#else
  (void)work;
  return false;
#endif
}
}  // namespace

void set_policy(Policy p) { g_policy = p; }
Policy policy() { return g_policy; }

void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) ci[j] = cplx{0.0, 0.0};
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{0.0, 0.0}) continue;
      const cplx* bp = b + p * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
    }
  }
}

void matmul_omp(const cplx* a, const cplx* b, cplx* c,
                std::size_t n, std::size_t k, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cplx* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) ci[j] = cplx{0.0, 0.0};
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{0.0, 0.0}) continue;
      const cplx* bp = b + p * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
    }
  }
}

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t n, std::size_t k, std::size_t m) {
  if (use_parallel(n * k * m)) {
    matmul_omp(a, b, c, n, k, m);
  } else {
    matmul_serial(a, b, c, n, k, m);
  }
}

void matvec_serial(const cplx* a, const cplx* x, cplx* y,
                   std::size_t n, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    const cplx* ai = a + i * m;
    for (std::size_t j = 0; j < m; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

void matvec_omp(const cplx* a, const cplx* x, cplx* y,
                std::size_t n, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cplx acc{0.0, 0.0};
    const cplx* ai = a + i * m;
    for (std::size_t j = 0; j < m; ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t n, std::size_t m) {
  if (use_parallel(n * m)) {
    matvec_omp(a, x, y, n, m);
  } else {
    matvec_serial(a, x, y, n, m);
  }
}

void kron_serial(const cplx* a, std::size_t ar, std::size_t ac,
                 const cplx* b, std::size_t br, std::size_t bc, cplx* c) {
  const std::size_t cc = ac * bc;
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t p = 0; p < br; ++p) {
      cplx* crow = c + (i * br + p) * cc;
      const cplx* brow = b + p * bc;
      for (std::size_t j = 0; j < ac; ++j) {
        const cplx aij = a[i * ac + j];
        cplx* dst = crow + j * bc;
        for (std::size_t q = 0; q < bc; ++q) dst[q] = aij * brow[q];
      }
    }
  }
}

void kron_omp(const cplx* a, std::size_t ar, std::size_t ac,
              const cplx* b, std::size_t br, std::size_t bc, cplx* c) {
  const std::size_t cc = ac * bc;
  const std::size_t rows = ar * br;
#pragma omp parallel for schedule(static)
  for (long long rr = 0; rr < static_cast<long long>(rows); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    const std::size_t i = r / br;
    const std::size_t p = r % br;
    cplx* crow = c + r * cc;
    const cplx* brow = b + p * bc;
    for (std::size_t j = 0; j < ac; ++j) {
      const cplx aij = a[i * ac + j];
      cplx* dst = crow + j * bc;
      for (std::size_t q = 0; q < bc; ++q) dst[q] = aij * brow[q];
    }
  }
}

void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* c) {
  if (use_parallel(ar * ac * br * bc)) {
    kron_omp(a, ar, ac, b, br, bc, c);
  } else {
    kron_serial(a, ar, ac, b, br, bc, c);
  }
}

void her2_update_serial(cplx* a, std::size_t ld, std::size_t n,
                        const cplx* u, const cplx* w) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* ai = a + i * ld;
    const cplx ui = u[i];
    const cplx wi = w[i];
    for (std::size_t j = 0; j < n; ++j) {
      ai[j] -= ui * std::conj(w[j]) + wi * std::conj(u[j]);
    }
  }
}

void her2_update_omp(cplx* a, std::size_t ld, std::size_t n,
                     const cplx* u, const cplx* w) {
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cplx* ai = a + i * ld;
    const cplx ui = u[i];
    const cplx wi = w[i];
    for (std::size_t j = 0; j < n; ++j) {
      ai[j] -= ui * std::conj(w[j]) + wi * std::conj(u[j]);
    }
  }
}

void her2_update(cplx* a, std::size_t ld, std::size_t n,
                 const cplx* u, const cplx* w) {
  if (use_parallel(n * n)) {
    her2_update_omp(a, ld, n, u, w);
  } else {
    her2_update_serial(a, ld, n, u, w);
  }
}

void matvec_strided_serial(const cplx* a, std::size_t ld, const cplx* x,
                           cplx* y, std::size_t n, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* row = a + i * ld;
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_strided_omp(const cplx* a, std::size_t ld, const cplx* x, cplx* y,
                        std::size_t n, std::size_t m) {
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const cplx* row = a + static_cast<std::size_t>(ii) * ld;
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) acc += row[j] * x[j];
    y[ii] = acc;
  }
}

void matvec_strided(const cplx* a, std::size_t ld, const cplx* x, cplx* y,
                    std::size_t n, std::size_t m) {
  if (use_parallel(n * m)) {
    matvec_strided_omp(a, ld, x, y, n, m);
  } else {
    matvec_strided_serial(a, ld, x, y, n, m);
  }
}

void rank1_update_serial(cplx* a, std::size_t ld, std::size_t n, std::size_t m,
                         cplx s, const cplx* t, const cplx* u) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = a + i * ld;
    const cplx st = s * t[i];
    for (std::size_t j = 0; j < m; ++j) row[j] -= st * std::conj(u[j]);
  }
}

void rank1_update_omp(cplx* a, std::size_t ld, std::size_t n, std::size_t m,
                      cplx s, const cplx* t, const cplx* u) {
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    cplx* row = a + static_cast<std::size_t>(ii) * ld;
    const cplx st = s * t[ii];
    for (std::size_t j = 0; j < m; ++j) row[j] -= st * std::conj(u[j]);
  }
}

void rank1_update(cplx* a, std::size_t ld, std::size_t n, std::size_t m,
                  cplx s, const cplx* t, const cplx* u) {
  if (use_parallel(n * m)) {
    rank1_update_omp(a, ld, n, m, s, t, u);
  } else {
    rank1_update_serial(a, ld, n, m, s, t, u);
  }
}

void givens_cols_serial(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                        double c, double s) {
  for (std::size_t row = 0; row < n; ++row) {
    cplx* p = z + row * lc + j;
    const cplx f = p[1];
    p[1] = s * p[0] + c * f;
    p[0] = c * p[0] - s * f;
  }
}

void givens_cols_omp(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                     double c, double s) {
#pragma omp parallel for schedule(static)
  for (long long row = 0; row < static_cast<long long>(n); ++row) {
    cplx* p = z + static_cast<std::size_t>(row) * lc + j;
    const cplx f = p[1];
    p[1] = s * p[0] + c * f;
    p[0] = c * p[0] - s * f;
  }
}

void givens_cols(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                 double c, double s) {
  // One rotation touches only 2n values, so the parallel path engages
  // only for very large bases; the cutoff is shared with the other kernels.
  if (use_parallel(2 * n)) {
    givens_cols_omp(z, lc, n, j, c, s);
  } else {
    givens_cols_serial(z, lc, n, j, c, s);
  }
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

}  // namespace qq::kernels
