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

#include <complex>
#include <cstddef>

// Low-level dense kernels. Every kernel exists twice: a serial reference
// (*_serial) and an OpenMP variant (*_omp). The unsuffixed entry points
// dispatch through the active policy; tests pin the policy to compare the
// two paths and the benchmark tool times them against each other.

namespace qq::kernels {

using cplx = std::complex<double>;

enum class Policy { Auto, ForceSerial, ForceParallel };

/// Process-wide dispatch policy. Not thread safe to change concurrently
/// with running kernels; set it once at startup or around a test block.
void set_policy(Policy p);
Policy policy();

/// Work size above which Auto prefers the OpenMP variant.
inline constexpr std::size_t kParallelCutoff = 1u << 14;

// C = A * B, row-major, A is n x k, B is k x m, C is n x m.
void matmul_serial(const cplx* a, const cplx* b, cplx* c,
                   std::size_t n, std::size_t k, std::size_t m);
void matmul_omp(const cplx* a, const cplx* b, cplx* c,
                std::size_t n, std::size_t k, std::size_t m);
void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t n, std::size_t k, std::size_t m);

// y = A * x, A row-major n x m.
void matvec_serial(const cplx* a, const cplx* x, cplx* y,
                   std::size_t n, std::size_t m);
void matvec_omp(const cplx* a, const cplx* x, cplx* y,
                std::size_t n, std::size_t m);
void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t n, std::size_t m);

// C = A (x) B with the standard ordering
// C[i*q + k, j*q + l] = A[i,j] * B[k,l], q = rows(B)|cols(B).
void kron_serial(const cplx* a, std::size_t ar, std::size_t ac,
                 const cplx* b, std::size_t br, std::size_t bc, cplx* c);
void kron_omp(const cplx* a, std::size_t ar, std::size_t ac,
              const cplx* b, std::size_t br, std::size_t bc, cplx* c);
void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* c);

// Hermitian rank-2 update A -= u w^dag + w u^dag on an n x n row-major
// block with leading dimension ld. Only used on full Hermitian blocks.
void her2_update_serial(cplx* a, std::size_t ld, std::size_t n,
                        const cplx* u, const cplx* w);
void her2_update_omp(cplx* a, std::size_t ld, std::size_t n,
                     const cplx* u, const cplx* w);
void her2_update(cplx* a, std::size_t ld, std::size_t n,
                 const cplx* u, const cplx* w);

// y = A * x where A is an n x m block with leading dimension ld.
void matvec_strided_serial(const cplx* a, std::size_t ld, const cplx* x,
                           cplx* y, std::size_t n, std::size_t m);
void matvec_strided_omp(const cplx* a, std::size_t ld, const cplx* x,
                        cplx* y, std::size_t n, std::size_t m);
void matvec_strided(const cplx* a, std::size_t ld, const cplx* x, cplx* y,
                    std::size_t n, std::size_t m);

// Rank-1 update A -= s * t u^dag on an n x m block with leading dimension ld.
void rank1_update_serial(cplx* a, std::size_t ld, std::size_t n,
                         std::size_t m, cplx s, const cplx* t, const cplx* u);
void rank1_update_omp(cplx* a, std::size_t ld, std::size_t n, std::size_t m,
                      cplx s, const cplx* t, const cplx* u);
void rank1_update(cplx* a, std::size_t ld, std::size_t n, std::size_t m,
                  cplx s, const cplx* t, const cplx* u);

// Real Givens rotation applied to columns (j, j+1) of an n x lc row-major
// matrix: for every row, (zj', zj1') = (c zj - s zj1, s zj + c zj1).
void givens_cols_serial(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                        double c, double s);
void givens_cols_omp(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                     double c, double s);
void givens_cols(cplx* z, std::size_t lc, std::size_t n, std::size_t j,
                 double c, double s);

/// Pairwise (cascade) summation, the reduction used by the Monte Carlo
/// estimators. More accurate than a running sum for large n.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace qq::kernels
