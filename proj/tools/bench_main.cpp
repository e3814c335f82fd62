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

// Times the serial kernels against their OpenMP variants on the shapes the
// library actually runs: dense products, Kronecker expansion, and the
// rank-2 update at the heart of the tridiagonal reduction.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qq/bell.hpp"
#include "qq/kernels.hpp"
#include "qq/rng.hpp"

namespace {

using qq::kernels::cplx;
using clock_type = std::chrono::steady_clock;

std::vector<cplx> random_block(qq::Rng& rng, std::size_t n) {
  std::vector<cplx> out(n);
  for (auto& v : out) v = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return out;
}

double time_of(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = clock_type::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const char* name, std::size_t n, double serial, double parallel) {
  std::printf("%-14s n=%5zu   serial %10.6f s   openmp %10.6f s   speedup %5.2fx\n",
              name, n, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("Built without OpenMP; the parallel variants run serially.\n");
#endif

  qq::Rng rng(qq::Rng::default_seed(), 0);

  for (std::size_t n : {128u, 256u, 512u}) {
    const auto a = random_block(rng, n * n);
    const auto b = random_block(rng, n * n);
    std::vector<cplx> c(n * n);
    const int reps = n <= 256 ? 5 : 2;
    const double ts = time_of(
        [&] { qq::kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n); },
        reps);
    const double tp = time_of(
        [&] { qq::kernels::matmul_omp(a.data(), b.data(), c.data(), n, n, n); },
        reps);
    report("matmul", n, ts, tp);
  }

  for (std::size_t n : {512u, 1024u, 2048u}) {
    const auto a = random_block(rng, n * n);
    const auto x = random_block(rng, n);
    std::vector<cplx> y(n);
    const double ts = time_of(
        [&] { qq::kernels::matvec_serial(a.data(), x.data(), y.data(), n, n); },
        20);
    const double tp = time_of(
        [&] { qq::kernels::matvec_omp(a.data(), x.data(), y.data(), n, n); },
        20);
    report("matvec", n, ts, tp);
  }

  for (std::size_t n : {16u, 32u, 64u}) {
    const auto a = random_block(rng, n * n);
    const auto b = random_block(rng, n * n);
    std::vector<cplx> c(n * n * n * n);
    const double ts = time_of(
        [&] {
          qq::kernels::kron_serial(a.data(), n, n, b.data(), n, n, c.data());
        },
        5);
    const double tp = time_of(
        [&] {
          qq::kernels::kron_omp(a.data(), n, n, b.data(), n, n, c.data());
        },
        5);
    report("kron", n, ts, tp);
  }

  for (std::size_t n : {512u, 1024u, 2048u}) {
    auto a = random_block(rng, n * n);
    const auto u = random_block(rng, n);
    const auto w = random_block(rng, n);
    const double ts = time_of(
        [&] {
          qq::kernels::her2_update_serial(a.data(), n, n, u.data(), w.data());
        },
        10);
    const double tp = time_of(
        [&] {
          qq::kernels::her2_update_omp(a.data(), n, n, u.data(), w.data());
        },
        10);
    report("her2_update", n, ts, tp);
  }

  return 0;
}
