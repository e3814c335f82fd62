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

#include "qq/expm.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace qq {
namespace {

// Max row sum (induced infinity norm), used to pick the scaling power.
double inf_norm(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

CMatrix expm_i(const EigenSystem& es, double t) {
  const std::size_t n = es.values.size();
  CMatrix d(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    d(k, k) = std::exp(std::complex<double>{0.0, -es.values[k] * t});
  }
  return es.vectors * d * es.vectors.adjoint();
}

CMatrix expm_i(const CMatrix& h, double t) { return expm_i(eigh(h), t); }

CMatrix expm(const CMatrix& a) {
  if (!a.square()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  const std::size_t n = a.rows();

  // Scale so the norm is at most 1/2; the series then converges fast.
  const double norm = inf_norm(a);
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  CMatrix b = a;
  b *= std::complex<double>{std::ldexp(1.0, -squarings), 0.0};

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  constexpr int kMaxTerms = 64;
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = term * b;
    term *= std::complex<double>{1.0 / k, 0.0};
    sum += term;
    if (term.max_abs() <= 1e-17 * std::max(1.0, sum.max_abs())) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("expm: Taylor series failed to converge");
  }

  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

}  // namespace qq
