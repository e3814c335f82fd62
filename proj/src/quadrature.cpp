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

#include "qq/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qq {
namespace {

// Legendre P_n(x) and its derivative by the three-term recurrence.
void legendre_pair(int n, double x, double* pn, double* dpn) {
  double p0 = 1.0, p1 = x;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  *pn = p1;
  *dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

// Damped Laguerre values M_k(x) = L_k(x) e^{-x/2}. The recurrence is
// linear, so the damping factor rides along unchanged; this keeps every
// intermediate finite even at the largest roots of high-order rules.
void laguerre_damped_pair(int n, double x, double* mn, double* mnm1) {
  double m0 = std::exp(-0.5 * x);
  double m1 = (1.0 - x) * m0;
  for (int k = 1; k < n; ++k) {
    const double m2 = ((2 * k + 1 - x) * m1 - k * m0) / (k + 1);
    m0 = m1;
    m1 = m2;
  }
  *mn = m1;
  *mnm1 = m0;
}

}  // namespace

QuadRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Roots come in +/- pairs; solve for the non-negative half.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, &pn, &dpn);
      const double dx = -pn / dpn;
      x += dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, &pn, &dpn);
    const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // force the exact midpoint
  return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
  QuadRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + hw * rule.nodes[i];
    rule.weights[i] *= hw;
  }
  return rule;
}

QuadRule gauss_laguerre(int n) {
  QuadRule rule = gauss_laguerre_scaled(n);
  // Undo the e^{+x} rescaling; safe only while x_i e^{-x_i} stays normal,
  // which holds for the node counts used here.
  for (int i = 0; i < n; ++i) {
    rule.weights[i] *= std::exp(-rule.nodes[i]);
  }
  return rule;
}

QuadRule gauss_laguerre_scaled(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    // Stroud-Secrest style initial guesses, refined by Newton.
    if (i == 0) {
      x = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      x += 15.0 / (1.0 + 2.5 * n);
    } else {
      x += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (x - rule.nodes[i - 2]);
    }
    double mn = 0.0, mnm1 = 0.0;
    for (int it = 0; it < 200; ++it) {
      laguerre_damped_pair(n, x, &mn, &mnm1);
      // x L_n' = n (L_n - L_{n-1}) gives the Newton step in damped form.
      const double dx = -mn * x / (n * (mn - mnm1));
      x += dx;
      if (std::fabs(dx) < 1e-14 * std::max(1.0, x)) break;
    }
    laguerre_damped_pair(n, x, &mn, &mnm1);
    rule.nodes[i] = x;
    // w_i e^{x_i} = x_i / (n M_{n-1}(x_i))^2 with the damping absorbed.
    rule.weights[i] = x / ((n * mnm1) * (n * mnm1));
  }
  return rule;
}

}  // namespace qq
