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

#include <functional>
#include <vector>

namespace qq {

// Nodes and matching weights of a quadrature rule.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

// Gauss-Legendre rule on [-1, 1]: exact for polynomials up to degree 2n-1.
QuadRule gauss_legendre(int n);

// Gauss-Legendre mapped onto [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// Gauss-Laguerre rule with the e^{-x} weight folded into the weights:
// sum w_i f(x_i) approximates the integral of f(x) e^{-x} over [0, inf).
QuadRule gauss_laguerre(int n);

// Gauss-Laguerre with weights rescaled by e^{+x_i}, so
// sum w_i g(x_i) approximates the integral of g over [0, inf) directly and
// is exact whenever g is a polynomial times e^{-x}. The rescaling is done
// with a damped recurrence, so it stays finite even for hundreds of nodes
// where e^{x_i} alone would overflow.
QuadRule gauss_laguerre_scaled(int n);

}  // namespace qq
