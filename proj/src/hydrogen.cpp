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

#include "qq/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qq/angular.hpp"
#include "qq/quadrature.hpp"

namespace qq {

namespace {

constexpr int kRadialNodes = 200;

void check_level(int n, int l, int z) {
  if (n < 1) {
    throw std::invalid_argument("principal quantum number must be >= 1");
  }
  if (l < 0 || l >= n) {
    throw std::invalid_argument("orbital quantum number must satisfy 0 <= l < n");
  }
  if (z < 1) {
    throw std::invalid_argument("nuclear charge must be >= 1");
  }
}

// Relative threshold separating "degenerate" from "merely close"
// unperturbed levels, scaled by the spectral magnitude.
double degeneracy_tolerance(const EigenSystem& eigen) {
  double scale = 1.0;
  for (double e : eigen.values) scale = std::max(scale, std::abs(e));
  return 1e-9 * scale;
}

}  // namespace

// ---------------------------------------------------------------------------
// Levels.
// ---------------------------------------------------------------------------

double hydrogen_energy(int n, int z) {
  check_level(n, 0, z);
  return -0.5 * static_cast<double>(z) * z / (static_cast<double>(n) * n);
}

int shell_degeneracy(int n) {
  check_level(n, 0, 1);
  return n * n;
}

HydrogenLevel::HydrogenLevel(int n_in, int l_in, int z_in)
    : n(n_in), l(l_in), z(z_in) {
  check_level(n, l, z);
}

double HydrogenLevel::energy() const { return hydrogen_energy(n, z); }

// ---------------------------------------------------------------------------
// Radial wavefunctions.
// ---------------------------------------------------------------------------

RadialFunction::RadialFunction(int n, int l, int z) : n_(n), l_(l), z_(z) {
  check_level(n, l, z);
  const double beta = 2.0 * z / n;  // decay rate of R^2 in r
  norm_ = std::exp(1.5 * std::log(beta) +
                   0.5 * (std::lgamma(n - l) - std::log(2.0 * n) -
                          std::lgamma(n + l + 1)));
  // Substituting u = beta r maps integrands e^{-beta r} poly(r) onto
  // the native Gauss-Laguerre weight, so the rule is exact for all
  // same-state matrix elements of polynomial observables.
  const QuadRule rule = gauss_laguerre_scaled(kRadialNodes);
  nodes_.resize(rule.nodes.size());
  weights_.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    nodes_[i] = rule.nodes[i] / beta;
    weights_[i] = rule.weights[i] / beta;
  }
}

double RadialFunction::operator()(double r) const {
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const double x = 2.0 * z_ * r / n_;
  const unsigned k = static_cast<unsigned>(n_ - l_ - 1);
  const unsigned alpha = static_cast<unsigned>(2 * l_ + 1);
  return norm_ * std::exp(-0.5 * x) * std::pow(x, l_) *
         std::assoc_laguerre(k, alpha, x);
}

double RadialFunction::derivative(double r) const {
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const double beta = 2.0 * z_ / n_;
  const double x = beta * r;
  const unsigned k = static_cast<unsigned>(n_ - l_ - 1);
  const unsigned alpha = static_cast<unsigned>(2 * l_ + 1);
  const double lag = std::assoc_laguerre(k, alpha, x);
  // d/dx L^a_k(x) = -L^{a+1}_{k-1}(x).
  const double dlag = k == 0 ? 0.0 : -std::assoc_laguerre(k - 1, alpha + 1, x);
  double dfdx = -0.5 * std::pow(x, l_) * lag + std::pow(x, l_) * dlag;
  if (l_ > 0) dfdx += l_ * std::pow(x, l_ - 1) * lag;
  return norm_ * std::exp(-0.5 * x) * dfdx * beta;
}

double RadialFunction::integrate(
    const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    sum += weights_[i] * f(nodes_[i]);
  }
  return sum;
}

double RadialFunction::normalization_error() const {
  const double norm = integrate([this](double r) {
    const double val = (*this)(r);
    return val * val * r * r;
  });
  return std::abs(norm - 1.0);
}

RadialFunction radial(int n, int l, int z) { return RadialFunction(n, l, z); }

double hydrogen_expectation(int n, int l, int z, int k) {
  if (k < -2 || k > 2 || k == 0) {
    throw std::invalid_argument("radial moment power must be in {-2, -1, 1, 2}");
  }
  const RadialFunction rf(n, l, z);
  return rf.integrate([&rf, k](double r) {
    const double val = rf(r);
    return val * val * std::pow(r, 2 + k);
  });
}

double effective_potential(double r, int l, int z) {
  if (r <= 0.0) throw std::invalid_argument("radius must be positive");
  if (l < 0) throw std::invalid_argument("orbital quantum number must be >= 0");
  return -static_cast<double>(z) / r + 0.5 * l * (l + 1) / (r * r);
}

PotentialMin effective_potential_min(int l, int z) {
  if (l < 1) {
    throw std::invalid_argument(
        "effective potential has a minimum only for l >= 1");
  }
  const double ll = static_cast<double>(l) * (l + 1);
  return {ll / z, -0.5 * z * z / ll};
}

// ---------------------------------------------------------------------------
// Perturbation theory.
// ---------------------------------------------------------------------------

PerturbationProblem::PerturbationProblem(const CMatrix& h0_in,
                                         const CMatrix& v_in, double lambda_in)
    : h0(h0_in), v(v_in), lambda(lambda_in), eigen(eigh(h0_in)) {
  if (h0.rows() != h0.cols() || v.rows() != v.cols() ||
      h0.rows() != v.rows()) {
    throw std::invalid_argument("H0 and V must be square with equal size");
  }
  if (h0.hermiticity_error() > 1e-10 * (1.0 + h0.max_abs()) ||
      v.hermiticity_error() > 1e-10 * (1.0 + v.max_abs())) {
    throw std::invalid_argument("H0 and V must be Hermitian");
  }
}

namespace {

// <m|V|n> in the unperturbed eigenbasis.
cplx v_element(const PerturbationProblem& problem, std::size_t m,
               std::size_t n) {
  const CVector vn = problem.v * problem.eigen.vectors.col(n);
  return inner(problem.eigen.vectors.col(m), vn);
}

void require_nondegenerate(const PerturbationProblem& problem,
                           std::size_t level) {
  if (level >= problem.dim()) throw std::out_of_range("level index out of range");
  const double tol = degeneracy_tolerance(problem.eigen);
  for (std::size_t m = 0; m < problem.dim(); ++m) {
    if (m == level) continue;
    if (std::abs(problem.eigen.values[m] - problem.eigen.values[level]) <=
        tol) {
      throw std::invalid_argument(
          "level " + std::to_string(level) +
          " is degenerate; use pt_degenerate on the degenerate cluster");
    }
  }
}

}  // namespace

double pt_first(const PerturbationProblem& problem, std::size_t level) {
  require_nondegenerate(problem, level);
  return problem.lambda * v_element(problem, level, level).real();
}

CVector pt_state_first(const PerturbationProblem& problem, std::size_t level) {
  require_nondegenerate(problem, level);
  CVector correction(problem.dim(), cplx(0.0, 0.0));
  for (std::size_t m = 0; m < problem.dim(); ++m) {
    if (m == level) continue;
    const cplx coeff =
        problem.lambda * v_element(problem, m, level) /
        (problem.eigen.values[level] - problem.eigen.values[m]);
    const CVector basis = problem.eigen.vectors.col(m);
    for (std::size_t i = 0; i < problem.dim(); ++i) {
      correction[i] += coeff * basis[i];
    }
  }
  return correction;
}

double pt_second(const PerturbationProblem& problem, std::size_t level) {
  require_nondegenerate(problem, level);
  double sum = 0.0;
  for (std::size_t m = 0; m < problem.dim(); ++m) {
    if (m == level) continue;
    const double num = std::norm(v_element(problem, m, level));
    sum += num / (problem.eigen.values[level] - problem.eigen.values[m]);
  }
  return problem.lambda * problem.lambda * sum;
}

DegenerateCorrection pt_degenerate(const PerturbationProblem& problem,
                                   const std::vector<std::size_t>& levels) {
  if (levels.empty()) {
    throw std::invalid_argument("degenerate cluster must be nonempty");
  }
  const double tol = degeneracy_tolerance(problem.eigen);
  for (std::size_t idx : levels) {
    if (idx >= problem.dim()) throw std::out_of_range("level index out of range");
    if (std::abs(problem.eigen.values[idx] -
                 problem.eigen.values[levels[0]]) > tol) {
      throw std::invalid_argument(
          "listed levels are not degenerate with one another");
    }
  }
  for (std::size_t m = 0; m < problem.dim(); ++m) {
    if (std::find(levels.begin(), levels.end(), m) != levels.end()) continue;
    if (std::abs(problem.eigen.values[m] - problem.eigen.values[levels[0]]) <=
        tol) {
      throw std::invalid_argument(
          "degenerate cluster is incomplete: level " + std::to_string(m) +
          " is degenerate with the listed ones");
    }
  }

  const std::size_t g = levels.size();
  CMatrix w(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      w(i, j) = problem.lambda * v_element(problem, levels[i], levels[j]);
    }
  }
  const EigenSystem sub = eigh(w);

  DegenerateCorrection result{sub.values, CMatrix(problem.dim(), g)};
  for (std::size_t col = 0; col < g; ++col) {
    for (std::size_t i = 0; i < g; ++i) {
      const CVector basis = problem.eigen.vectors.col(levels[i]);
      const cplx coeff = sub.vectors(i, col);
      for (std::size_t row = 0; row < problem.dim(); ++row) {
        result.states(row, col) += coeff * basis[row];
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dipole elements and Lyman-alpha.
// ---------------------------------------------------------------------------

double dipole_z_element(int n1, int l1, int m1, int n2, int l2, int m2,
                        int z) {
  check_level(n1, l1, z);
  check_level(n2, l2, z);
  if (std::abs(m1) > l1 || std::abs(m2) > l2) {
    throw std::invalid_argument("|m| must not exceed l");
  }
  if (l1 > 3 || l2 > 3) {
    throw std::invalid_argument("dipole elements support l <= 3");
  }

  // Radial part: integral R1 R2 r^3 dr on a grid matched to the
  // combined decay e^{-z(1/n1 + 1/n2) r}, so the integrand is again
  // weight times polynomial and the rule is exact.
  const RadialFunction r1(n1, l1, z);
  const RadialFunction r2(n2, l2, z);
  const double beta = z * (1.0 / n1 + 1.0 / n2);
  const QuadRule rule = gauss_laguerre_scaled(kRadialNodes);
  double radial_part = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i] / beta;
    radial_part += rule.weights[i] / beta * r1(r) * r2(r) * r * r * r;
  }

  // Angular part: integral conj(Y_{l1 m1}) cos(theta) Y_{l2 m2} dOmega
  // with Gauss-Legendre in cos(theta) and a trapezoidal rule in phi
  // (exact for trigonometric polynomials of this degree).
  const QuadRule leg = gauss_legendre(64, -1.0, 1.0);
  const int n_phi = 64;
  cplx angular_part(0.0, 0.0);
  for (std::size_t i = 0; i < leg.nodes.size(); ++i) {
    const double u = leg.nodes[i];
    const double theta = std::acos(u);
    cplx phi_sum(0.0, 0.0);
    for (int p = 0; p < n_phi; ++p) {
      const double phi = 2.0 * M_PI * p / n_phi;
      phi_sum += std::conj(sph_harm(l1, m1, theta, phi)) * u *
                 sph_harm(l2, m2, theta, phi);
    }
    angular_part += leg.weights[i] * phi_sum * (2.0 * M_PI / n_phi);
  }

  return radial_part * angular_part.real();
}

double stark_matrix_element() { return dipole_z_element(2, 0, 0, 2, 1, 0); }

DecayChannel lyman_alpha_rate() {
  const double omega = hydrogen_energy(2) - hydrogen_energy(1);  // 3/8
  const double dipole = dipole_z_element(1, 0, 0, 2, 1, 0);
  const double alpha = kFineStructure;
  // A = w^3 |d|^2 / (3 pi eps0 c^3) with eps0 = 1/(4 pi), c = 1/alpha.
  const double rate_atomic =
      (4.0 / 3.0) * alpha * alpha * alpha * omega * omega * omega * dipole *
      dipole;
  DecayChannel channel;
  channel.rate = rate_atomic / kAtomicTimeSeconds;
  channel.lifetime = 1.0 / channel.rate;
  channel.energy_hartree = omega;
  channel.energy_ev = omega * kHartreeEv;
  return channel;
}

// ---------------------------------------------------------------------------
// Variational minimization.
// ---------------------------------------------------------------------------

Minimum variational_minimize(const std::function<double(double)>& f,
                             double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  if (x - lo < 2.0 * tol || hi - x < 2.0 * tol) {
    throw std::runtime_error(
        "no interior minimum in bracket: minimizer hit an edge");
  }
  return {x, f(x)};
}

double helium_trial_energy(double zeff) {
  // Two screened 1s electrons around Z = 2: kinetic zeff^2, nuclear
  // attraction -4 zeff, mutual repulsion (5/8) zeff, all in Hartree.
  return zeff * zeff - 4.0 * zeff + 0.625 * zeff;
}

// ---------------------------------------------------------------------------
// Sudden approximation.
// ---------------------------------------------------------------------------

double sudden_overlap_ho(double w1, double w2) {
  if (!(w1 > 0.0) || !(w2 > 0.0)) {
    throw std::invalid_argument("frequencies must be positive");
  }
  return 4.0 * w1 * w2 / ((w1 + w2) * (w1 + w2));
}

double sudden_overlap_hydrogenic(double z1, double z2) {
  if (!(z1 > 0.0) || !(z2 > 0.0)) {
    throw std::invalid_argument("charges must be positive");
  }
  const double overlap =
      8.0 * std::pow(z1 * z2, 1.5) / std::pow(z1 + z2, 3.0);
  return overlap * overlap;
}

// ---------------------------------------------------------------------------
// WKB quantization.
// ---------------------------------------------------------------------------

namespace {

// Locate the turning point where V crosses `energy`, between a point
// `inside` (V < E) and `outside` (V > E), by bisection.
double turning_point(const std::function<double(double)>& potential,
                     double energy, double inside, double outside) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (inside + outside);
    if (potential(mid) < energy) {
      inside = mid;
    } else {
      outside = mid;
    }
    if (std::abs(outside - inside) <=
        1e-14 * (1.0 + std::abs(inside) + std::abs(outside))) {
      break;
    }
  }
  return 0.5 * (inside + outside);
}

// Action integral between the turning points at `energy`, via the
// substitution x = mid + half * sin(theta) that removes the
// square-root endpoint singularities, on a composite Gauss-Legendre
// rule (panels tolerate interior kinks such as V = |x|).
double action_integral(const std::function<double(double)>& potential,
                       double mass, double energy, double x1, double x2) {
  static const QuadRule panel = gauss_legendre(32, -1.0, 1.0);
  const double mid = 0.5 * (x1 + x2);
  const double half = 0.5 * (x2 - x1);
  const int n_panels = 8;
  double sum = 0.0;
  for (int p = 0; p < n_panels; ++p) {
    const double t0 = -0.5 * M_PI + M_PI * p / n_panels;
    const double t1 = -0.5 * M_PI + M_PI * (p + 1) / n_panels;
    for (std::size_t i = 0; i < panel.nodes.size(); ++i) {
      const double theta = 0.5 * (t0 + t1) + 0.5 * (t1 - t0) * panel.nodes[i];
      const double x = mid + half * std::sin(theta);
      const double gap = std::max(0.0, energy - potential(x));
      sum += 0.5 * (t1 - t0) * panel.weights[i] *
             std::sqrt(2.0 * mass * gap) * half * std::cos(theta);
    }
  }
  return sum;
}

struct TurningPoints {
  double x1;
  double x2;
};

// Find the classical turning points around x0 for the given energy,
// marching outward with doubling steps until V exceeds the energy.
TurningPoints find_turning_points(
    const std::function<double(double)>& potential, double x0,
    double energy) {
  double step = 1e-3;
  double left = x0;
  while (potential(left) < energy) {
    left = x0 - step;
    step *= 2.0;
    if (step > 1e12) {
      throw std::runtime_error("potential is not confining on the left");
    }
  }
  step = 1e-3;
  double right = x0;
  while (potential(right) < energy) {
    right = x0 + step;
    step *= 2.0;
    if (step > 1e12) {
      throw std::runtime_error("potential is not confining on the right");
    }
  }
  TurningPoints tp;
  tp.x1 = left == x0 ? x0 : turning_point(potential, energy, x0, left);
  tp.x2 = right == x0 ? x0 : turning_point(potential, energy, x0, right);
  return tp;
}

}  // namespace

std::vector<double> wkb_levels(const std::function<double(double)>& potential,
                               double mass, std::size_t count) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  if (count == 0) return {};

  // Locate the potential minimum by expanding coarse scans.
  double span = 1.0;
  double x_min = 0.0;
  double v_min = 0.0;
  for (int attempt = 0; attempt < 44; ++attempt) {
    const int samples = 2001;
    x_min = -span;
    v_min = potential(-span);
    for (int i = 1; i < samples; ++i) {
      const double x = -span + 2.0 * span * i / (samples - 1);
      const double v = potential(x);
      if (v < v_min) {
        v_min = v;
        x_min = x;
      }
    }
    if (std::abs(x_min) < 0.9 * span) break;
    span *= 2.0;
    if (attempt == 43) {
      throw std::runtime_error("potential minimum not bracketable");
    }
  }

  std::vector<double> energies;
  energies.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double target = M_PI * (n + 0.5);
    // Bracket the energy: the action grows monotonically with E.
    double e_lo = v_min + 1e-12 * (1.0 + std::abs(v_min));
    double e_hi = v_min + 1.0;
    for (int iter = 0;; ++iter) {
      const TurningPoints tp = find_turning_points(potential, x_min, e_hi);
      if (action_integral(potential, mass, e_hi, tp.x1, tp.x2) > target) break;
      e_hi = v_min + (e_hi - v_min) * 2.0;
      if (iter > 200) {
        throw std::runtime_error("failed to bracket the WKB energy");
      }
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double e_mid = 0.5 * (e_lo + e_hi);
      const TurningPoints tp = find_turning_points(potential, x_min, e_mid);
      const double action = action_integral(potential, mass, e_mid, tp.x1, tp.x2);
      if (action < target) {
        e_lo = e_mid;
      } else {
        e_hi = e_mid;
      }
      if (e_hi - e_lo <= 1e-12 * (1.0 + std::abs(e_hi))) break;
    }
    energies.push_back(0.5 * (e_lo + e_hi));
  }
  return energies;
}

// ---------------------------------------------------------------------------
// Fine structure.
// ---------------------------------------------------------------------------

double fine_structure_energy(int n, double j) {
  if (n < 1) {
    throw std::invalid_argument("principal quantum number must be >= 1");
  }
  const double tj = std::round(2.0 * j);
  if (std::abs(2.0 * j - tj) > 1e-6 || std::fmod(tj, 2.0) == 0.0 ||
      tj < 1.0 || tj > 2.0 * n - 1.0) {
    throw std::invalid_argument(
        "j must be half-odd-integer with 1/2 <= j <= n - 1/2");
  }
  const double alpha = kFineStructure;
  const double n3 = static_cast<double>(n) * n * n;
  return -(alpha * alpha * kRydbergHartree / n3) *
         (1.0 / (j + 0.5) - 3.0 / (4.0 * n));
}

}  // namespace qq
