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

#include "qq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qq/eigh.hpp"
#include "qq/expm.hpp"

namespace qq {

namespace {

void check_state_dim(const CMatrix& h, const CVector& psi) {
  if (h.rows() != h.cols() || h.rows() != psi.size()) {
    throw std::invalid_argument("dimension mismatch between H and state");
  }
}

double norm2(const CVector& v) {
  double s = 0.0;
  for (const cplx& a : v) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace

CVector evolve(const CMatrix& h, const CVector& psi0, double t) {
  check_state_dim(h, psi0);
  return expm_i(h, t) * psi0;
}

CMatrix propagator(const CMatrix& h, double t) { return expm_i(h, t); }

double expectation(const CMatrix& obs, const CVector& psi) {
  check_state_dim(obs, psi);
  return inner(psi, obs * psi).real();
}

Trajectory make_trajectory(
    const CMatrix& h, const CVector& psi0, const std::vector<double>& times,
    const std::vector<std::pair<std::string, CMatrix>>& observables,
    bool keep_states) {
  check_state_dim(h, psi0);
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw std::invalid_argument("trajectory times must be increasing");
    }
  }
  const EigenSystem es = eigh(h);
  Trajectory out;
  out.times = times;
  for (const auto& [name, obs] : observables) {
    out.observables.emplace(name, std::vector<double>());
  }
  if (keep_states) out.states.emplace();
  for (double t : times) {
    const CVector psi = expm_i(es, t) * psi0;
    for (const auto& [name, obs] : observables) {
      out.observables[name].push_back(expectation(obs, psi));
    }
    if (keep_states) out.states->push_back(psi);
  }
  return out;
}

TrotterResult trotter_evolve(const std::vector<CMatrix>& terms,
                             const CVector& psi0, double t,
                             std::size_t n_steps) {
  if (terms.empty()) {
    throw std::invalid_argument("trotter_evolve needs at least one term");
  }
  if (n_steps == 0) {
    throw std::invalid_argument("trotter_evolve needs n_steps >= 1");
  }
  CMatrix sum = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) sum += terms[k];
  check_state_dim(sum, psi0);

  const double dt = t / static_cast<double>(n_steps);
  // One unitary per term at the step size, applied cyclically.
  std::vector<CMatrix> factors;
  factors.reserve(terms.size());
  for (const CMatrix& term : terms) factors.push_back(expm_i(term, dt));

  CVector psi = psi0;
  for (std::size_t s = 0; s < n_steps; ++s) {
    for (const CMatrix& u : factors) psi = u * psi;
  }

  const CVector exact = expm_i(sum, t) * psi0;
  CVector diff = psi;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= exact[i];
  return TrotterResult{psi, norm2(diff)};
}

CVector evolve_time_dependent(const std::function<CMatrix(double)>& h_of_t,
                              const CVector& psi0, double t,
                              std::size_t n_steps) {
  if (n_steps == 0) {
    throw std::invalid_argument("time-dependent evolution needs n_steps >= 1");
  }
  const double dt = t / static_cast<double>(n_steps);
  CVector psi = psi0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) * dt;
    psi = expm_i(h_of_t(mid), dt) * psi;
  }
  return psi;
}

ConservationCheck conserved(const CMatrix& h, const CMatrix& a, double tol) {
  const double norm = commutator(h, a).max_abs();
  const double scale = std::max(1.0, h.max_abs() * a.max_abs());
  return ConservationCheck{norm <= tol * scale, norm};
}

double rabi_excited_prob(double omega, double detuning, double t) {
  if (omega == 0.0) return 0.0;
  const double eff = std::hypot(omega, detuning);
  const double amp = omega / eff;
  const double s = std::sin(0.5 * eff * t);
  return amp * amp * s * s;
}

CMatrix rabi_effective_hamiltonian(double omega, double detuning) {
  return CMatrix::from_rows({{0.5 * detuning, 0.5 * omega},
                             {0.5 * omega, -0.5 * detuning}});
}

namespace {

double dot3(const ParameterPath::Point& a, const ParameterPath::Point& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

ParameterPath::ParameterPath(std::vector<Point> points, double max_step)
    : pts_(std::move(points)) {
  if (pts_.size() < 2) {
    throw std::invalid_argument("parameter path needs at least two points");
  }
  for (const Point& p : pts_) {
    if (std::abs(dot3(p, p) - 1.0) > 1e-9) {
      throw std::invalid_argument(
          "parameter path points must be unit vectors (a vanishing field "
          "is a degeneracy)");
    }
  }
  const Point& first = pts_.front();
  const Point& last = pts_.back();
  if (std::abs(first[0] - last[0]) > 1e-9 ||
      std::abs(first[1] - last[1]) > 1e-9 ||
      std::abs(first[2] - last[2]) > 1e-9) {
    throw std::invalid_argument("parameter path must be closed");
  }
  for (std::size_t k = 0; k + 1 < pts_.size(); ++k) {
    const double c = std::clamp(dot3(pts_[k], pts_[k + 1]), -1.0, 1.0);
    if (std::acos(c) > max_step) {
      throw std::invalid_argument("parameter path step exceeds max_step");
    }
  }
}

ParameterPath ParameterPath::latitude_loop(double alpha,
                                           std::size_t n_points) {
  if (n_points < 3) {
    throw std::invalid_argument("latitude loop needs at least three points");
  }
  std::vector<Point> pts;
  pts.reserve(n_points + 1);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  for (std::size_t k = 0; k <= n_points; ++k) {
    // Re-use the k = 0 azimuth at the closure so first == last exactly.
    const double phi =
        2.0 * M_PI * static_cast<double>(k % n_points) / double(n_points);
    pts.push_back(Point{s * std::cos(phi), s * std::sin(phi), c});
  }
  return ParameterPath(std::move(pts));
}

ParameterPath ParameterPath::geodesic_polygon(
    const std::vector<Point>& vertices, std::size_t points_per_edge) {
  if (vertices.size() < 2) {
    throw std::invalid_argument("geodesic polygon needs several vertices");
  }
  if (points_per_edge == 0) {
    throw std::invalid_argument("geodesic polygon needs points per edge");
  }
  std::vector<Point> pts;
  pts.reserve(vertices.size() * points_per_edge + 1);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const Point& a = vertices[v];
    const Point& b = vertices[(v + 1) % vertices.size()];
    const double ang = std::acos(std::clamp(dot3(a, b), -1.0, 1.0));
    for (std::size_t k = 0; k < points_per_edge; ++k) {
      const double f = static_cast<double>(k) / double(points_per_edge);
      Point p;
      if (ang < 1e-12) {
        p = a;
      } else {
        // Spherical linear interpolation along the great circle a -> b.
        const double wa = std::sin((1.0 - f) * ang) / std::sin(ang);
        const double wb = std::sin(f * ang) / std::sin(ang);
        p = Point{wa * a[0] + wb * b[0], wa * a[1] + wb * b[1],
                  wa * a[2] + wb * b[2]};
      }
      const double n = std::sqrt(dot3(p, p));
      pts.push_back(Point{p[0] / n, p[1] / n, p[2] / n});
    }
  }
  pts.push_back(pts.front());
  return ParameterPath(std::move(pts));
}

ParameterPath ParameterPath::reversed() const {
  std::vector<Point> pts(pts_.rbegin(), pts_.rend());
  return ParameterPath(std::move(pts));
}

double berry_phase(const ParameterPath& path, Band band) {
  const std::vector<ParameterPath::Point>& pts = path.points();
  // The transported eigenstate of H(n) = -n.sigma: the ground band's
  // Bloch vector follows +n, the excited band's follows -n. Either way
  // the spinor below is the one aligned with `flip * n`.
  const double flip = (band == Band::Ground) ? 1.0 : -1.0;
  auto spinor = [flip](const ParameterPath::Point& p) {
    const double theta = std::acos(std::clamp(flip * p[2], -1.0, 1.0));
    const double phi = std::atan2(flip * p[1], flip * p[0]);
    return std::array<cplx, 2>{cplx{std::cos(0.5 * theta), 0.0},
                               std::polar(std::sin(0.5 * theta), phi)};
  };

  // Pancharatnam phase: minus the accumulated arguments of consecutive
  // overlaps <n(s_k)|n(s_{k+1})>. Interior gauge choices cancel around
  // the closed product, and fine steps keep each argument small so the
  // sum tracks the continuum limit without branch ambiguity.
  double accumulated = 0.0;
  std::array<cplx, 2> prev = spinor(pts.front());
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const std::array<cplx, 2> cur = spinor(pts[k]);
    const cplx overlap =
        std::conj(prev[0]) * cur[0] + std::conj(prev[1]) * cur[1];
    if (std::abs(overlap) < 0.1) {
      throw std::runtime_error(
          "berry_phase: consecutive path states nearly orthogonal");
    }
    accumulated += std::arg(overlap);
    prev = cur;
  }

  double phase = std::fmod(-accumulated, 2.0 * M_PI);
  if (phase > 1e-6) phase -= 2.0 * M_PI;
  return phase;
}

}  // namespace qq
