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

#include "qq/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qq {

namespace {

constexpr std::size_t kMaxFullSites = 14;
constexpr std::size_t kMaxSectorSites = 20;

// Bit of 1-based site s in an n-site pattern; site 1 is the highest bit.
std::size_t site_bit(std::size_t n, std::size_t s) {
  return std::size_t{1} << (n - s);
}

// +1/-1 fermionic string factor: parity of the occupied sites strictly to
// the left of `site` (smaller index, higher bits).
double string_sign(std::size_t pattern, std::size_t n, std::size_t site) {
  const std::size_t left = pattern >> (n - site + 1);
  return (std::popcount(left) & 1u) ? -1.0 : 1.0;
}

std::size_t sites_from_dim(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim || n == 0) {
    throw std::invalid_argument("lattice: state size is not a power of two");
  }
  return n;
}

void check_site(std::size_t n, std::size_t site) {
  if (site < 1 || site > n) {
    throw std::invalid_argument("lattice: site out of range");
  }
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact: c is C(n-k+i, i) at each step
  }
  return c;
}

OccupationBasis OccupationBasis::full(std::size_t n_sites) {
  if (n_sites == 0 || n_sites > kMaxFullSites) {
    throw std::invalid_argument("OccupationBasis: full-space site count");
  }
  OccupationBasis b;
  b.n_ = n_sites;
  const std::size_t dim = std::size_t{1} << n_sites;
  b.patterns_.resize(dim);
  b.lookup_.resize(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    b.patterns_[p] = p;
    b.lookup_[p] = p + 1;
  }
  return b;
}

OccupationBasis OccupationBasis::sector(std::size_t n_sites, std::size_t m) {
  if (n_sites == 0 || n_sites > kMaxSectorSites || m > n_sites) {
    throw std::invalid_argument("OccupationBasis: bad sector");
  }
  OccupationBasis b;
  b.n_ = n_sites;
  b.m_ = m;
  b.lookup_.assign(std::size_t{1} << n_sites, 0);

  // Occupied-site combinations in lexicographic order.
  std::vector<std::size_t> sites(m);
  for (std::size_t i = 0; i < m; ++i) sites[i] = i + 1;
  while (true) {
    std::size_t pattern = 0;
    for (std::size_t s : sites) pattern |= site_bit(n_sites, s);
    b.lookup_[pattern] = b.patterns_.size() + 1;
    b.patterns_.push_back(pattern);
    if (m == 0) break;
    // Advance to the next combination.
    std::size_t i = m;
    while (i > 0 && sites[i - 1] == n_sites - m + i) --i;
    if (i == 0) break;
    ++sites[i - 1];
    for (std::size_t j = i; j < m; ++j) sites[j] = sites[j - 1] + 1;
  }
  return b;
}

std::string OccupationBasis::bits(std::size_t row) const {
  std::string out(n_, '0');
  for (std::size_t s = 1; s <= n_; ++s) {
    if (patterns_[row] & site_bit(n_, s)) out[s - 1] = '1';
  }
  return out;
}

std::optional<std::size_t> OccupationBasis::index_of(
    std::size_t pattern) const {
  if (pattern >= lookup_.size() || lookup_[pattern] == 0) return std::nullopt;
  return lookup_[pattern] - 1;
}

CVector create(Statistics kind, std::size_t site, const CVector& state) {
  const std::size_t n = sites_from_dim(state.size());
  check_site(n, site);
  const std::size_t bit = site_bit(n, site);
  CVector out(state.size(), cplx{0.0, 0.0});
  for (std::size_t p = 0; p < state.size(); ++p) {
    if (p & bit) continue;  // hardcore: site already occupied
    const double sign =
        (kind == Statistics::Fermion) ? string_sign(p, n, site) : 1.0;
    out[p | bit] += sign * state[p];
  }
  return out;
}

CVector annihilate(Statistics kind, std::size_t site, const CVector& state) {
  const std::size_t n = sites_from_dim(state.size());
  check_site(n, site);
  const std::size_t bit = site_bit(n, site);
  CVector out(state.size(), cplx{0.0, 0.0});
  for (std::size_t p = 0; p < state.size(); ++p) {
    if (!(p & bit)) continue;
    // The string counts sites left of `site`, which the cleared bit does
    // not affect, so create and annihilate share the same sign.
    const double sign =
        (kind == Statistics::Fermion) ? string_sign(p, n, site) : 1.0;
    out[p & ~bit] += sign * state[p];
  }
  return out;
}

CMatrix create_op(Statistics kind, std::size_t n_sites, std::size_t site) {
  check_site(n_sites, site);
  const std::size_t dim = std::size_t{1} << n_sites;
  const std::size_t bit = site_bit(n_sites, site);
  CMatrix m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (p & bit) continue;
    const double sign =
        (kind == Statistics::Fermion) ? string_sign(p, n_sites, site) : 1.0;
    m(p | bit, p) = sign;
  }
  return m;
}

CMatrix annihilate_op(Statistics kind, std::size_t n_sites, std::size_t site) {
  return create_op(kind, n_sites, site).adjoint();
}

CMatrix number_op(std::size_t n_sites, std::size_t site) {
  check_site(n_sites, site);
  const std::size_t dim = std::size_t{1} << n_sites;
  const std::size_t bit = site_bit(n_sites, site);
  CMatrix m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (p & bit) m(p, p) = 1.0;
  }
  return m;
}

CMatrix total_number(std::size_t n_sites) {
  const std::size_t dim = std::size_t{1} << n_sites;
  CMatrix m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    m(p, p) = static_cast<double>(std::popcount(p));
  }
  return m;
}

CMatrix hopping_hamiltonian(const OccupationBasis& basis, double delta,
                            Boundary boundary, Statistics kind) {
  const std::size_t n = basis.n_sites();
  if (n < 2) {
    throw std::invalid_argument("hopping_hamiltonian: need at least 2 sites");
  }
  const std::size_t n_bonds = (boundary == Boundary::Periodic) ? n : n - 1;
  CMatrix h(basis.dim(), basis.dim());

  // One hop a_i^dag a_j moving a particle j -> i within the basis.
  auto add_hop = [&](std::size_t col, std::size_t pattern, std::size_t i,
                     std::size_t j) {
    const std::size_t bi = site_bit(n, i);
    const std::size_t bj = site_bit(n, j);
    if (!(pattern & bj) || (pattern & bi)) return;
    double sign = 1.0;
    if (kind == Statistics::Fermion) sign *= string_sign(pattern, n, j);
    const std::size_t removed = pattern & ~bj;
    if (kind == Statistics::Fermion) sign *= string_sign(removed, n, i);
    const auto row = basis.index_of(removed | bi);
    h(*row, col) += -delta * sign;
  };

  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const std::size_t pattern = basis.pattern(col);
    for (std::size_t s = 1; s <= n_bonds; ++s) {
      const std::size_t t = s % n + 1;
      add_hop(col, pattern, s, t);
      add_hop(col, pattern, t, s);
    }
  }
  return h;
}

CMatrix hopping_hamiltonian(std::size_t n_sites, double delta,
                            Boundary boundary, Statistics kind) {
  return hopping_hamiltonian(OccupationBasis::full(n_sites), delta, boundary,
                             kind);
}

CVector momentum_state(std::size_t n_sites, std::size_t alpha) {
  if (n_sites == 0 || n_sites > kMaxFullSites || alpha >= n_sites) {
    throw std::invalid_argument("momentum_state: bad arguments");
  }
  const double k = 2.0 * M_PI * static_cast<double>(alpha) /
                   static_cast<double>(n_sites);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n_sites));
  CVector v(std::size_t{1} << n_sites, cplx{0.0, 0.0});
  for (std::size_t s = 1; s <= n_sites; ++s) {
    v[site_bit(n_sites, s)] = std::polar(amp, k * static_cast<double>(s - 1));
  }
  return v;
}

CMatrix translation_op(std::size_t n_sites) {
  if (n_sites == 0 || n_sites > kMaxFullSites) {
    throw std::invalid_argument("translation_op: bad site count");
  }
  const std::size_t dim = std::size_t{1} << n_sites;
  CMatrix t(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const std::size_t shifted =
        ((p << 1) | (p >> (n_sites - 1))) & (dim - 1);
    t(shifted, p) = 1.0;
  }
  return t;
}

}  // namespace qq
