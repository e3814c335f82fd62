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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qq/matrix.hpp"

namespace qq {

// One-dimensional lattice of sites holding at most one particle each.
// Occupation patterns are written |n1 n2 ... nN> with site 1 as the
// leftmost (slow) bit, exactly like the multi-qubit convention.
enum class Statistics { HardcoreBoson, Fermion };
enum class Boundary { Open, Periodic };

// Exact C(n, k) for the modest sizes used here (n <= 20 in sectors).
std::size_t binomial(std::size_t n, std::size_t k);

// An ordered basis of occupation patterns: either the full 2^N space in
// ascending index order, or one particle-number sector enumerated by
// occupied-site combinations in lexicographic order, which reproduces
// printed listings like |1100>, |1010>, |1001>, |0110>, |0101>, |0011>.
class OccupationBasis {
 public:
  static OccupationBasis full(std::size_t n_sites);
  static OccupationBasis sector(std::size_t n_sites, std::size_t m);

  std::size_t n_sites() const { return n_; }
  // The fixed particle number, if this is a sector basis.
  std::optional<std::size_t> particles() const { return m_; }
  std::size_t dim() const { return patterns_.size(); }

  // Occupation pattern of basis state `row` as a bit mask (site 1 is the
  // highest bit) and as the printed bit string.
  std::size_t pattern(std::size_t row) const { return patterns_[row]; }
  std::string bits(std::size_t row) const;

  // Row holding the given pattern, if it belongs to this basis.
  std::optional<std::size_t> index_of(std::size_t pattern) const;

 private:
  OccupationBasis() = default;

  std::size_t n_ = 0;
  std::optional<std::size_t> m_;
  std::vector<std::size_t> patterns_;
  std::vector<std::size_t> lookup_;  // pattern -> row + 1, 0 when absent
};

// Ladder operators applied to a full-space amplitude vector (size 2^N).
// Hardcore bosons satisfy (b^dag)^2 = 0 with no sign; fermions pick up
// (-1)^(number of occupied sites with smaller index). The zero vector is
// a legitimate result.
CVector create(Statistics kind, std::size_t site, const CVector& state);
CVector annihilate(Statistics kind, std::size_t site, const CVector& state);

// The same operators as dense 2^N x 2^N matrices.
CMatrix create_op(Statistics kind, std::size_t n_sites, std::size_t site);
CMatrix annihilate_op(Statistics kind, std::size_t n_sites, std::size_t site);

// Occupation of one site, and the total particle count.
CMatrix number_op(std::size_t n_sites, std::size_t site);
CMatrix total_number(std::size_t n_sites);

// Nearest-neighbor hopping -delta * sum (a_i^dag a_j + a_j^dag a_i),
// built directly in the given basis (full space or one sector). Periodic
// chains include the wrap bond; a two-site ring therefore counts its
// single bond twice, which keeps the ring dispersion -2 delta cos(k)
// valid at N = 2.
CMatrix hopping_hamiltonian(const OccupationBasis& basis, double delta,
                            Boundary boundary, Statistics kind);

// Convenience overload on the full 2^N space.
CMatrix hopping_hamiltonian(std::size_t n_sites, double delta,
                            Boundary boundary, Statistics kind);

// Single-particle plane wave on an N-site ring as a full-space vector:
// amplitude exp(i k_alpha (s-1))/sqrt(N) on "particle at site s", with
// k_alpha = 2 pi alpha / N.
CVector momentum_state(std::size_t n_sites, std::size_t alpha);

// Cyclic shift moving each site's content one site to the left (site 1
// wraps to site N), as a permutation on occupation patterns; momentum
// states are its eigenvectors with eigenvalue exp(i k_alpha).
CMatrix translation_op(std::size_t n_sites);

}  // namespace qq
