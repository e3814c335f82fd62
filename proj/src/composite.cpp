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

#include "qq/composite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qq/eigh.hpp"

namespace qq {

namespace {

// Bit position (from the least significant end) of 1-based qubit q in an
// n-qubit index: qubit 1 carries the highest bit.
std::size_t bit_pos(std::size_t n, std::size_t q) { return n - q; }

void check_qubit_count(std::size_t n) {
  if (n == 0 || n > 24) {
    throw std::invalid_argument("MultiQubitState: qubit count out of range");
  }
}

}  // namespace

MultiQubitState::MultiQubitState(std::size_t n_qubits, CVector amplitudes)
    : n_(n_qubits), amp_(std::move(amplitudes)) {
  check_qubit_count(n_);
  if (amp_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("MultiQubitState: amplitude count is not 2^n");
  }
  const double len = norm(amp_);
  if (std::fabs(len - 1.0) > 1e-9) {
    throw std::invalid_argument("MultiQubitState: state must be normalized");
  }
  for (cplx& a : amp_) a /= len;
}

MultiQubitState MultiQubitState::basis(std::size_t n_qubits,
                                       std::size_t index) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw std::invalid_argument("MultiQubitState: basis index out of range");
  }
  CVector amp(dim, cplx{0.0, 0.0});
  amp[index] = cplx{1.0, 0.0};
  return MultiQubitState(n_qubits, std::move(amp));
}

MultiQubitState MultiQubitState::from_bits(const std::string& bits) {
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("MultiQubitState: bit string must be 0/1");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  return basis(bits.size(), index);
}

MultiQubitState MultiQubitState::product(
    const std::vector<QubitState>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("MultiQubitState: empty product");
  }
  CVector amp{cplx{1.0, 0.0}};
  for (const QubitState& f : factors) {
    CVector next(amp.size() * 2);
    for (std::size_t i = 0; i < amp.size(); ++i) {
      next[2 * i] = amp[i] * f.alpha();
      next[2 * i + 1] = amp[i] * f.beta();
    }
    amp = std::move(next);
  }
  return MultiQubitState(factors.size(), std::move(amp));
}

cplx inner(const MultiQubitState& a, const MultiQubitState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("inner: qubit counts differ");
  }
  return inner(a.amplitudes(), b.amplitudes());
}

MultiQubitState apply(const CMatrix& u, const MultiQubitState& s) {
  if (u.rows() != s.dim() || u.cols() != s.dim()) {
    throw std::invalid_argument("apply: operator dimension mismatch");
  }
  return MultiQubitState(s.n_qubits(), u * s.amplitudes());
}

namespace {

// The gate's matrix on its own qubits, plus the qubit count it acts on.
CMatrix local_gate(GateName name, double phi, std::size_t* arity) {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx h{0.5, 0.5};   // (1+i)/2
  const cplx hc{0.5, -0.5}; // (1-i)/2
  *arity = 2;
  switch (name) {
    case GateName::CNOT:
      return CMatrix::from_rows({{1, 0, 0, 0},
                                 {0, 1, 0, 0},
                                 {0, 0, 0, 1},
                                 {0, 0, 1, 0}});
    case GateName::CZ:
      return CMatrix::diagonal(std::vector<double>{1.0, 1.0, 1.0, -1.0});
    case GateName::SWAP:
      return CMatrix::from_rows({{1, 0, 0, 0},
                                 {0, 0, 1, 0},
                                 {0, 1, 0, 0},
                                 {0, 0, 0, 1}});
    case GateName::SqrtSwap:
      return CMatrix::from_rows({{1, 0, 0, 0},
                                 {0, h, hc, 0},
                                 {0, hc, h, 0},
                                 {0, 0, 0, 1}});
    case GateName::CPhase:
      return CMatrix::diagonal(
          std::vector<cplx>{1.0, 1.0, 1.0, std::polar(1.0, phi)});
    case GateName::H:
      *arity = 1;
      return CMatrix::from_rows({{r, r}, {r, -r}});
    case GateName::X:
      *arity = 1;
      return pauli_x();
    case GateName::Y:
      *arity = 1;
      return pauli_y();
    case GateName::Z:
      *arity = 1;
      return pauli_z();
    case GateName::T:
      *arity = 1;
      return CMatrix::diagonal(
          std::vector<cplx>{1.0, std::polar(1.0, M_PI / 4.0)});
  }
  throw std::invalid_argument("gate: unknown gate name");
}

}  // namespace

CMatrix gate(std::size_t n_qubits, GateName name,
             const std::vector<std::size_t>& targets, double phi) {
  check_qubit_count(n_qubits);
  std::size_t arity = 0;
  const CMatrix u = local_gate(name, phi, &arity);
  if (targets.size() != arity) {
    throw std::invalid_argument("gate: wrong number of target qubits");
  }
  for (std::size_t t : targets) {
    if (t < 1 || t > n_qubits) {
      throw std::invalid_argument("gate: target qubit out of range");
    }
  }
  if (arity == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("gate: target qubits must be distinct");
  }

  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t ldim = std::size_t{1} << arity;
  CMatrix full = CMatrix::zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    // Gather the column's bits on the target qubits (first target slow),
    // and clear them to get the untouched-qubit pattern.
    std::size_t lc = 0;
    std::size_t rest = col;
    for (std::size_t t : targets) {
      const std::size_t p = bit_pos(n_qubits, t);
      lc = (lc << 1) | ((col >> p) & 1u);
      rest &= ~(std::size_t{1} << p);
    }
    for (std::size_t lr = 0; lr < ldim; ++lr) {
      std::size_t row = rest;
      for (std::size_t i = 0; i < arity; ++i) {
        if ((lr >> (arity - 1 - i)) & 1u) {
          row |= std::size_t{1} << bit_pos(n_qubits, targets[i]);
        }
      }
      full(row, col) = u(lr, lc);
    }
  }
  return full;
}

std::vector<SubsystemOutcome> measure_subsystem(const MultiQubitState& s,
                                                std::size_t qubit,
                                                Axis basis) {
  const std::size_t n = s.n_qubits();
  if (qubit < 1 || qubit > n) {
    throw std::invalid_argument("measure_subsystem: qubit out of range");
  }
  const std::size_t mask = std::size_t{1} << bit_pos(n, qubit);
  const CVector& amp = s.amplitudes();

  std::vector<SubsystemOutcome> result;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const CVector e = QubitState::cube(basis, sign).vec();
    CVector proj(amp.size(), cplx{0.0, 0.0});
    double prob = 0.0;
    for (std::size_t base = 0; base < amp.size(); ++base) {
      if (base & mask) continue;
      // Overlap of the measured qubit with the outcome state, with the
      // other qubits' amplitudes riding along.
      const cplx o =
          std::conj(e[0]) * amp[base] + std::conj(e[1]) * amp[base | mask];
      proj[base] = e[0] * o;
      proj[base | mask] = e[1] * o;
      prob += std::norm(o);
    }
    SubsystemOutcome out{sign, prob, std::nullopt};
    if (prob > 1e-15) {
      const double scale = 1.0 / std::sqrt(prob);
      for (cplx& a : proj) a *= scale;
      out.post = MultiQubitState(n, std::move(proj));
    }
    result.push_back(std::move(out));
  }
  return result;
}

double joint_probability(const MultiQubitState& s,
                         const std::vector<QubitState>& outcomes) {
  if (outcomes.size() != s.n_qubits()) {
    throw std::invalid_argument(
        "joint_probability: need one outcome state per qubit");
  }
  return std::norm(inner(MultiQubitState::product(outcomes), s));
}

MultiQubitDensity::MultiQubitDensity(std::size_t n_qubits, const CMatrix& rho)
    : n_(n_qubits), rho_(rho) {
  check_qubit_count(n_);
  const std::size_t dim = std::size_t{1} << n_;
  if (!rho_.square() || rho_.rows() != dim) {
    throw std::invalid_argument("MultiQubitDensity: matrix must be 2^n x 2^n");
  }
  const double scale = std::max(1.0, rho_.max_abs());
  if (rho_.hermiticity_error() > 1e-10 * scale) {
    throw std::invalid_argument("MultiQubitDensity: matrix not Hermitian");
  }
  if (std::abs(rho_.trace() - cplx{1.0, 0.0}) > 1e-10) {
    throw std::invalid_argument("MultiQubitDensity: trace must be 1");
  }
  if (eigh_values(rho_).front() < -1e-10) {
    throw std::invalid_argument("MultiQubitDensity: negative eigenvalue");
  }
}

MultiQubitDensity MultiQubitDensity::pure(const MultiQubitState& s) {
  return MultiQubitDensity(
      s.n_qubits(), CMatrix::outer(s.amplitudes(), s.amplitudes()));
}

double MultiQubitDensity::purity() const {
  // Tr rho^2 is the squared Frobenius norm for Hermitian rho.
  const double f = rho_.frobenius_norm();
  return f * f;
}

MultiQubitDensity partial_trace(const MultiQubitDensity& rho,
                                const std::vector<std::size_t>& keep) {
  const std::size_t n = rho.n_qubits();
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (kept.empty() || kept.front() < 1 || kept.back() > n ||
      std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: bad kept-qubit set");
  }
  std::vector<std::size_t> dropped;
  for (std::size_t q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) dropped.push_back(q);
  }

  // Tables mapping a sub-pattern to its bits' full-index positions, so a
  // full index is kept_map[i] | drop_map[m].
  auto scatter_table = [n](const std::vector<std::size_t>& qubits) {
    const std::size_t count = std::size_t{1} << qubits.size();
    std::vector<std::size_t> table(count, 0);
    for (std::size_t pattern = 0; pattern < count; ++pattern) {
      for (std::size_t i = 0; i < qubits.size(); ++i) {
        if ((pattern >> (qubits.size() - 1 - i)) & 1u) {
          table[pattern] |= std::size_t{1} << bit_pos(n, qubits[i]);
        }
      }
    }
    return table;
  };
  const std::vector<std::size_t> kept_map = scatter_table(kept);
  const std::vector<std::size_t> drop_map = scatter_table(dropped);

  CMatrix out(kept_map.size(), kept_map.size());
  for (std::size_t i = 0; i < kept_map.size(); ++i) {
    for (std::size_t j = 0; j < kept_map.size(); ++j) {
      cplx sum{0.0, 0.0};
      for (std::size_t m : drop_map) {
        sum += rho.matrix()(kept_map[i] | m, kept_map[j] | m);
      }
      out(i, j) = sum;
    }
  }
  return MultiQubitDensity(kept.size(), out);
}

namespace {

// Extends an orthonormal list to `count` vectors. Each round
// orthogonalizes every canonical basis vector against the list and keeps
// the largest residual, which is always bounded away from zero while the
// list is incomplete.
void complete_orthonormal(std::vector<CVector>& vecs, std::size_t count,
                          std::size_t dim) {
  while (vecs.size() < count) {
    CVector best;
    double best_len = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      CVector v(dim, cplx{0.0, 0.0});
      v[k] = cplx{1.0, 0.0};
      for (const CVector& u : vecs) {
        const cplx c = inner(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * u[i];
      }
      const double len = norm(v);
      if (len > best_len) {
        best_len = len;
        best = std::move(v);
      }
    }
    for (cplx& a : best) a /= best_len;
    vecs.push_back(std::move(best));
  }
}

}  // namespace

SchmidtDecomposition schmidt(const MultiQubitState& s, std::size_t cut) {
  const std::size_t n = s.n_qubits();
  if (cut < 1 || cut >= n) {
    throw std::invalid_argument("schmidt: cut must split the qubits");
  }
  const std::size_t da = std::size_t{1} << cut;
  const std::size_t db = std::size_t{1} << (n - cut);
  // Amplitudes as a da x db matrix: the first block index is the slow one.
  CMatrix m(da, db);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < db; ++b) {
      m(a, b) = s.amplitude(a * db + b);
    }
  }

  // Eigendecompose the smaller side's Gram matrix; its eigenvalues are the
  // Schmidt coefficients and its eigenvectors that side's Schmidt basis.
  const bool a_small = da <= db;
  const CMatrix gram = a_small ? m * m.adjoint() : m.adjoint() * m;
  const EigenSystem es = eigh(gram);
  const std::size_t r = gram.rows();

  SchmidtDecomposition out;
  std::vector<CVector> small_side, large_side;
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t idx = r - 1 - k;  // descending
    out.coefficients.push_back(std::max(0.0, es.values[idx]));
    small_side.push_back(es.vector(idx));
  }
  // The other side comes from contracting the state with each Schmidt
  // vector; zero-coefficient directions are filled in orthonormally.
  for (std::size_t k = 0; k < r; ++k) {
    const double c = out.coefficients[k];
    if (c <= 1e-30) break;
    const double inv = 1.0 / std::sqrt(c);
    const CVector& u = small_side[k];
    if (a_small) {
      CVector chi(db, cplx{0.0, 0.0});
      for (std::size_t b = 0; b < db; ++b) {
        cplx sum{0.0, 0.0};
        for (std::size_t a = 0; a < da; ++a) sum += std::conj(u[a]) * m(a, b);
        chi[b] = sum * inv;
      }
      large_side.push_back(std::move(chi));
    } else {
      CVector phi(da, cplx{0.0, 0.0});
      for (std::size_t a = 0; a < da; ++a) {
        cplx sum{0.0, 0.0};
        for (std::size_t b = 0; b < db; ++b) sum += m(a, b) * u[b];
        phi[a] = sum * inv;
      }
      large_side.push_back(std::move(phi));
    }
  }
  complete_orthonormal(large_side, r, a_small ? db : da);

  out.left = a_small ? std::move(small_side) : std::move(large_side);
  out.right = a_small ? std::move(large_side) : std::move(small_side);
  if (!a_small) {
    // The Gram eigenvectors live on side B; the contraction above built
    // side A, but B's vectors must be conjugated to match
    // |s> = sum sqrt(c) |left>|right>.
    for (CVector& v : out.right) {
      for (cplx& x : v) x = std::conj(x);
    }
  }
  return out;
}

std::size_t SchmidtDecomposition::schmidt_number(double tol) const {
  std::size_t count = 0;
  for (double c : coefficients) {
    if (c > tol) ++count;
  }
  return count;
}

double entanglement_entropy(const MultiQubitState& s, std::size_t cut) {
  double bits = 0.0;
  for (double c : schmidt(s, cut).coefficients) {
    if (c > 1e-15) bits -= c * std::log2(c);
  }
  return bits;
}

namespace {

// V sqrt(diag(e)) V^dag with small negative eigenvalues clipped to zero.
CMatrix sqrt_psd(const CMatrix& rho) {
  const EigenSystem es = eigh(rho);
  const std::size_t dim = rho.rows();
  CMatrix out(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double root = std::sqrt(std::max(0.0, es.values[k]));
    const CVector v = es.vector(k);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        out(i, j) += root * v[i] * std::conj(v[j]);
      }
    }
  }
  return out;
}

}  // namespace

double concurrence(const MultiQubitDensity& rho) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument("concurrence: needs a two-qubit density");
  }
  const CMatrix yy = kron(pauli_y(), pauli_y());
  const CMatrix spin_flipped = yy * rho.matrix().conjugate() * yy;
  const CMatrix root = sqrt_psd(rho.matrix());
  std::vector<double> ev = eigh_values(root * spin_flipped * root);
  double c = 0.0;  // l4 - l3 - l2 - l1 in ascending order flips the sign
  for (std::size_t k = 0; k < ev.size(); ++k) {
    const double l = std::sqrt(std::max(0.0, ev[k]));
    c += (k + 1 == ev.size()) ? l : -l;
  }
  return std::max(0.0, c);
}

double ppt_min_eigenvalue(const MultiQubitDensity& rho) {
  if (rho.n_qubits() != 2) {
    throw std::invalid_argument(
        "ppt_min_eigenvalue: needs a two-qubit density");
  }
  CMatrix t(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
          // Transpose the second (fast) index only.
          t(2 * i + b, 2 * j + a) = rho.matrix()(2 * i + a, 2 * j + b);
        }
      }
    }
  }
  return eigh_values(t).front();
}

MultiQubitState named_state(NamedState which) {
  const double r = 1.0 / std::sqrt(2.0);
  const double w = 1.0 / std::sqrt(3.0);
  switch (which) {
    case NamedState::PhiPlus:
      return MultiQubitState(2, {r, 0.0, 0.0, r});
    case NamedState::PhiMinus:
      return MultiQubitState(2, {r, 0.0, 0.0, -r});
    case NamedState::PsiPlus:
      return MultiQubitState(2, {0.0, r, r, 0.0});
    case NamedState::PsiMinus:
      return MultiQubitState(2, {0.0, r, -r, 0.0});
    case NamedState::GHZ:
      return MultiQubitState(3, {r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, r});
    case NamedState::GHZMinus:
      return MultiQubitState(3, {r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -r});
    case NamedState::W:
      return MultiQubitState(3, {0.0, w, w, 0.0, w, 0.0, 0.0, 0.0});
  }
  throw std::invalid_argument("named_state: unknown name");
}

}  // namespace qq
