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
#include <initializer_list>
#include <string>
#include <vector>

namespace qq {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense row-major complex matrix. Values are immutable by convention once
/// built; all operations return new matrices.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

  /// Row-by-row construction, e.g. CMatrix::from_rows({{1, 0}, {0, -1}}).
  static CMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);
  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols);
  static CMatrix diagonal(const std::vector<cplx>& d);
  static CMatrix diagonal(const std::vector<double>& d);
  /// |a><b| outer product.
  static CMatrix outer(const CVector& a, const CVector& b);
  /// Column matrix from a vector.
  static CMatrix column(const CVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  CVector col(std::size_t j) const;
  CVector row(std::size_t i) const;
  void set_col(std::size_t j, const CVector& v);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;

  cplx trace() const;
  double max_abs() const;         // max |entry|
  double frobenius_norm() const;

  double hermiticity_error() const;  // ||M - M^dag||_max
  double unitarity_error() const;    // ||M^dag M - I||_max
  bool is_hermitian(double tolerance) const;
  bool is_unitary(double tolerance) const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cplx s);

  std::string str(int precision = 4) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);
CMatrix operator*(double s, CMatrix a);
CVector operator*(const CMatrix& a, const CVector& x);

/// Kronecker product with (A (x) B)[i q + k, j q + l] = A[i,j] B[k,l].
CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const CVector& a, const CVector& b);
double norm(const CVector& v);
void normalize(CVector& v);
CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(cplx s, CVector v);
double max_abs_diff(const CVector& a, const CVector& b);

}  // namespace qq
