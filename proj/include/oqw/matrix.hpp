// Copyright 2026 The oqw Authors
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
#include <span>
#include <vector>

#include "oqw/config.hpp"

namespace oqw {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix. Throws ShapeError when either dimension is zero.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Row-by-row literal. Rows must be non-empty, equally long, finite.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  static ComplexMatrix diagonal(std::initializer_list<Complex> entries);
  /// |ket><bra|
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
  /// |psi><psi|
  static ComplexMatrix projector(std::span<const Complex> psi) { return outer(psi, psi); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  /// this += scale * other
  ComplexMatrix& add_scaled(Complex scale, const ComplexMatrix& other);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Kronecker product. Throws SizeError if the result dimensions overflow.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Throws ShapeError unless a.cols() == b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * v for a column vector v.
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v);

/// Throws ShapeError for non-square input.
Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// ||a - b||_F. Throws ShapeError on mismatched shapes.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - a^dagger||_F, or +inf for a non-square matrix.
double hermiticity_residual(const ComplexMatrix& a);

/// Ascending eigenvalues of a Hermitian matrix. Throws DomainError when the
/// input is not Hermitian within `kTolerances.hermitian`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a);

/// ||a^dagger a - I||_F, or +inf for a non-square matrix.
double unitarity_residual(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& a, double tol);

/// Lowest eigenvalue >= -tol. False for non-Hermitian input.
bool psd_check(const ComplexMatrix& a, double tol);

/// <psi| a |psi>
Complex expectation(std::span<const Complex> psi, const ComplexMatrix& a);

}  // namespace oqw
