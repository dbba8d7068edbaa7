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

#include "oqw/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "oqw/error.hpp"
#include "oqw/kernels.hpp"

namespace oqw {
namespace {

// Entry cap for a single matrix; far above anything a desk-scale walk needs.
constexpr std::size_t kMaxEntries = std::size_t{1} << 30;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " differ");
  }
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw SizeError("matrix dimension overflow");
  }
  return a * b;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  if (checked_mul(rows, cols) > kMaxEntries) throw SizeError("matrix exceeds the entry cap");
  data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix literal must be non-empty");
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("matrix literal rows differ in length");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) throw DomainError("matrix literal has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  if (!m.all_finite()) throw DomainError("diagonal has non-finite entries");
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> entries) {
  return diagonal(std::span<const Complex>(entries.begin(), entries.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
  }
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) { return add_scaled(1.0, other); }

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) { return add_scaled(-1.0, other); }

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(Complex scale, const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  kernels::active().axpy(data_.size(), scale, other.data_.data(), data_.data());
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = checked_mul(a.rows(), b.rows());
  const std::size_t cols = checked_mul(a.cols(), b.cols());
  ComplexMatrix out(rows, cols);
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex s = a(i1, j1);
      if (s == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
        }
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  kernels::active().gemm(a.data().data(), b.data().data(), out.data().data(), a.rows(), a.cols(),
                         b.cols(), false);
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw ShapeError("apply: vector length does not match columns");
  std::vector<Complex> out(a.rows());
  kernels::active().gemm(a.data().data(), v.data(), out.data(), a.rows(), a.cols(), 1, false);
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("trace of a non-square matrix");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) sum += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(sum);
}

double hermiticity_residual(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) sum += std::norm(a(r, c) - std::conj(a(c, r)));
  }
  return std::sqrt(sum);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (!(hermiticity_residual(a) <= kTolerances.hermitian)) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("hermitian_eigenvalues: no convergence");
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double trace_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (double v : hermitian_eigenvalues(a)) sum += std::abs(v);
  return sum;
}

double unitarity_residual(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  return frobenius_distance(matmul(dagger(a), a), ComplexMatrix::identity(a.rows()));
}

bool is_unitary(const ComplexMatrix& a, double tol) { return unitarity_residual(a) <= tol; }

bool psd_check(const ComplexMatrix& a, double tol) {
  if (!(hermiticity_residual(a) <= kTolerances.hermitian)) return false;
  return hermitian_eigenvalues(a).front() >= -tol;
}

Complex expectation(std::span<const Complex> psi, const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() != psi.size()) throw ShapeError("expectation: dimension mismatch");
  const std::vector<Complex> a_psi = matvec(a, psi);
  Complex sum{};
  for (std::size_t i = 0; i < psi.size(); ++i) sum += std::conj(psi[i]) * a_psi[i];
  return sum;
}

}  // namespace oqw
