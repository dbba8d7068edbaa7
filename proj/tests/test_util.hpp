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

// Shared generators and independent oracles for the test suites. Oracles here
// are written from definitions and never call the code paths they check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "oqw/matrix.hpp"

namespace oqw::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260419);
  return engine;
}

/// Entries uniform in the unit disk.
inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen = rng()) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexMatrix m(rows, cols);
  for (Complex& z : m.data()) z = std::polar(std::sqrt(radius(gen)), angle(gen));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& gen = rng()) {
  const ComplexMatrix a = random_matrix(n, n, gen);
  ComplexMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
  }
  return h;
}

/// A A^dagger / Tr, a full-rank density matrix (computed without matmul).
inline ComplexMatrix random_density(std::size_t n, std::mt19937_64& gen = rng()) {
  const ComplexMatrix a = random_matrix(n, n, gen);
  ComplexMatrix rho(n, n);
  double tr = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += a(r, k) * std::conj(a(c, k));
      rho(r, c) = s;
    }
    tr += rho(r, r).real();
  }
  for (Complex& z : rho.data()) z /= tr;
  return rho;
}

/// Tensor product of random single-qubit pure states, qubit 1 first.
inline std::vector<Complex> random_product_state(std::size_t num_qubits, std::mt19937_64& gen = rng()) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> psi{1.0};
  for (std::size_t q = 0; q < num_qubits; ++q) {
    const double theta = std::acos(1.0 - 2.0 * u(gen)) / 2.0;
    const double phi = 2.0 * std::numbers::pi * u(gen);
    const Complex a = std::cos(theta);
    const Complex b = std::polar(std::sin(theta), phi);
    std::vector<Complex> next;
    next.reserve(psi.size() * 2);
    for (const Complex& z : psi) {
      next.push_back(z * a);
      next.push_back(z * b);
    }
    psi = std::move(next);
  }
  return psi;
}

/// Naive triple loop, the product oracle for kernel and walk checks.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

inline ComplexMatrix naive_dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

/// Permutation matrix sending basis |j> to |perm(j)>.
template <typename Perm>
ComplexMatrix permutation_matrix(std::size_t dim, Perm perm) {
  ComplexMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out(perm(j), j) = 1.0;
  return out;
}

/// exp(2 pi i jk / n) / sqrt(n) computed directly from cos/sin of the full angle.
inline ComplexMatrix dft_oracle(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) * static_cast<double>(k) /
                           static_cast<double>(n);
      out(j, k) = Complex(std::cos(angle), std::sin(angle)) / std::sqrt(static_cast<double>(n));
    }
  }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace oqw::testing
