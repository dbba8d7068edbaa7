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

// Reference kernels. These define the semantics the SIMD variants are tested
// against, so they stay deliberately plain.

#include "kernels_internal.hpp"

namespace oqw::kernels::detail {
namespace {

// Plain product; std::complex operator* routes through the Annex G
// NaN-recovery path, which the SIMD variants do not reproduce.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    if (!accumulate) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = 0.0;
    }
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      if (aip == Complex{}) continue;
      const Complex* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += mul(aip, brow[j]);
    }
  }
}

void axpy(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += mul(alpha, x[i]);
}

void spmv(const CsrView& a, const Complex* x, Complex* y) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    Complex acc{};
    for (std::size_t e = a.row_ptr[r]; e < a.row_ptr[r + 1]; ++e) acc += mul(a.values[e], x[a.col_idx[e]]);
    y[r] = acc;
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{Backend::kScalar, &gemm, &axpy, &spmv};
  return table;
}

}  // namespace oqw::kernels::detail
