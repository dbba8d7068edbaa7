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

// AVX2+FMA kernels. Built with -mavx2 -mfma; only reached through dispatch
// after a CPUID check.
//
// A __m256d holds two interleaved complex doubles [re0, im0, re1, im1]. A
// product a*b is accumulated as two real FMAs, re(a)*b and im(a)*swap(b),
// combined once at the end with addsub.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace oqw::kernels::detail {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    const Complex* arow = a + i * k;
    Complex* crow = c + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d re_lo = _mm256_setzero_pd();
      __m256d im_lo = _mm256_setzero_pd();
      __m256d re_hi = _mm256_setzero_pd();
      __m256d im_hi = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        const double* bp = as_doubles(b + p * n + j);
        const __m256d b_lo = _mm256_loadu_pd(bp);
        const __m256d b_hi = _mm256_loadu_pd(bp + 4);
        re_lo = _mm256_fmadd_pd(ar, b_lo, re_lo);
        im_lo = _mm256_fmadd_pd(ai, swap_re_im(b_lo), im_lo);
        re_hi = _mm256_fmadd_pd(ar, b_hi, re_hi);
        im_hi = _mm256_fmadd_pd(ai, swap_re_im(b_hi), im_hi);
      }
      __m256d lo = _mm256_addsub_pd(re_lo, im_lo);
      __m256d hi = _mm256_addsub_pd(re_hi, im_hi);
      double* cp = as_doubles(crow + j);
      if (accumulate) {
        lo = _mm256_add_pd(lo, _mm256_loadu_pd(cp));
        hi = _mm256_add_pd(hi, _mm256_loadu_pd(cp + 4));
      }
      _mm256_storeu_pd(cp, lo);
      _mm256_storeu_pd(cp + 4, hi);
    }
    for (; j + 2 <= n; j += 2) {
      __m256d re = _mm256_setzero_pd();
      __m256d im = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d bv = _mm256_loadu_pd(as_doubles(b + p * n + j));
        re = _mm256_fmadd_pd(_mm256_set1_pd(arow[p].real()), bv, re);
        im = _mm256_fmadd_pd(_mm256_set1_pd(arow[p].imag()), swap_re_im(bv), im);
      }
      __m256d out = _mm256_addsub_pd(re, im);
      double* cp = as_doubles(crow + j);
      if (accumulate) out = _mm256_add_pd(out, _mm256_loadu_pd(cp));
      _mm256_storeu_pd(cp, out);
    }
    for (; j < n; ++j) {
      Complex acc{};
      for (std::size_t p = 0; p < k; ++p) acc += mul(arow[p], b[p * n + j]);
      crow[j] = accumulate ? crow[j] + acc : acc;
    }
  }
}

void axpy(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
    double* yp = as_doubles(y + i);
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swap_re_im(xv)));
    _mm256_storeu_pd(yp, _mm256_add_pd(_mm256_loadu_pd(yp), prod));
  }
  for (; i < n; ++i) y[i] += mul(alpha, x[i]);
}

inline __m256d load_pair(const Complex* a, const Complex* b) {
  return _mm256_insertf128_pd(_mm256_castpd128_pd256(_mm_loadu_pd(as_doubles(a))),
                              _mm_loadu_pd(as_doubles(b)), 1);
}

// Superoperator rows are short (a few entries), so rows are processed in
// pairs with one complex lane per row instead of reducing within a row.
void spmv(const CsrView& a, const Complex* x, Complex* y) {
  std::size_t r = 0;
  for (; r + 2 <= a.rows; r += 2) {
    const std::size_t b0 = a.row_ptr[r];
    const std::size_t b1 = a.row_ptr[r + 1];
    const std::size_t n0 = b1 - b0;
    const std::size_t n1 = a.row_ptr[r + 2] - b1;
    const std::size_t common = n0 < n1 ? n0 : n1;
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    for (std::size_t e = 0; e < common; ++e) {
      const __m256d v = load_pair(a.values + b0 + e, a.values + b1 + e);
      const __m256d xv = load_pair(x + a.col_idx[b0 + e], x + a.col_idx[b1 + e]);
      re = _mm256_fmadd_pd(_mm256_movedup_pd(v), xv, re);
      im = _mm256_fmadd_pd(_mm256_permute_pd(v, 0b1111), swap_re_im(xv), im);
    }
    alignas(32) Complex out[2];
    _mm256_store_pd(as_doubles(out), _mm256_addsub_pd(re, im));
    for (std::size_t e = common; e < n0; ++e) out[0] += mul(a.values[b0 + e], x[a.col_idx[b0 + e]]);
    for (std::size_t e = common; e < n1; ++e) out[1] += mul(a.values[b1 + e], x[a.col_idx[b1 + e]]);
    y[r] = out[0];
    y[r + 1] = out[1];
  }
  for (; r < a.rows; ++r) {
    Complex acc{};
    for (std::size_t e = a.row_ptr[r]; e < a.row_ptr[r + 1]; ++e) acc += mul(a.values[e], x[a.col_idx[e]]);
    y[r] = acc;
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{Backend::kAvx2, &gemm, &axpy, &spmv};
  return table;
}

}  // namespace oqw::kernels::detail
