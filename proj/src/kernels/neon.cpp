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

// NEON kernels for AArch64. A float64x2_t holds one complex double; products
// are split into re(a)*b and im(a)*swap(b) accumulators like the AVX2 path.

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace oqw::kernels::detail {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

inline float64x2_t swap_re_im(float64x2_t v) { return vextq_f64(v, v, 1); }

// [re_acc - im_acc, re_acc + im_acc] lane-wise: (re, im) of the product.
inline float64x2_t combine(float64x2_t re_acc, float64x2_t im_acc) {
  static const double kSigns[2] = {-1.0, 1.0};
  return vfmaq_f64(re_acc, im_acc, vld1q_f64(kSigns));
}

void gemm(const Complex* a, const Complex* b, Complex* c, std::size_t m, std::size_t k,
          std::size_t n, bool accumulate) {
  for (std::size_t i = 0; i < m; ++i) {
    const Complex* arow = a + i * k;
    Complex* crow = c + i * n;
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      float64x2_t re0 = vdupq_n_f64(0.0), im0 = vdupq_n_f64(0.0);
      float64x2_t re1 = vdupq_n_f64(0.0), im1 = vdupq_n_f64(0.0);
      for (std::size_t p = 0; p < k; ++p) {
        const float64x2_t ar = vdupq_n_f64(arow[p].real());
        const float64x2_t ai = vdupq_n_f64(arow[p].imag());
        const double* bp = as_doubles(b + p * n + j);
        const float64x2_t b0 = vld1q_f64(bp);
        const float64x2_t b1 = vld1q_f64(bp + 2);
        re0 = vfmaq_f64(re0, ar, b0);
        im0 = vfmaq_f64(im0, ai, swap_re_im(b0));
        re1 = vfmaq_f64(re1, ar, b1);
        im1 = vfmaq_f64(im1, ai, swap_re_im(b1));
      }
      float64x2_t out0 = combine(re0, im0);
      float64x2_t out1 = combine(re1, im1);
      double* cp = as_doubles(crow + j);
      if (accumulate) {
        out0 = vaddq_f64(out0, vld1q_f64(cp));
        out1 = vaddq_f64(out1, vld1q_f64(cp + 2));
      }
      vst1q_f64(cp, out0);
      vst1q_f64(cp + 2, out1);
    }
    for (; j < n; ++j) {
      float64x2_t re = vdupq_n_f64(0.0), im = vdupq_n_f64(0.0);
      for (std::size_t p = 0; p < k; ++p) {
        const float64x2_t bv = vld1q_f64(as_doubles(b + p * n + j));
        re = vfmaq_f64(re, vdupq_n_f64(arow[p].real()), bv);
        im = vfmaq_f64(im, vdupq_n_f64(arow[p].imag()), swap_re_im(bv));
      }
      float64x2_t out = combine(re, im);
      double* cp = as_doubles(crow + j);
      if (accumulate) out = vaddq_f64(out, vld1q_f64(cp));
      vst1q_f64(cp, out);
    }
  }
}

void axpy(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const float64x2_t ai = vdupq_n_f64(alpha.imag());
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(as_doubles(x + i));
    double* yp = as_doubles(y + i);
    const float64x2_t prod = combine(vmulq_f64(ar, xv), vmulq_f64(ai, swap_re_im(xv)));
    vst1q_f64(yp, vaddq_f64(vld1q_f64(yp), prod));
  }
}

void spmv(const CsrView& a, const Complex* x, Complex* y) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    float64x2_t re = vdupq_n_f64(0.0), im = vdupq_n_f64(0.0);
    for (std::size_t e = a.row_ptr[r]; e < a.row_ptr[r + 1]; ++e) {
      const float64x2_t xv = vld1q_f64(as_doubles(x + a.col_idx[e]));
      re = vfmaq_f64(re, vdupq_n_f64(a.values[e].real()), xv);
      im = vfmaq_f64(im, vdupq_n_f64(a.values[e].imag()), swap_re_im(xv));
    }
    vst1q_f64(as_doubles(y + r), combine(re, im));
  }
}

}  // namespace

const KernelTable& neon_table() {
  static constexpr KernelTable table{Backend::kNeon, &gemm, &axpy, &spmv};
  return table;
}

}  // namespace oqw::kernels::detail
