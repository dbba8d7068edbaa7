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

// Inner-loop arithmetic for dense and sparse complex operands.
//
// Every kernel has a portable scalar reference and, where the target allows,
// an AVX2+FMA (x86-64) or NEON (AArch64) variant. The active table is chosen
// once at startup from CPU features; OQW_KERNELS=scalar|avx2|neon|auto
// overrides the choice. All variants agree with the scalar reference to
// rounding (FMA contraction only).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace oqw::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend backend);

/// Compressed sparse row view. `row_ptr` has rows + 1 entries.
struct CsrView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  const std::size_t* row_ptr = nullptr;
  const std::uint32_t* col_idx = nullptr;
  const Complex* values = nullptr;
};

/// C (m x n) = A (m x k) * B (k x n), or C += A * B when `accumulate`.
/// Row-major, no aliasing between C and A/B.
using GemmFn = void (*)(const Complex* a, const Complex* b, Complex* c, std::size_t m,
                        std::size_t k, std::size_t n, bool accumulate);
/// y += alpha * x over n entries.
using AxpyFn = void (*)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
/// y = A * x. y must not alias x.
using SpmvFn = void (*)(const CsrView& a, const Complex* x, Complex* y);

struct KernelTable {
  Backend backend;
  GemmFn gemm;
  AxpyFn axpy;
  SpmvFn spmv;
};

/// True when the variant is compiled in and the running CPU supports it.
bool is_available(Backend backend);

/// Every backend usable on this machine, scalar first.
std::vector<Backend> available_backends();

/// Fastest available backend.
Backend best_backend();

/// Table for a specific backend. Throws DomainError when unavailable.
const KernelTable& table_for(Backend backend);

/// Table used by the library's matrix operations.
const KernelTable& active();

/// Switches the active table. Throws DomainError when unavailable.
void set_active(Backend backend);

/// Parses "scalar", "avx2", "neon" or "auto" (best available).
Backend parse_backend(std::string_view name);

}  // namespace oqw::kernels
