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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "oqw/kernels.hpp"
#include "oqw/matrix.hpp"

namespace oqw {

struct Triplet {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Complex CSR matrix. Used for Liouvillian superoperators, where a dense
/// representation would be dim^4 entries.
class SparseMatrix {
 public:
  /// Duplicates are summed; exact zeros after summation are dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  /// Nonzero entries of a dense matrix.
  static SparseMatrix from_dense(const ComplexMatrix& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  /// y = A x through the active kernel table.
  void multiply(std::span<const Complex> x, std::span<Complex> y) const;
  /// y = A x through a specific kernel table.
  void multiply(const kernels::KernelTable& table, std::span<const Complex> x,
                std::span<Complex> y) const;

  ComplexMatrix to_dense() const;

  kernels::CsrView view() const noexcept;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> row_ptr_;
  std::vector<std::uint32_t> col_idx_;
  std::vector<Complex> values_;
};

}  // namespace oqw
