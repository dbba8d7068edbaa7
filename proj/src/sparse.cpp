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

#include "oqw/sparse.hpp"

#include <algorithm>
#include <limits>

#include "oqw/error.hpp"

namespace oqw {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw ShapeError("sparse matrix dimensions must be positive");
  if (cols > std::numeric_limits<std::uint32_t>::max()) throw SizeError("sparse matrix too wide");
  for (const Triplet& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw ShapeError("sparse triplet out of range");
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  row_ptr_.assign(rows + 1, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    const std::size_t row = triplets[i].row;
    const std::size_t col = triplets[i].col;
    Complex sum{};
    for (; i < triplets.size() && triplets[i].row == row && triplets[i].col == col; ++i) {
      sum += triplets[i].value;
    }
    if (sum == Complex{}) continue;
    col_idx_.push_back(static_cast<std::uint32_t>(col));
    values_.push_back(sum);
    ++row_ptr_[row + 1];
  }
  for (std::size_t r = 0; r < rows; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

SparseMatrix SparseMatrix::from_dense(const ComplexMatrix& dense) {
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < dense.rows(); ++r) {
    for (std::size_t c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != Complex{}) triplets.push_back({r, c, dense(r, c)});
    }
  }
  return {dense.rows(), dense.cols(), std::move(triplets)};
}

void SparseMatrix::multiply(std::span<const Complex> x, std::span<Complex> y) const {
  multiply(kernels::active(), x, y);
}

void SparseMatrix::multiply(const kernels::KernelTable& table, std::span<const Complex> x,
                            std::span<Complex> y) const {
  if (x.size() != cols_ || y.size() != rows_) throw ShapeError("sparse multiply: length mismatch");
  table.spmv(view(), x.data(), y.data());
}

ComplexMatrix SparseMatrix::to_dense() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t e = row_ptr_[r]; e < row_ptr_[r + 1]; ++e) out(r, col_idx_[e]) = values_[e];
  }
  return out;
}

kernels::CsrView SparseMatrix::view() const noexcept {
  return {rows_, cols_, row_ptr_.data(), col_idx_.data(), values_.data()};
}

}  // namespace oqw
