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

// Node-marginal (classical) view of a DQC chain walk. Because every transition
// operator of a chain is a scalar multiple of a unitary, the probability of
// finding the walker at register t evolves as a birth-death chain with
// forward weight omega and backward weight lambda.

#include <cstddef>
#include <span>
#include <vector>

namespace oqw {

/// Forward/backward weights with lambda = 1 - omega.
class ChainParams {
 public:
  /// omega in (0, 1]. omega = 1 is the absorbing zero-temperature sweep.
  /// Throws DomainError otherwise.
  explicit ChainParams(double omega);

  double omega() const noexcept { return omega_; }
  double lambda() const noexcept { return lambda_; }
  bool is_absorbing() const noexcept { return lambda_ == 0.0; }

 private:
  double omega_;
  double lambda_;
};

/// Bath coupling behind a chain: spontaneous-emission coefficient gamma and
/// mean thermal occupation nbar.
struct BathParams {
  double gamma = 1.0;
  double nbar = 0.0;
};

/// omega ~ gamma (n + 1), lambda ~ gamma n, normalized to omega + lambda = 1:
/// omega = (n + 1) / (2n + 1). gamma cancels. nbar = +inf gives omega = 1/2.
/// Throws DomainError for gamma <= 0 or nbar < 0.
ChainParams bath_to_rates(const BathParams& bath);

/// One step of the marginal chain on registers 0..num_slices:
///   p'_t = omega p_{t-1} + lambda p_{t+1},
/// with self-loops lambda at register 0 and omega at the last register.
/// Throws ShapeError on length mismatch, DomainError if p does not sum to 1.
std::vector<double> classical_marginal_step(const ChainParams& params, std::size_t num_slices,
                                            std::span<const double> p);

/// Stationary marginal of the chain: uniform for omega = 1/2, otherwise
/// geometric with ratio r = omega / lambda (detailed balance),
///   p_t = r^t (r - 1) / (r^{T+1} - 1),
/// evaluated in log space. Throws DomainError unless omega is in (0, 1).
std::vector<double> analytic_chain_steady(const ChainParams& params, std::size_t num_slices);

}  // namespace oqw
