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

#include "oqw/chain.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oqw/config.hpp"
#include "oqw/error.hpp"

namespace oqw {

ChainParams::ChainParams(double omega) : omega_(omega), lambda_(1.0 - omega) {
  if (!(omega > 0.0 && omega <= 1.0)) {
    throw DomainError("omega must lie in (0, 1], got " + std::to_string(omega));
  }
}

ChainParams bath_to_rates(const BathParams& bath) {
  if (!(bath.gamma > 0.0) || !std::isfinite(bath.gamma)) throw DomainError("gamma must be positive");
  if (!(bath.nbar >= 0.0)) throw DomainError("mean occupation must be non-negative");
  if (std::isinf(bath.nbar)) return ChainParams(0.5);
  return ChainParams((bath.nbar + 1.0) / (2.0 * bath.nbar + 1.0));
}

std::vector<double> classical_marginal_step(const ChainParams& params, std::size_t num_slices,
                                            std::span<const double> p) {
  if (p.size() != num_slices + 1) {
    throw ShapeError("marginal vector has " + std::to_string(p.size()) + " entries, expected " +
                     std::to_string(num_slices + 1));
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(std::abs(total - 1.0) <= kTolerances.trace)) throw DomainError("marginal vector does not sum to 1");

  const double w = params.omega();
  const double l = params.lambda();
  const std::size_t last = num_slices;
  std::vector<double> next(p.size(), 0.0);
  next[0] += l * p[0];
  next[last] += w * p[last];
  for (std::size_t t = 0; t < last; ++t) {
    next[t + 1] += w * p[t];
    next[t] += l * p[t + 1];
  }
  return next;
}

std::vector<double> analytic_chain_steady(const ChainParams& params, std::size_t num_slices) {
  const double w = params.omega();
  const double l = params.lambda();
  if (!(w > 0.0 && w < 1.0)) throw DomainError("analytic steady state needs omega in (0, 1)");
  const std::size_t n = num_slices + 1;
  std::vector<double> p(n);
  if (w == l) {
    p.assign(n, 1.0 / static_cast<double>(n));
    return p;
  }
  // x = ln r. For x > 0 divide through by r^T so nothing overflows:
  //   p_t = r^{t-T} (1 - 1/r) / (1 - r^{-(T+1)}).
  const double x = std::log(w) - std::log(l);
  const double big_t = static_cast<double>(num_slices);
  for (std::size_t t = 0; t < n; ++t) {
    const double td = static_cast<double>(t);
    if (x > 0.0) {
      p[t] = std::exp((td - big_t) * x) * (-std::expm1(-x)) / (-std::expm1(-(big_t + 1.0) * x));
    } else {
      p[t] = std::exp(td * x) * std::expm1(x) / std::expm1((big_t + 1.0) * x);
    }
  }
  return p;
}

}  // namespace oqw
