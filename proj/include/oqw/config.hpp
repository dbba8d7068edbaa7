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

namespace oqw {

/// Numerical tolerances shared across the library. Every check that takes a
/// default tolerance reads it from `kTolerances`.
struct Tolerances {
  /// ||a - a^dagger||_F accepted as Hermitian.
  double hermitian = 1e-10;
  /// ||a^dagger a - I||_F accepted as unitary when a gate or circuit is built.
  double unitary = 1e-12;
  /// Unitarity accepted for user-supplied coins (two-node walk).
  double unitary_input = 1e-10;
  /// Frobenius residual of sum_i B^dagger B - I per source node.
  double normalization = 1e-10;
  /// Lowest eigenvalue accepted as positive semidefinite.
  double psd = 1e-10;
  /// Drift of the total trace of a walker state.
  double trace = 1e-10;
  /// Trace drift that triggers renormalization in the Lindblad integrator.
  double renormalize_drift = 1e-12;
};

inline constexpr Tolerances kTolerances{};

}  // namespace oqw
