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
#include <span>
#include <vector>

#include "oqw/matrix.hpp"
#include "oqw/walk.hpp"

namespace oqw {

struct ConvergenceReport {
  /// Steps executed.
  std::size_t steps = 0;
  bool converged = false;
  /// Node probabilities after each step; row 0 is the initial state.
  std::vector<std::vector<double>> history{};
  /// Tr(rho_target) of the final state.
  double final_detection = 0.0;
  /// <psi_target| rho_target / Tr(rho_target) |psi_target>; 0 when the
  /// target node is empty.
  double final_fidelity = 0.0;
  /// Distance between the last two states.
  double final_distance = 0.0;
  BlockState final_state;
};

/// sum_i ||a_i - b_i||_1 (trace norm per node).
double state_distance(const BlockState& a, const BlockState& b);

/// Iterates `step` until the state moves by less than `tol` in
/// state_distance, or `max_steps` is reached (converged = false, no throw).
/// Throws DomainError for tol <= 0 and ShapeError/DomainError when the
/// initial state or target do not fit the walk.
ConvergenceReport run_until_converged(const OpenQuantumWalk& walk, const BlockState& init, double tol,
                                      std::size_t max_steps, std::size_t target_node,
                                      std::span<const Complex> target_state,
                                      bool record_history = true);

/// rho_node / Tr(rho_node). Throws DomainError when the node is empty.
ComplexMatrix conditional_state(const BlockState& state, std::size_t node);

/// <psi| rho |psi> for a unit-trace rho.
double fidelity(std::span<const Complex> psi, const ComplexMatrix& rho);

}  // namespace oqw
