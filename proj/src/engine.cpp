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

#include "oqw/engine.hpp"

#include <cmath>
#include <utility>

#include "oqw/error.hpp"

namespace oqw {

double state_distance(const BlockState& a, const BlockState& b) {
  if (a.num_nodes() != b.num_nodes() || a.dim() != b.dim()) throw ShapeError("state_distance: shapes differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.num_nodes(); ++i) {
    if (a.block(i) == b.block(i)) continue;
    sum += trace_norm(a.block(i) - b.block(i));
  }
  return sum;
}

double fidelity(std::span<const Complex> psi, const ComplexMatrix& rho) { return expectation(psi, rho).real(); }

ComplexMatrix conditional_state(const BlockState& state, std::size_t node) {
  if (node >= state.num_nodes()) throw DomainError("node out of range");
  const double p = trace(state.block(node)).real();
  if (!(p > 0.0)) throw DomainError("node " + std::to_string(node) + " has zero probability");
  return (1.0 / p) * state.block(node);
}

ConvergenceReport run_until_converged(const OpenQuantumWalk& walk, const BlockState& init, double tol,
                                      std::size_t max_steps, std::size_t target_node,
                                      std::span<const Complex> target_state, bool record_history) {
  if (!(tol > 0.0)) throw DomainError("convergence tolerance must be positive");
  if (init.num_nodes() != walk.num_nodes() || init.dim() != walk.dim()) {
    throw ShapeError("initial state does not match the walk");
  }
  if (const auto broken = init.check()) throw DomainError("invalid initial state: " + *broken);
  if (target_node >= walk.num_nodes()) throw DomainError("target node out of range");
  if (target_state.size() != walk.dim()) throw ShapeError("target state has the wrong dimension");

  std::vector<std::vector<double>> history;
  if (record_history) history.push_back(init.probabilities());

  BlockState current = init;
  std::size_t steps = 0;
  bool converged = false;
  double distance = 0.0;
  while (steps < max_steps) {
    BlockState next = step(walk, current);
    ++steps;
    distance = state_distance(next, current);
    current = std::move(next);
    if (record_history) history.push_back(current.probabilities());
    if (distance < tol) {
      converged = true;
      break;
    }
  }

  const double detection = trace(current.block(target_node)).real();
  const double fid = detection > 0.0 ? fidelity(target_state, conditional_state(current, target_node)) : 0.0;
  return ConvergenceReport{
      .steps = steps,
      .converged = converged,
      .history = std::move(history),
      .final_detection = detection,
      .final_fidelity = fid,
      .final_distance = distance,
      .final_state = std::move(current),
  };
}

}  // namespace oqw
