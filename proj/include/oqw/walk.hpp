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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oqw/chain.hpp"
#include "oqw/circuit.hpp"
#include "oqw/config.hpp"
#include "oqw/matrix.hpp"

namespace oqw {

/// Coin B_j^i applied while jumping from node `source` (j) to `target` (i).
struct Transition {
  std::size_t source;
  std::size_t target;
  ComplexMatrix op;
  ComplexMatrix op_dagger;
};

/// Open quantum walk on a finite graph: one dim x dim coin per directed edge.
/// The dilated operators B_j^i (x) |i><j| are never materialized.
class OpenQuantumWalk {
 public:
  OpenQuantumWalk(std::size_t num_nodes, std::size_t dim);

  /// Adds or replaces the coin for source -> target. Throws DomainError for
  /// nodes out of range and ShapeError for a coin that is not dim x dim.
  void set_transition(std::size_t source, std::size_t target, ComplexMatrix op);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const Transition> transitions() const noexcept { return transitions_; }

  /// Coin for source -> target, or nullptr when the edge is absent.
  const ComplexMatrix* transition(std::size_t source, std::size_t target) const;

 private:
  std::size_t num_nodes_;
  std::size_t dim_;
  std::vector<Transition> transitions_;  // sorted by (source, target)
};

struct NormalizationViolation {
  std::size_t source;
  /// ||sum_i B_j^i^dagger B_j^i - I||_F
  double residual;
};

/// Sources whose coins are not normalized within `tol`. Empty means the walk
/// is a valid CPTP map.
std::vector<NormalizationViolation> validate(const OpenQuantumWalk& walk,
                                             double tol = kTolerances.normalization);

/// Walker state sum_i rho_i (x) |i><i|, one unnormalized block per node.
class BlockState {
 public:
  /// Blocks must be square and equally sized. Throws ShapeError otherwise.
  explicit BlockState(std::vector<ComplexMatrix> blocks);

  /// Pure state |psi><psi| at `node`, zero elsewhere.
  static BlockState localized(std::size_t num_nodes, std::size_t node, std::span<const Complex> psi);

  std::size_t num_nodes() const noexcept { return blocks_.size(); }
  std::size_t dim() const noexcept { return blocks_.front().rows(); }
  const ComplexMatrix& block(std::size_t node) const { return blocks_.at(node); }
  std::span<const ComplexMatrix> blocks() const noexcept { return blocks_; }

  /// Re Tr(rho_i) per node.
  std::vector<double> probabilities() const;
  double total_trace() const;

  /// Description of the first broken invariant (unit total trace, Hermitian
  /// and PSD blocks), or nullopt.
  std::optional<std::string> check(const Tolerances& tol = kTolerances) const;

 private:
  std::vector<ComplexMatrix> blocks_;
};

/// M_j(rho) = sum_i B_j^i rho B_j^i^dagger.
ComplexMatrix local_map(const OpenQuantumWalk& walk, std::size_t node, const ComplexMatrix& rho);

/// rho_i' = sum_j B_j^i rho_j B_j^i^dagger.
BlockState step(const OpenQuantumWalk& walk, const BlockState& state);

/// Chain of registers 0..T for a circuit with T slices. Interior register t
/// moves forward with sqrt(omega) U_{t+1} and back with sqrt(lambda) U_t^dagger;
/// register 0 stays with sqrt(lambda) I and register T with sqrt(omega) I.
/// Zero-weight edges (omega = 1) are omitted. Throws DomainError for an empty
/// circuit.
OpenQuantumWalk build_dqc_chain(const Circuit& circuit, const ChainParams& params);

/// Same construction from explicit unitaries U_1..U_T.
OpenQuantumWalk build_dqc_chain(std::span<const ComplexMatrix> unitaries, const ChainParams& params);

/// Two-node walk implementing a single gate U. Throws DomainError when U is
/// not unitary within kTolerances.unitary_input.
OpenQuantumWalk two_node_gate_walk(const ComplexMatrix& u, const ChainParams& params);

/// |psi_t> = U_t ... U_1 |psi_0> for t = 0..T.
std::vector<std::vector<Complex>> computation_path(std::span<const ComplexMatrix> unitaries,
                                                   std::span<const Complex> psi0);

}  // namespace oqw
