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

// Continuous-time reference for the dissipative computation: the purely
// dissipative master equation
//
//   d rho / dt = sum_k L_k rho L_k^dagger - 1/2 {L_k^dagger L_k, rho}
//
// on the (internal (x) register) space of a DQC chain.

#include <cstddef>
#include <span>
#include <vector>

#include "oqw/circuit.hpp"
#include "oqw/matrix.hpp"
#include "oqw/sparse.hpp"

namespace oqw {

/// Dimension cap for dense Lindblad models.
inline constexpr std::size_t kLindbladDimensionCap = 256;

/// Jump operators on a dim-dimensional space, optionally tagged with the
/// register layout (internal (x) node, node index fastest).
class LindbladModel {
 public:
  /// Throws ShapeError when a jump is not dim x dim or dim is not a multiple
  /// of num_nodes. An empty jump list is the zero generator.
  LindbladModel(std::size_t dim, std::vector<ComplexMatrix> jumps, std::size_t num_nodes = 1);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t internal_dim() const noexcept { return dim_ / num_nodes_; }
  const std::vector<ComplexMatrix>& jumps() const noexcept { return jumps_; }

 private:
  std::size_t dim_;
  std::size_t num_nodes_;
  std::vector<ComplexMatrix> jumps_;
};

/// One register jump per slice,
///   L_t = U_t (x) |t><t-1| + U_t^dagger (x) |t-1><t|,  t = 1..T,
/// and, with `include_reset`, one reset jump per qubit,
///   L_q = |0><1|_q (x) |0><0|_register.
/// Throws DomainError for an empty circuit and CapacityError when
/// 2^qubits * (T + 1) exceeds `dimension_cap`.
LindbladModel build_dqc_lindblad(const Circuit& circuit, bool include_reset,
                                 std::size_t dimension_cap = kLindbladDimensionCap);

/// Generator applied to rho with dense products. Throws ShapeError.
ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho);

/// The generator as a sparse superoperator on row-major vec(rho).
class Liouvillian {
 public:
  explicit Liouvillian(const LindbladModel& model);

  std::size_t dim() const noexcept { return dim_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }

  /// out = L(rho), both dim x dim.
  void apply(const ComplexMatrix& rho, ComplexMatrix& out) const;

 private:
  std::size_t dim_;
  SparseMatrix matrix_;
};

struct IntegrateOptions {
  double dt = 0.01;
  /// Stop once ||rhs(rho)||_F falls below this.
  double stop_tol = 1e-8;
  double max_time = 2000.0;
  /// Node marginals are sampled at this time spacing (0 disables).
  double sample_interval = 1.0;
};

struct MarginalSample {
  double time;
  std::vector<double> marginals;
};

struct IntegrationResult {
  ComplexMatrix rho;
  double time = 0.0;
  std::size_t steps = 0;
  /// True when the stopping rule fired before max_time.
  bool stationary = false;
  double final_rhs_norm = 0.0;
  std::vector<MarginalSample> samples{};
};

/// Fixed-step classical RK4. After every step rho is re-Hermitized and its
/// trace renormalized if it drifted by more than 1e-12. Throws DomainError
/// for non-positive dt or an invalid density matrix.
IntegrationResult integrate(const LindbladModel& model, const ComplexMatrix& rho0,
                            const IntegrateOptions& options = {});

/// Register populations sum_s rho[(s,t),(s,t)].
std::vector<double> node_marginals(const LindbladModel& model, const ComplexMatrix& rho);

/// Unnormalized internal block of register `node`.
ComplexMatrix register_block(const LindbladModel& model, const ComplexMatrix& rho, std::size_t node);

/// (x) ordering helper: rho_internal (x) |node><node| on num_nodes registers.
ComplexMatrix lift_to_register(const ComplexMatrix& internal, std::size_t num_nodes, std::size_t node);

/// sum_t p_t |psi_t><psi_t| (x) |t><t| for the computation path of `circuit`.
/// Uniform p gives the DQC steady state.
ComplexMatrix dqc_mixture(const Circuit& circuit, std::span<const Complex> psi0, std::span<const double> weights);

}  // namespace oqw
