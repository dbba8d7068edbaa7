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

#include "oqw/walk.hpp"

#include <algorithm>
#include <cmath>

#include "oqw/error.hpp"
#include "oqw/kernels.hpp"

namespace oqw {

OpenQuantumWalk::OpenQuantumWalk(std::size_t num_nodes, std::size_t dim) : num_nodes_(num_nodes), dim_(dim) {
  if (num_nodes == 0 || dim == 0) throw DomainError("walk needs at least one node and dimension one");
}

void OpenQuantumWalk::set_transition(std::size_t source, std::size_t target, ComplexMatrix op) {
  if (source >= num_nodes_ || target >= num_nodes_) throw DomainError("transition node out of range");
  if (op.rows() != dim_ || op.cols() != dim_) throw ShapeError("coin must be dim x dim");
  const auto key_less = [](const Transition& t, std::pair<std::size_t, std::size_t> key) {
    return std::pair(t.source, t.target) < key;
  };
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), std::pair(source, target), key_less);
  ComplexMatrix adj = dagger(op);
  if (it != transitions_.end() && it->source == source && it->target == target) {
    it->op = std::move(op);
    it->op_dagger = std::move(adj);
  } else {
    transitions_.insert(it, Transition{source, target, std::move(op), std::move(adj)});
  }
}

const ComplexMatrix* OpenQuantumWalk::transition(std::size_t source, std::size_t target) const {
  for (const Transition& t : transitions_) {
    if (t.source == source && t.target == target) return &t.op;
  }
  return nullptr;
}

std::vector<NormalizationViolation> validate(const OpenQuantumWalk& walk, double tol) {
  std::vector<ComplexMatrix> sums(walk.num_nodes(), ComplexMatrix(walk.dim(), walk.dim()));
  for (const Transition& t : walk.transitions()) sums[t.source] += matmul(t.op_dagger, t.op);
  const ComplexMatrix eye = ComplexMatrix::identity(walk.dim());
  std::vector<NormalizationViolation> out;
  for (std::size_t j = 0; j < walk.num_nodes(); ++j) {
    const double residual = frobenius_distance(sums[j], eye);
    if (!(residual <= tol)) out.push_back({j, residual});
  }
  return out;
}

BlockState::BlockState(std::vector<ComplexMatrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ShapeError("block state needs at least one node");
  const std::size_t d = blocks_.front().rows();
  for (const ComplexMatrix& b : blocks_) {
    if (b.rows() != d || b.cols() != d) throw ShapeError("blocks must be square and equally sized");
  }
}

BlockState BlockState::localized(std::size_t num_nodes, std::size_t node, std::span<const Complex> psi) {
  if (node >= num_nodes) throw DomainError("initial node out of range");
  std::vector<ComplexMatrix> blocks(num_nodes, ComplexMatrix(psi.size(), psi.size()));
  blocks[node] = ComplexMatrix::projector(psi);
  return BlockState(std::move(blocks));
}

std::vector<double> BlockState::probabilities() const {
  std::vector<double> p;
  p.reserve(blocks_.size());
  for (const ComplexMatrix& b : blocks_) p.push_back(trace(b).real());
  return p;
}

double BlockState::total_trace() const {
  double sum = 0.0;
  for (const ComplexMatrix& b : blocks_) sum += trace(b).real();
  return sum;
}

std::optional<std::string> BlockState::check(const Tolerances& tol) const {
  const double total = total_trace();
  if (!(std::abs(total - 1.0) <= tol.trace)) return "total trace is " + std::to_string(total);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (!(hermiticity_residual(blocks_[i]) <= tol.hermitian)) {
      return "block " + std::to_string(i) + " is not Hermitian";
    }
    if (!psd_check(blocks_[i], tol.psd)) return "block " + std::to_string(i) + " is not positive";
  }
  return std::nullopt;
}

ComplexMatrix local_map(const OpenQuantumWalk& walk, std::size_t node, const ComplexMatrix& rho) {
  if (node >= walk.num_nodes()) throw DomainError("node " + std::to_string(node) + " not in walk");
  if (rho.rows() != walk.dim() || rho.cols() != walk.dim()) throw ShapeError("local_map: rho must be dim x dim");
  ComplexMatrix out(walk.dim(), walk.dim());
  for (const Transition& t : walk.transitions()) {
    if (t.source == node) out += matmul(matmul(t.op, rho), t.op_dagger);
  }
  return out;
}

BlockState step(const OpenQuantumWalk& walk, const BlockState& state) {
  if (state.num_nodes() != walk.num_nodes() || state.dim() != walk.dim()) {
    throw ShapeError("state does not match the walk");
  }
  const std::size_t d = walk.dim();
  const kernels::KernelTable& k = kernels::active();
  std::vector<ComplexMatrix> next(walk.num_nodes(), ComplexMatrix(d, d));
  ComplexMatrix scratch(d, d);
  for (const Transition& t : walk.transitions()) {
    const ComplexMatrix& rho = state.block(t.source);
    k.gemm(t.op.data().data(), rho.data().data(), scratch.data().data(), d, d, d, false);
    k.gemm(scratch.data().data(), t.op_dagger.data().data(), next[t.target].data().data(), d, d, d, true);
  }
  return BlockState(std::move(next));
}

OpenQuantumWalk build_dqc_chain(std::span<const ComplexMatrix> unitaries, const ChainParams& params) {
  if (unitaries.empty()) throw DomainError("DQC chain needs a circuit with at least one slice");
  const std::size_t last = unitaries.size();
  const std::size_t d = unitaries.front().rows();
  OpenQuantumWalk walk(last + 1, d);
  const double fwd = std::sqrt(params.omega());
  const double back = std::sqrt(params.lambda());
  const ComplexMatrix eye = ComplexMatrix::identity(d);
  for (std::size_t t = 0; t < last; ++t) walk.set_transition(t, t + 1, fwd * unitaries[t]);
  walk.set_transition(last, last, fwd * eye);
  if (back > 0.0) {
    walk.set_transition(0, 0, back * eye);
    for (std::size_t t = 1; t <= last; ++t) walk.set_transition(t, t - 1, back * dagger(unitaries[t - 1]));
  }
  return walk;
}

OpenQuantumWalk build_dqc_chain(const Circuit& circuit, const ChainParams& params) {
  if (circuit.num_slices() == 0) throw DomainError("DQC chain needs a circuit with at least one slice");
  const std::vector<ComplexMatrix> unitaries = circuit_unitaries(circuit);
  return build_dqc_chain(std::span<const ComplexMatrix>(unitaries), params);
}

OpenQuantumWalk two_node_gate_walk(const ComplexMatrix& u, const ChainParams& params) {
  if (!is_unitary(u, kTolerances.unitary_input)) throw DomainError("gate walk needs a unitary coin");
  return build_dqc_chain(std::span<const ComplexMatrix>(&u, 1), params);
}

std::vector<std::vector<Complex>> computation_path(std::span<const ComplexMatrix> unitaries,
                                                   std::span<const Complex> psi0) {
  std::vector<std::vector<Complex>> path;
  path.reserve(unitaries.size() + 1);
  path.emplace_back(psi0.begin(), psi0.end());
  for (const ComplexMatrix& u : unitaries) path.push_back(matvec(u, path.back()));
  return path;
}

}  // namespace oqw
