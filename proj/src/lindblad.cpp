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

#include "oqw/lindblad.hpp"

#include <cmath>
#include <utility>

#include "oqw/error.hpp"
#include "oqw/walk.hpp"

namespace oqw {
namespace {

struct Entry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

std::vector<Entry> nonzeros(const ComplexMatrix& m) {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex{}) out.push_back({r, c, m(r, c)});
    }
  }
  return out;
}

// Reset |0><1| on one qubit (1-based, qubit 1 = MSB) of an n-qubit register.
ComplexMatrix lowering(std::size_t qubit, std::size_t num_qubits) {
  const std::size_t d = std::size_t{1} << num_qubits;
  const std::size_t bit = std::size_t{1} << (num_qubits - qubit);
  ComplexMatrix out(d, d);
  for (std::size_t s = 0; s < d; ++s) {
    if (s & bit) out(s & ~bit, s) = 1.0;
  }
  return out;
}

void hermitize(ComplexMatrix& rho) {
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < rho.cols(); ++c) {
      const Complex avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      rho(r, c) = avg;
      rho(c, r) = std::conj(avg);
    }
  }
}

}  // namespace

LindbladModel::LindbladModel(std::size_t dim, std::vector<ComplexMatrix> jumps, std::size_t num_nodes)
    : dim_(dim), num_nodes_(num_nodes), jumps_(std::move(jumps)) {
  if (dim == 0 || num_nodes == 0 || dim % num_nodes != 0) {
    throw ShapeError("Lindblad dimension must be a positive multiple of the register count");
  }
  for (const ComplexMatrix& l : jumps_) {
    if (l.rows() != dim || l.cols() != dim) throw ShapeError("jump operator must be dim x dim");
  }
}

LindbladModel build_dqc_lindblad(const Circuit& circuit, bool include_reset, std::size_t dimension_cap) {
  if (circuit.num_slices() == 0) throw DomainError("Lindblad model needs a circuit with at least one slice");
  const std::size_t nodes = circuit.num_slices() + 1;
  const std::size_t d = circuit.dimension();
  const std::size_t dim = d * nodes;
  if (dim > dimension_cap) {
    throw CapacityError("Lindblad model dimension " + std::to_string(dim) + " exceeds the cap of " +
                        std::to_string(dimension_cap));
  }
  const auto index = [nodes](std::size_t s, std::size_t t) { return s * nodes + t; };

  std::vector<ComplexMatrix> jumps;
  const std::vector<ComplexMatrix> unitaries = circuit_unitaries(circuit);
  for (std::size_t t = 1; t < nodes; ++t) {
    const ComplexMatrix& u = unitaries[t - 1];
    ComplexMatrix l(dim, dim);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        l(index(a, t), index(b, t - 1)) = u(a, b);
        l(index(a, t - 1), index(b, t)) = std::conj(u(b, a));
      }
    }
    jumps.push_back(std::move(l));
  }
  if (include_reset) {
    for (std::size_t q = 1; q <= circuit.num_qubits(); ++q) {
      const ComplexMatrix r = lowering(q, circuit.num_qubits());
      ComplexMatrix l(dim, dim);
      for (const Entry& e : nonzeros(r)) l(index(e.row, 0), index(e.col, 0)) = e.value;
      jumps.push_back(std::move(l));
    }
  }
  return LindbladModel(dim, std::move(jumps), nodes);
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim()) throw ShapeError("rho does not match the model");
  ComplexMatrix out(model.dim(), model.dim());
  for (const ComplexMatrix& l : model.jumps()) {
    const ComplexMatrix l_dag = dagger(l);
    const ComplexMatrix k = matmul(l_dag, l);
    out += matmul(matmul(l, rho), l_dag);
    out.add_scaled(-0.5, matmul(k, rho));
    out.add_scaled(-0.5, matmul(rho, k));
  }
  return out;
}

namespace {

SparseMatrix build_superoperator(const LindbladModel& model) {
  const std::size_t n = model.dim();
  std::vector<Triplet> triplets;
  ComplexMatrix k(n, n);
  for (const ComplexMatrix& l : model.jumps()) {
    const std::vector<Entry> nz = nonzeros(l);
    // (L rho L^dagger)_{ab} = sum_{ij} L_ai rho_ij conj(L_bj)
    for (const Entry& x : nz) {
      for (const Entry& y : nz) {
        triplets.push_back({x.row * n + y.row, x.col * n + y.col, x.value * std::conj(y.value)});
      }
    }
    k += matmul(dagger(l), l);
  }
  for (const Entry& e : nonzeros(k)) {
    const Complex half = -0.5 * e.value;
    for (std::size_t b = 0; b < n; ++b) {
      // (K rho)_{ab}: row (e.row, b), column (e.col, b).
      triplets.push_back({e.row * n + b, e.col * n + b, half});
      // (rho K)_{ab}: row (b, e.col), column (b, e.row).
      triplets.push_back({b * n + e.col, b * n + e.row, half});
    }
  }
  return SparseMatrix(n * n, n * n, std::move(triplets));
}

}  // namespace

Liouvillian::Liouvillian(const LindbladModel& model) : dim_(model.dim()), matrix_(build_superoperator(model)) {}

void Liouvillian::apply(const ComplexMatrix& rho, ComplexMatrix& out) const {
  if (rho.rows() != dim_ || rho.cols() != dim_ || out.rows() != dim_ || out.cols() != dim_) {
    throw ShapeError("Liouvillian::apply: dimension mismatch");
  }
  matrix_.multiply(rho.data(), out.data());
}

IntegrationResult integrate(const LindbladModel& model, const ComplexMatrix& rho0, const IntegrateOptions& options) {
  if (!(options.dt > 0.0)) throw DomainError("integration step must be positive");
  if (!(options.stop_tol > 0.0)) throw DomainError("stopping tolerance must be positive");
  if (rho0.rows() != model.dim() || rho0.cols() != model.dim()) throw ShapeError("rho0 does not match the model");
  if (!(hermiticity_residual(rho0) <= 1e-8) || !(std::abs(trace(rho0) - 1.0) <= 1e-8)) {
    throw DomainError("rho0 must be a unit-trace Hermitian matrix");
  }

  const Liouvillian generator(model);
  const std::size_t n = model.dim();
  const double dt = options.dt;
  ComplexMatrix rho = rho0;
  ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n);

  IntegrationResult result{.rho = rho0};
  const bool sampling = options.sample_interval > 0.0;
  double next_sample = 0.0;
  const auto sample = [&](double time) {
    result.samples.push_back({time, node_marginals(model, rho)});
  };

  std::size_t steps = 0;
  double time = 0.0;
  while (true) {
    generator.apply(rho, k1);
    result.final_rhs_norm = frobenius_norm(k1);
    if (sampling && time >= next_sample - 1e-9 * dt) {
      sample(time);
      next_sample += options.sample_interval;
    }
    if (result.final_rhs_norm < options.stop_tol) {
      result.stationary = true;
      break;
    }
    if (time >= options.max_time) break;

    stage = rho;
    stage.add_scaled(0.5 * dt, k1);
    generator.apply(stage, k2);
    stage = rho;
    stage.add_scaled(0.5 * dt, k2);
    generator.apply(stage, k3);
    stage = rho;
    stage.add_scaled(dt, k3);
    generator.apply(stage, k4);
    rho.add_scaled(dt / 6.0, k1);
    rho.add_scaled(dt / 3.0, k2);
    rho.add_scaled(dt / 3.0, k3);
    rho.add_scaled(dt / 6.0, k4);

    hermitize(rho);
    const double tr = trace(rho).real();
    if (std::abs(tr - 1.0) > kTolerances.renormalize_drift) rho *= 1.0 / tr;
    ++steps;
    time = static_cast<double>(steps) * dt;
  }
  if (sampling && (result.samples.empty() || result.samples.back().time != time)) sample(time);
  result.rho = std::move(rho);
  result.time = time;
  result.steps = steps;
  return result;
}

std::vector<double> node_marginals(const LindbladModel& model, const ComplexMatrix& rho) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim()) throw ShapeError("rho does not match the model");
  const std::size_t nodes = model.num_nodes();
  std::vector<double> p(nodes, 0.0);
  for (std::size_t i = 0; i < model.dim(); ++i) p[i % nodes] += rho(i, i).real();
  return p;
}

ComplexMatrix register_block(const LindbladModel& model, const ComplexMatrix& rho, std::size_t node) {
  if (rho.rows() != model.dim() || rho.cols() != model.dim()) throw ShapeError("rho does not match the model");
  if (node >= model.num_nodes()) throw DomainError("register out of range");
  const std::size_t nodes = model.num_nodes();
  const std::size_t d = model.internal_dim();
  ComplexMatrix out(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) out(a, b) = rho(a * nodes + node, b * nodes + node);
  }
  return out;
}

ComplexMatrix lift_to_register(const ComplexMatrix& internal, std::size_t num_nodes, std::size_t node) {
  if (node >= num_nodes) throw DomainError("register out of range");
  ComplexMatrix proj(num_nodes, num_nodes);
  proj(node, node) = 1.0;
  return kron(internal, proj);
}

ComplexMatrix dqc_mixture(const Circuit& circuit, std::span<const Complex> psi0, std::span<const double> weights) {
  const std::size_t nodes = circuit.num_slices() + 1;
  if (weights.size() != nodes) throw ShapeError("dqc_mixture: one weight per register expected");
  if (psi0.size() != circuit.dimension()) throw ShapeError("dqc_mixture: input state has the wrong dimension");
  const std::vector<ComplexMatrix> unitaries = circuit_unitaries(circuit);
  const auto path = computation_path(unitaries, psi0);
  ComplexMatrix rho(circuit.dimension() * nodes, circuit.dimension() * nodes);
  for (std::size_t t = 0; t < nodes; ++t) {
    rho.add_scaled(weights[t], lift_to_register(ComplexMatrix::projector(path[t]), nodes, t));
  }
  return rho;
}

}  // namespace oqw
