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

#include "oqw/circuit.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "oqw/error.hpp"

namespace oqw {
namespace {

constexpr double kPi = std::numbers::pi;

Complex phase_factor(double theta) { return std::polar(1.0, theta); }

}  // namespace

std::size_t arity(GateKind kind) {
  return kind == GateKind::kCnot || kind == GateKind::kCPhase ? 2 : 1;
}

bool is_parametric(GateKind kind) { return kind == GateKind::kPhase || kind == GateKind::kCPhase; }

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
      return "H";
    case GateKind::kX:
      return "X";
    case GateKind::kS:
      return "S";
    case GateKind::kSdg:
      return "Sdg";
    case GateKind::kT:
      return "T";
    case GateKind::kTdg:
      return "Tdg";
    case GateKind::kR:
      return "R";
    case GateKind::kPhase:
      return "P";
    case GateKind::kCnot:
      return "CNOT";
    case GateKind::kCPhase:
      return "CP";
  }
  return "?";
}

Gate::Gate(GateKind kind, std::size_t q0, std::size_t q1, double theta)
    : kind_(kind), qubits_{q0, q1}, theta_(theta) {
  if (q0 == 0 || (arity(kind) == 2 && q1 == 0)) throw DomainError("qubit indices are 1-based");
  if (arity(kind) == 2 && q0 == q1) throw DomainError("controlled gate needs two distinct qubits");
  if (!std::isfinite(theta)) throw DomainError("phase must be finite");
}

Gate Gate::single(GateKind kind, std::size_t qubit) {
  if (arity(kind) != 1 || is_parametric(kind)) {
    throw DomainError(std::string(mnemonic(kind)) + " is not a fixed single-qubit gate");
  }
  return {kind, qubit, 0, 0.0};
}

Gate Gate::phase(std::size_t qubit, double theta) { return {GateKind::kPhase, qubit, 0, theta}; }

Gate Gate::cnot(std::size_t control, std::size_t target) {
  return {GateKind::kCnot, control, target, 0.0};
}

Gate Gate::cphase(std::size_t a, std::size_t b, double theta) {
  return {GateKind::kCPhase, std::min(a, b), std::max(a, b), theta};
}

Circuit::Circuit(std::string name, std::size_t num_qubits, std::vector<Slice> slices)
    : name_(std::move(name)), num_qubits_(num_qubits), slices_(std::move(slices)) {
  if (num_qubits_ == 0) throw DomainError("circuit needs at least one qubit");
  if (num_qubits_ > 16) throw DomainError("circuit exceeds 16 qubits");
  for (std::size_t t = 0; t < slices_.size(); ++t) {
    const std::string where = "slice " + std::to_string(t + 1) + ": ";
    if (slices_[t].gates.empty()) throw DomainError(where + "empty slice");
    std::set<std::size_t> used;
    for (const Gate& gate : slices_[t].gates) {
      for (std::size_t q : gate.qubits()) {
        if (q > num_qubits_) throw DomainError(where + "qubit " + std::to_string(q) + " out of range");
        if (!used.insert(q).second) throw DomainError(where + "qubit " + std::to_string(q) + " used twice");
      }
    }
  }
}

ComplexMatrix gate_matrix(GateKind kind, double theta) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::kH:
      return {{r, r}, {r, -r}};
    case GateKind::kX:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::kS:
      return ComplexMatrix::diagonal({1.0, Complex(0.0, 1.0)});
    case GateKind::kSdg:
      return ComplexMatrix::diagonal({1.0, Complex(0.0, -1.0)});
    case GateKind::kT:
      return ComplexMatrix::diagonal({1.0, phase_factor(kPi / 4)});
    case GateKind::kTdg:
      return ComplexMatrix::diagonal({1.0, phase_factor(-kPi / 4)});
    case GateKind::kR:
      return ComplexMatrix::diagonal({1.0, phase_factor(kPi / 8)});
    case GateKind::kPhase:
      return ComplexMatrix::diagonal({1.0, phase_factor(theta)});
    case GateKind::kCnot:
      return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
    case GateKind::kCPhase:
      return ComplexMatrix::diagonal({1.0, 1.0, 1.0, phase_factor(theta)});
  }
  throw DomainError("unknown gate kind");
}

ComplexMatrix embed(const Gate& gate, std::size_t num_qubits) {
  const auto qubits = gate.qubits();
  for (std::size_t q : qubits) {
    if (q > num_qubits) {
      throw DomainError("gate on qubit " + std::to_string(q) + " does not fit " +
                        std::to_string(num_qubits) + " qubits");
    }
  }
  const ComplexMatrix local = gate_matrix(gate.kind(), gate.theta());
  const std::size_t dim = std::size_t{1} << num_qubits;

  // Bit position of each gate qubit in the global index (qubit 1 = MSB).
  std::array<std::size_t, 2> shift{};
  std::size_t gate_mask = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    shift[k] = num_qubits - qubits[k];
    gate_mask |= std::size_t{1} << shift[k];
  }
  const auto local_index = [&](std::size_t global) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) idx = (idx << 1) | ((global >> shift[k]) & 1);
    return idx;
  };

  ComplexMatrix out(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const std::size_t rest = row & ~gate_mask;
    const std::size_t lr = local_index(row);
    // Columns sharing the spectator bits of `row`.
    for (std::size_t lc = 0; lc < local.cols(); ++lc) {
      std::size_t col = rest;
      for (std::size_t k = 0; k < qubits.size(); ++k) {
        const std::size_t bit = (lc >> (qubits.size() - 1 - k)) & 1;
        col |= bit << shift[k];
      }
      out(row, col) = local(lr, lc);
    }
  }
  return out;
}

ComplexMatrix slice_unitary(const Slice& slice, std::size_t num_qubits) {
  if (slice.gates.empty()) throw DomainError("empty slice");
  std::set<std::size_t> used;
  for (const Gate& gate : slice.gates) {
    for (std::size_t q : gate.qubits()) {
      if (!used.insert(q).second) throw DomainError("slice gates overlap on qubit " + std::to_string(q));
    }
  }
  ComplexMatrix u = embed(slice.gates.front(), num_qubits);
  for (std::size_t g = 1; g < slice.gates.size(); ++g) u = matmul(embed(slice.gates[g], num_qubits), u);
  return u;
}

std::vector<ComplexMatrix> circuit_unitaries(const Circuit& circuit) {
  std::vector<ComplexMatrix> out;
  out.reserve(circuit.num_slices());
  for (const Slice& slice : circuit.slices()) out.push_back(slice_unitary(slice, circuit.num_qubits()));
  return out;
}

ComplexMatrix circuit_product(const Circuit& circuit) {
  if (circuit.num_slices() == 0) throw DomainError("circuit has no slices");
  ComplexMatrix product = ComplexMatrix::identity(circuit.dimension());
  for (const ComplexMatrix& u : circuit_unitaries(circuit)) product = matmul(u, product);
  return product;
}

Circuit toffoli13() {
  using K = GateKind;
  const auto one = [](Gate g) { return Slice{{g}}; };
  std::vector<Slice> slices{
      one(Gate::single(K::kH, 3)),
      one(Gate::cnot(2, 3)),
      one(Gate::single(K::kTdg, 3)),
      one(Gate::cnot(1, 3)),
      one(Gate::single(K::kT, 3)),
      one(Gate::cnot(2, 3)),
      one(Gate::single(K::kTdg, 3)),
      one(Gate::cnot(1, 3)),
      Slice{{Gate::single(K::kT, 2), Gate::single(K::kT, 3)}},
      one(Gate::single(K::kH, 3)),
      one(Gate::cnot(1, 2)),
      Slice{{Gate::single(K::kT, 1), Gate::single(K::kTdg, 2)}},
      one(Gate::cnot(1, 2)),
  };
  return {"toffoli", 3, std::move(slices)};
}

Circuit qft(std::size_t num_qubits) {
  if (num_qubits != 3 && num_qubits != 4) throw DomainError("qft supports 3 or 4 qubits");
  std::vector<Slice> slices;
  for (std::size_t target = 1; target <= num_qubits; ++target) {
    slices.push_back({{Gate::single(GateKind::kH, target)}});
    for (std::size_t control = target + 1; control <= num_qubits; ++control) {
      const double theta = kPi / static_cast<double>(std::size_t{1} << (control - target));
      slices.push_back({{Gate::cphase(control, target, theta)}});
    }
  }
  // Bit reversal: swap(a, b) = CNOT(a,b) CNOT(b,a) CNOT(a,b).
  for (std::size_t a = 1, b = num_qubits; a < b; ++a, --b) {
    slices.push_back({{Gate::cnot(a, b)}});
    slices.push_back({{Gate::cnot(b, a)}});
    slices.push_back({{Gate::cnot(a, b)}});
  }
  return {"qft" + std::to_string(num_qubits), num_qubits, std::move(slices)};
}

ComplexMatrix dft_matrix(std::size_t dim) {
  if (dim == 0) throw DomainError("dft_matrix: dimension must be positive");
  ComplexMatrix out(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce jk mod dim before scaling so the angle stays in [0, 2 pi).
      const double angle = 2.0 * kPi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      out(j, k) = norm * phase_factor(angle);
    }
  }
  return out;
}

ComplexMatrix toffoli_matrix() {
  ComplexMatrix out = ComplexMatrix::identity(8);
  out(6, 6) = 0.0;
  out(7, 7) = 0.0;
  out(6, 7) = 1.0;
  out(7, 6) = 1.0;
  return out;
}

std::vector<Complex> basis_state(std::string_view bits) {
  if (bits.empty() || bits.size() > 16) throw DomainError("bitstring must have 1..16 characters");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bitstring may only contain 0 and 1");
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  std::vector<Complex> psi(std::size_t{1} << bits.size());
  psi[index] = 1.0;
  return psi;
}

}  // namespace oqw
