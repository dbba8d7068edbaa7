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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oqw/matrix.hpp"

namespace oqw {

enum class GateKind { kH, kX, kS, kSdg, kT, kTdg, kR, kPhase, kCnot, kCPhase };

/// Number of qubits a gate of this kind acts on (1 or 2).
std::size_t arity(GateKind kind);

bool is_parametric(GateKind kind);

/// Mnemonic used by the circuit text format ("H", "CNOT", "CP", ...).
std::string_view mnemonic(GateKind kind);

/// A gate on 1-based qubit indices. For controlled kinds the first qubit is
/// the control; controlled-phase is symmetric and stored with the lower index
/// first.
class Gate {
 public:
  static Gate single(GateKind kind, std::size_t qubit);
  static Gate phase(std::size_t qubit, double theta);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate cphase(std::size_t a, std::size_t b, double theta);

  GateKind kind() const noexcept { return kind_; }
  std::span<const std::size_t> qubits() const noexcept { return {qubits_.data(), arity(kind_)}; }
  /// Phase angle in radians; zero for fixed gates.
  double theta() const noexcept { return theta_; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::size_t q0, std::size_t q1, double theta);

  GateKind kind_;
  std::array<std::size_t, 2> qubits_;
  double theta_;
};

/// Gates applied in one time step, on pairwise-disjoint qubits.
struct Slice {
  std::vector<Gate> gates;

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// Ordered sequence of slices on `num_qubits` qubits; slice t is U_{t+1}.
class Circuit {
 public:
  /// Throws DomainError when a gate is out of range, a slice is empty, or
  /// two gates in one slice share a qubit.
  Circuit(std::string name, std::size_t num_qubits, std::vector<Slice> slices);

  const std::string& name() const noexcept { return name_; }
  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << num_qubits_; }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  std::size_t num_slices() const noexcept { return slices_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::string name_;
  std::size_t num_qubits_;
  std::vector<Slice> slices_;
};

/// 2x2 or 4x4 unitary of a gate kind. `theta` is read only for parametric
/// kinds.
ComplexMatrix gate_matrix(GateKind kind, double theta = 0.0);

/// The gate acting on a `num_qubits` register; qubit 1 is the most
/// significant bit of the basis index.
ComplexMatrix embed(const Gate& gate, std::size_t num_qubits);

/// Product of the embedded gates of one slice.
ComplexMatrix slice_unitary(const Slice& slice, std::size_t num_qubits);

/// [U_1, ..., U_T], one per slice.
std::vector<ComplexMatrix> circuit_unitaries(const Circuit& circuit);

/// U_T ... U_1. Throws DomainError for an empty circuit.
ComplexMatrix circuit_product(const Circuit& circuit);

/// Toffoli from H, T, T^dagger and CNOT gates in 13 slices.
Circuit toffoli13();

/// Quantum Fourier transform on 3 or 4 qubits, including the final swaps as
/// CNOT triples. 9 slices for n = 3, 16 for n = 4.
Circuit qft(std::size_t num_qubits);

/// Entries exp(2 pi i jk / dim) / sqrt(dim).
ComplexMatrix dft_matrix(std::size_t dim);

/// 8x8 Toffoli permutation (|110> <-> |111>).
ComplexMatrix toffoli_matrix();

/// Parses the line-oriented circuit format. Throws ParseError.
Circuit parse_circuit(std::string_view text, std::string name = "circuit");

/// Inverse of parse_circuit.
std::string render_circuit(const Circuit& circuit);

/// Product state for a bitstring such as "110" (first character = qubit 1).
/// Throws DomainError on other characters.
std::vector<Complex> basis_state(std::string_view bits);

}  // namespace oqw
