// Copyright 2026 The svpsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense noiseless statevector simulator. Little-endian: qubit t is bit t of
// the basis-state index.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace svpsym {

using Amplitude = std::complex<double>;

enum class GateKind { RY, RZ, CNOT };

struct Gate {
  GateKind kind;
  int target = 0;
  int control = -1;  // CNOT only
  double angle = 0.0;

  static Gate ry(int qubit, double theta) { return {GateKind::RY, qubit, -1, theta}; }
  static Gate rz(int qubit, double theta) { return {GateKind::RZ, qubit, -1, theta}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, 0.0}; }

  Gate inverse() const { return {kind, target, control, -angle}; }
};

class StateVector {
 public:
  // |0...0> on the given number of qubits.
  explicit StateVector(int qubits);

  int qubits() const { return qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }

  double norm_sq() const;
  double probability(std::uint64_t basis_state) const { return std::norm(amplitudes_[basis_state]); }

 private:
  int qubits_;
  std::vector<Amplitude> amplitudes_;
};

// RY(t) = exp(-i t Y / 2), RZ(t) = exp(-i t Z / 2).
void apply_gate(StateVector& state, const Gate& gate);

// Multiplies each amplitude by the matching entry of a diagonal operator.
void apply_diagonal(StateVector& state, std::span<const double> diagonal);

// <bra| P_q |ket> for the Pauli generator of a rotation gate on qubit q
// (Y for RY, Z for RZ).
Amplitude generator_matrix_element(const StateVector& bra, const StateVector& ket, const Gate& gate);

Amplitude inner_product(const StateVector& bra, const StateVector& ket);

}  // namespace svpsym
