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

#include "svpsym/statevector.hpp"

#include <cmath>
#include <string>

#include "svpsym/errors.hpp"
#include "svpsym/hamiltonian.hpp"

namespace svpsym {

StateVector::StateVector(int qubits) : qubits_(qubits) {
  if (qubits < 1) throw InvalidArgument("StateVector: need at least one qubit");
  if (qubits > kMaxQubits) {
    throw ResourceLimit("StateVector: " + std::to_string(qubits) + " qubits exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
  amplitudes_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) total += std::norm(a);
  return total;
}

namespace {

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubits()) throw InvalidArgument("gate qubit index out of range");
}

// Calls f(i0, i1) for every index pair differing only in bit `qubit`.
template <typename F>
void for_each_pair(std::size_t size, int qubit, F&& f) {
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t block = 0; block < size; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) f(i, i + stride);
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  check_qubit(state, gate.target);
  // Interleaved (re, im) view; std::complex guarantees this layout.
  double* a = reinterpret_cast<double*>(state.amplitudes().data());
  const std::size_t size = state.size();
  switch (gate.kind) {
    case GateKind::RY: {
      const double c = std::cos(0.5 * gate.angle);
      const double s = std::sin(0.5 * gate.angle);
      for_each_pair(size, gate.target, [&](std::size_t i0, std::size_t i1) {
        double* p0 = a + 2 * i0;
        double* p1 = a + 2 * i1;
        const double r0 = p0[0], m0 = p0[1], r1 = p1[0], m1 = p1[1];
        p0[0] = c * r0 - s * r1;
        p0[1] = c * m0 - s * m1;
        p1[0] = s * r0 + c * r1;
        p1[1] = s * m0 + c * m1;
      });
      break;
    }
    case GateKind::RZ: {
      // lo = exp(-i t/2), hi = conj(lo)
      const double c = std::cos(0.5 * gate.angle);
      const double s = std::sin(0.5 * gate.angle);
      for_each_pair(size, gate.target, [&](std::size_t i0, std::size_t i1) {
        double* p0 = a + 2 * i0;
        double* p1 = a + 2 * i1;
        const double r0 = p0[0], m0 = p0[1], r1 = p1[0], m1 = p1[1];
        p0[0] = c * r0 + s * m0;
        p0[1] = c * m0 - s * r0;
        p1[0] = c * r1 - s * m1;
        p1[1] = c * m1 + s * r1;
      });
      break;
    }
    case GateKind::CNOT: {
      check_qubit(state, gate.control);
      if (gate.control == gate.target) throw InvalidArgument("CNOT control equals target");
      Amplitude* amp = state.amplitudes().data();
      const std::size_t cmask = std::size_t{1} << gate.control;
      const std::size_t tmask = std::size_t{1} << gate.target;
      for (std::size_t i = 0; i < size; ++i) {
        if ((i & cmask) && !(i & tmask)) std::swap(amp[i], amp[i | tmask]);
      }
      break;
    }
  }
}

void apply_diagonal(StateVector& state, std::span<const double> diagonal) {
  if (diagonal.size() != state.size()) throw InvalidArgument("apply_diagonal: length mismatch");
  double* a = reinterpret_cast<double*>(state.amplitudes().data());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    a[2 * i] *= diagonal[i];
    a[2 * i + 1] *= diagonal[i];
  }
}

Amplitude generator_matrix_element(const StateVector& bra, const StateVector& ket, const Gate& gate) {
  if (bra.size() != ket.size()) throw InvalidArgument("generator_matrix_element: size mismatch");
  check_qubit(ket, gate.target);
  const double* l = reinterpret_cast<const double*>(bra.amplitudes().data());
  const double* r = reinterpret_cast<const double*>(ket.amplitudes().data());
  // conj(x) * y = (xr yr + xi yi) + i (xr yi - xi yr)
  double re = 0.0;
  double im = 0.0;
  switch (gate.kind) {
    case GateKind::RY:
      // Y|0> = i|1>, Y|1> = -i|0>; total = sum conj(l1) r0 - conj(l0) r1, result i * total
      for_each_pair(ket.size(), gate.target, [&](std::size_t i0, std::size_t i1) {
        const double* l0 = l + 2 * i0;
        const double* l1 = l + 2 * i1;
        const double* r0 = r + 2 * i0;
        const double* r1 = r + 2 * i1;
        re += (l1[0] * r0[0] + l1[1] * r0[1]) - (l0[0] * r1[0] + l0[1] * r1[1]);
        im += (l1[0] * r0[1] - l1[1] * r0[0]) - (l0[0] * r1[1] - l0[1] * r1[0]);
      });
      return Amplitude{-im, re};
    case GateKind::RZ:
      for_each_pair(ket.size(), gate.target, [&](std::size_t i0, std::size_t i1) {
        const double* l0 = l + 2 * i0;
        const double* l1 = l + 2 * i1;
        const double* r0 = r + 2 * i0;
        const double* r1 = r + 2 * i1;
        re += (l0[0] * r0[0] + l0[1] * r0[1]) - (l1[0] * r1[0] + l1[1] * r1[1]);
        im += (l0[0] * r0[1] - l0[1] * r0[0]) - (l1[0] * r1[1] - l1[1] * r1[0]);
      });
      return Amplitude{re, im};
    case GateKind::CNOT:
      break;
  }
  throw InvalidArgument("generator_matrix_element: gate has no parameter");
}

Amplitude inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) throw InvalidArgument("inner_product: size mismatch");
  const double* l = reinterpret_cast<const double*>(bra.amplitudes().data());
  const double* r = reinterpret_cast<const double*>(ket.amplitudes().data());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < ket.size(); ++i) {
    re += l[2 * i] * r[2 * i] + l[2 * i + 1] * r[2 * i + 1];
    im += l[2 * i] * r[2 * i + 1] - l[2 * i + 1] * r[2 * i];
  }
  return Amplitude{re, im};
}

}  // namespace svpsym
