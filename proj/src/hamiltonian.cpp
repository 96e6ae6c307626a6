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

#include "svpsym/hamiltonian.hpp"

#include <string>

#include "svpsym/errors.hpp"

namespace svpsym {

ReducedGram reduce_gram(const GramMatrix& gram, const ConstraintsMatrix& a) {
  if (a.cols() == 0) throw EmptyKernel("reduce_gram: constraints matrix has no columns");
  if (a.rows() != gram.dim()) throw InvalidArgument("reduce_gram: dimension mismatch");
  const RealMatrix ad = a.entries.cast<double>();
  RealMatrix f = ad.transpose() * gram.entries() * ad;
  // Symmetrize away rounding so the form is exactly symmetric.
  f = 0.5 * (f + f.transpose()).eval();
  return ReducedGram{std::move(f)};
}

CoeffVector apply_constraints(const ConstraintsMatrix& a, std::span<const std::int64_t> m) {
  if (m.size() != static_cast<std::size_t>(a.cols())) {
    throw InvalidArgument("apply_constraints: coordinate vector has wrong length");
  }
  CoeffVector n(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) n[static_cast<std::size_t>(i)] += a.entries(i, j) * m[static_cast<std::size_t>(j)];
  }
  return n;
}

QubitLayout::QubitLayout(int registers, int bits_per_register)
    : registers_(registers), bits_(bits_per_register) {
  if (registers < 1) throw InvalidArgument("QubitLayout: need at least one register");
  if (bits_per_register < 1 || bits_per_register > kMaxBitsPerRegister) {
    throw InvalidArgument("QubitLayout: bits per register must lie in [1, 8]");
  }
  if (registers * bits_per_register > kMaxQubits) {
    throw ResourceLimit("QubitLayout: " + std::to_string(registers * bits_per_register) +
                        " qubits exceeds the limit of " + std::to_string(kMaxQubits));
  }
}

CoeffVector QubitLayout::decode(std::uint64_t basis_state) const {
  CoeffVector out(static_cast<std::size_t>(registers_));
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  const std::int64_t offset = std::int64_t{1} << (bits_ - 1);
  for (int i = 0; i < registers_; ++i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>((basis_state >> (i * bits_)) & mask) - offset;
  }
  return out;
}

std::uint64_t QubitLayout::encode(std::span<const std::int64_t> values) const {
  if (values.size() != static_cast<std::size_t>(registers_)) {
    throw InvalidArgument("QubitLayout::encode: wrong number of values");
  }
  const std::int64_t offset = std::int64_t{1} << (bits_ - 1);
  std::uint64_t state = 0;
  for (int i = 0; i < registers_; ++i) {
    const std::int64_t v = values[static_cast<std::size_t>(i)];
    if (v < -offset || v >= offset) throw InvalidArgument("QubitLayout::encode: value out of range");
    state |= static_cast<std::uint64_t>(v + offset) << (i * bits_);
  }
  return state;
}

std::int64_t decode_register(std::span<const std::uint8_t> bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxBitsPerRegister)) {
    throw InvalidArgument("decode_register: register width must lie in [1, 8]");
  }
  std::int64_t value = -(std::int64_t{1} << (bits.size() - 1));
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] > 1) throw InvalidArgument("decode_register: bits must be 0 or 1");
    value += static_cast<std::int64_t>(bits[j]) << j;
  }
  return value;
}

DiagonalHamiltonian::DiagonalHamiltonian(QubitLayout layout, RealMatrix form, double penalty)
    : layout_(layout), form_(std::move(form)), penalty_(penalty) {
  if (form_.rows() != layout_.registers() || form_.cols() != layout_.registers()) {
    throw InvalidArgument("DiagonalHamiltonian: form does not match the register count");
  }
}

double DiagonalHamiltonian::energy(std::uint64_t basis_state) const {
  const CoeffVector m = layout_.decode(basis_state);
  for (std::int64_t v : m) {
    if (v != 0) return quadratic_form(form_, m);
  }
  return penalty_;
}

DiagonalHamiltonian build_hamiltonian(const RealMatrix& form, int bits_per_register, double penalty) {
  return DiagonalHamiltonian(QubitLayout(static_cast<int>(form.rows()), bits_per_register), form,
                             penalty);
}

std::vector<double> energy_table(const DiagonalHamiltonian& h) {
  const std::uint64_t size = std::uint64_t{1} << h.layout().total_qubits();
  std::vector<double> table(size);
  for (std::uint64_t b = 0; b < size; ++b) table[b] = h.energy(b);
  return table;
}

}  // namespace svpsym
