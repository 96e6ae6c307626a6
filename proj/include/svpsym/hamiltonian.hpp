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

// Reduced quadratic forms F = A^T G A and their diagonal qubit Hamiltonians.
//
// Each integer variable is stored in a register of K qubits holding bits
// b_0..b_{K-1} (least significant first) and decodes to
//   -2^(K-1) + sum_j b_j 2^j  in  [-2^(K-1), 2^(K-1) - 1].
// Register i occupies qubits [iK, (i+1)K); qubit t is bit t of the basis index.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "svpsym/constraints.hpp"
#include "svpsym/lattice.hpp"

namespace svpsym {

inline constexpr int kMaxQubits = 24;
inline constexpr int kMaxBitsPerRegister = 8;

struct ReducedGram {
  RealMatrix entries;  // M x M
};

// Throws EmptyKernel when A has no columns.
ReducedGram reduce_gram(const GramMatrix& gram, const ConstraintsMatrix& a);

// n = A m
CoeffVector apply_constraints(const ConstraintsMatrix& a, std::span<const std::int64_t> m);

class QubitLayout {
 public:
  QubitLayout(int registers, int bits_per_register);

  int registers() const { return registers_; }
  int bits_per_register() const { return bits_; }
  int total_qubits() const { return registers_ * bits_; }

  // Integer vector encoded by a computational basis state.
  CoeffVector decode(std::uint64_t basis_state) const;
  std::uint64_t encode(std::span<const std::int64_t> values) const;

 private:
  int registers_;
  int bits_;
};

// bits[j] is b_j (least significant first); each entry must be 0 or 1.
std::int64_t decode_register(std::span<const std::uint8_t> bits);

class DiagonalHamiltonian {
 public:
  DiagonalHamiltonian(QubitLayout layout, RealMatrix form, double penalty);

  const QubitLayout& layout() const { return layout_; }
  const RealMatrix& form() const { return form_; }
  double penalty() const { return penalty_; }

  // m^T form m for the decoded vector m, or the penalty when m = 0.
  double energy(std::uint64_t basis_state) const;

 private:
  QubitLayout layout_;
  RealMatrix form_;
  double penalty_;
};

// penalty defaults to G_00 of the originating lattice at the call sites.
DiagonalHamiltonian build_hamiltonian(const RealMatrix& form, int bits_per_register, double penalty);

// energy(b) for every basis state b; length 2^(registers * K).
std::vector<double> energy_table(const DiagonalHamiltonian& h);

}  // namespace svpsym
