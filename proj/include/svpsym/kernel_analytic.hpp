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

// Closed-form constraints matrices for the kernels of the Fourier-mode
// operators S_q of cyclic and nega-cyclic lattices.
//
// With K = gcd(N, q) the cyclic operators fall into five cases:
//   Cyc1  q = 0
//   Cyc2  K = 1, N odd or a power of two
//   Cyc3  K = 1, N even but not a power of two
//   Cyc4  K > 1, N/K odd or a power of two
//   Cyc5  K > 1, N/K even but not a power of two
// and with L = gcd(2N, 2q + 1) the nega-cyclic operators into four:
//   NegaI    N a power of two (kernel is {0})
//   NegaII   L = 1, N not a power of two
//   NegaIII  L > 1, N = 2^l L with l >= 1
//   NegaIV   L > 1 otherwise
//
// Cases with a nontrivial gcd fold the kernel equation onto an effective
// dimension Nt (N/K, resp. 2N/L): y_l = sum_{k = l mod Nt} n_k must solve a
// coprime cyclic equation of size Nt. Matrices for those cases are the
// lift of a y-space basis back to n-space (see lift_folded in the source).

#pragma once

#include <string_view>
#include <vector>

#include "svpsym/constraints.hpp"
#include "svpsym/lattice.hpp"

namespace svpsym {

enum class CaseTag { Cyc1, Cyc2, Cyc3, Cyc4, Cyc5, NegaI, NegaII, NegaIII, NegaIV };

std::string_view to_string(CaseTag tag);

struct CaseLabel {
  CaseTag tag;
  int gcd_value;  // K = gcd(N, q) for cyclic, L = gcd(2N, 2q + 1) for nega-cyclic
};

// Distinct primes of n in increasing order. Throws for n == 0.
std::vector<int> prime_factors(int n);

bool is_power_of_two(int n);

CaseLabel classify(SymmetryKind kind, int dim, int q);

// One matrix per associated prime, in the order the cases list them; an
// empty list means only the zero vector is known to lie in the kernel.
std::vector<ConstraintsMatrix> constraints_for(SymmetryKind kind, int dim, int q);

}  // namespace svpsym
