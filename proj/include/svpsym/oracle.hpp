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

// Exhaustive shortest-vector search over a coefficient box and the
// principal-kernel statistics derived from it.

#pragma once

#include <cstdint>
#include <optional>

#include "svpsym/lattice.hpp"
#include "svpsym/spectral.hpp"

namespace svpsym {

struct OracleResult {
  CoeffVector shortest;  // nonzero
  double length_sq = 0.0;
  std::uint64_t enumerated = 0;
};

// Scans n in [-2^(K-1), 2^(K-1) - 1]^N minus zero in lexicographic order
// (n_0 most significant) and keeps the first minimizer of n^T G n.
// Throws ResourceLimit when N * K > kMaxQubits.
OracleResult brute_force_shortest(const GramMatrix& gram, int bits_per_register);

// |s^q_n| <= 1e-9 * N * max_i |n_i|
bool in_operator_kernel(const FourierBasis& basis, int q, std::span<const std::int64_t> n);

struct KernelStats {
  OracleResult oracle;
  int principal = 0;
  bool in_kernel = false;
  // Best in-kernel box vector over the oracle minimum (squared lengths);
  // empty when no nonzero box vector lies in the principal kernel.
  std::optional<double> gamma;
  CoeffVector best_kernel_vector;
};

KernelStats kernel_stats(const GramMatrix& gram, const FourierBasis& basis, const SpectralData& spectrum,
                         int bits_per_register);

}  // namespace svpsym
