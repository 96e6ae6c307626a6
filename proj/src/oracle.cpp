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

#include "svpsym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "svpsym/errors.hpp"
#include "svpsym/hamiltonian.hpp"

namespace svpsym {

namespace {

// Calls visit(n) for every nonzero n in the box, lexicographically.
template <typename Visit>
std::uint64_t for_each_box_vector(int dim, int bits, Visit&& visit) {
  if (bits < 1 || bits > kMaxBitsPerRegister) throw InvalidArgument("bits per register must lie in [1, 8]");
  if (dim < 1) throw InvalidArgument("dimension must be positive");
  if (dim * bits > kMaxQubits) {
    throw ResourceLimit("box enumeration over " + std::to_string(dim * bits) + " bits exceeds the limit of " +
                        std::to_string(kMaxQubits));
  }
  const std::int64_t lo = -(std::int64_t{1} << (bits - 1));
  const std::int64_t hi = (std::int64_t{1} << (bits - 1)) - 1;
  CoeffVector n(static_cast<std::size_t>(dim), lo);
  std::uint64_t count = 0;
  while (true) {
    if (std::any_of(n.begin(), n.end(), [](std::int64_t v) { return v != 0; })) {
      ++count;
      visit(n);
    }
    int i = dim - 1;
    while (i >= 0 && n[static_cast<std::size_t>(i)] == hi) {
      n[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) break;
    ++n[static_cast<std::size_t>(i)];
  }
  return count;
}

}  // namespace

OracleResult brute_force_shortest(const GramMatrix& gram, int bits_per_register) {
  OracleResult result;
  bool found = false;
  result.enumerated = for_each_box_vector(gram.dim(), bits_per_register, [&](const CoeffVector& n) {
    const double e = quadratic_form(gram.entries(), n);
    if (!found || e < result.length_sq) {
      found = true;
      result.length_sq = e;
      result.shortest = n;
    }
  });
  return result;
}

bool in_operator_kernel(const FourierBasis& basis, int q, std::span<const std::int64_t> n) {
  std::int64_t scale = 0;
  for (std::int64_t v : n) scale = std::max(scale, std::abs(v));
  return std::abs(s_value(basis, q, n)) <= 1e-9 * basis.dim() * static_cast<double>(scale);
}

KernelStats kernel_stats(const GramMatrix& gram, const FourierBasis& basis, const SpectralData& spectrum,
                         int bits_per_register) {
  if (basis.dim() != gram.dim()) throw InvalidArgument("kernel_stats: basis and Gram dimensions differ");
  KernelStats stats;
  stats.principal = spectrum.principal;
  stats.oracle = brute_force_shortest(gram, bits_per_register);
  stats.in_kernel = in_operator_kernel(basis, stats.principal, stats.oracle.shortest);

  std::optional<double> best;
  for_each_box_vector(gram.dim(), bits_per_register, [&](const CoeffVector& n) {
    if (!in_operator_kernel(basis, stats.principal, n)) return;
    const double e = quadratic_form(gram.entries(), n);
    if (!best || e < *best) {
      best = e;
      stats.best_kernel_vector = n;
    }
  });
  if (best) stats.gamma = *best / stats.oracle.length_sq;
  return stats;
}

}  // namespace svpsym
