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

// Randomized and exhaustive checks of the structural invariants.

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "svpsym/hamiltonian.hpp"
#include "svpsym/kernel_analytic.hpp"
#include "svpsym/kernel_hnf.hpp"
#include "svpsym/oracle.hpp"
#include "svpsym/spectral.hpp"
#include "svpsym/vqe.hpp"
#include "test_util.hpp"

namespace svpsym {
namespace {

constexpr SymmetryKind kKinds[] = {SymmetryKind::Cyclic, SymmetryKind::NegaCyclic};

RealMatrix shift_matrix(SymmetryKind kind, int dim) {
  RealMatrix p = RealMatrix::Zero(dim, dim);
  for (int i = 0; i + 1 < dim; ++i) p(i + 1, i) = 1;
  p(0, dim - 1) = kind == SymmetryKind::Cyclic ? 1 : -1;
  return p;
}

CoeffVector column(const IntMatrix& a, int j) {
  CoeffVector c(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) c[static_cast<std::size_t>(i)] = a(i, j);
  return c;
}

TEST(properties, gram_commutes_with_shift) {
  for (SymmetryKind kind : kKinds) {
    for (int dim = 2; dim <= 12; ++dim) {
      const GramMatrix g = testing::random_gram(kind, dim, 31 * dim);
      const RealMatrix p = shift_matrix(kind, dim);
      EXPECT_LE((g.entries() * p - p * g.entries()).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((p * g.entries() * p.transpose() - g.entries()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(properties, cyclic_spectrum_is_symmetric) {
  for (int dim = 2; dim <= 12; ++dim) {
    const GramMatrix g = testing::random_gram(SymmetryKind::Cyclic, dim, dim);
    const SpectralData s = eigenvalues(g, fourier_basis(SymmetryKind::Cyclic, dim));
    for (int q = 0; q < dim; ++q) EXPECT_NEAR(s.eigenvalues(q), s.eigenvalues((dim - q) % dim), 1e-10);
  }
}

TEST(properties, nega_spectrum_pairs) {
  for (int dim = 2; dim <= 12; ++dim) {
    const GramMatrix g = testing::random_gram(SymmetryKind::NegaCyclic, dim, dim);
    const SpectralData s = eigenvalues(g, fourier_basis(SymmetryKind::NegaCyclic, dim));
    for (int q = 0; q < dim; ++q) EXPECT_NEAR(s.eigenvalues(q), s.eigenvalues(dim - 1 - q), 1e-10);
  }
}

TEST(properties, nega_s_values_conjugate_pairs) {
  std::mt19937_64 rng(1);
  for (int dim = 2; dim <= 8; ++dim) {
    const FourierBasis u = fourier_basis(SymmetryKind::NegaCyclic, dim);
    for (int t = 0; t < 50; ++t) {
      const CoeffVector n = testing::random_coeffs(rng, dim, -4, 3);
      for (int q = 0; q < dim; ++q) {
        // (2q' + 1) = -(2q + 1) mod 2N  <=>  q' = N - 1 - q
        const int partner = dim - 1 - q;
        EXPECT_NEAR(std::abs(std::conj(s_value(u, q, n)) - s_value(u, partner, n)), 0.0, 1e-12);
      }
    }
  }
}

TEST(properties, energy_identities) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const SymmetryKind kind = kKinds[t % 2];
    const int dim = 2 + t % 11;
    const GramMatrix g = testing::random_gram(kind, dim, 1000 + t);
    const FourierBasis u = fourier_basis(kind, dim);
    const SpectralData s = eigenvalues(g, u);
    const CoeffVector n = testing::random_coeffs(rng, dim, -4, 3);
    const double e = vector_length_sq(g, n);
    EXPECT_NEAR(energy_via_spectrum(s, u, n), e, 1e-8 * std::max(e, 1e-300));

    const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    for (const auto& a : constraints_for(kind, dim, q)) {
      const CoeffVector m = testing::random_coeffs(rng, a.cols(), -4, 3);
      const double reduced = quadratic_form(reduce_gram(g, a).entries, m);
      const double lifted = vector_length_sq(g, apply_constraints(a, m));
      EXPECT_NEAR(reduced, lifted, 1e-8 * std::max(lifted, 1e-12));
    }
  }
}

TEST(properties, analytic_columns_lie_in_hnf_span) {
  for (SymmetryKind kind : kKinds) {
    for (int dim = 2; dim <= 16; ++dim) {
      for (int q = 0; q < dim; ++q) {
        const ConstraintsMatrix h = kernel_basis(kind, dim, q);
        const IntegerSpanSolver solver(h.entries);
        for (const auto& a : constraints_for(kind, dim, q)) {
          for (int j = 0; j < a.cols(); ++j) {
            EXPECT_TRUE(solver.contains(column(a.entries, j)))
                << to_string(kind) << " N=" << dim << " q=" << q << " " << a.origin << " col " << j;
          }
        }
      }
    }
  }
}

TEST(properties, hnf_kernel_complete_on_small_box) {
  // Numerical kernel members of the box are exactly the box members of the
  // HNF span; HNF combinations stay in the numerical kernel.
  std::mt19937_64 rng(4);
  for (SymmetryKind kind : kKinds) {
    for (int dim = 2; dim <= 5; ++dim) {
      const FourierBasis u = fourier_basis(kind, dim);
      for (int q = 0; q < dim; ++q) {
        const ConstraintsMatrix h = kernel_basis(kind, dim, q);
        const IntegerSpanSolver solver(h.entries);
        testing::for_each_in_box(dim, -4, 3, [&](const CoeffVector& n) {
          const bool numeric = std::abs(s_value(u, q, n)) <= 1e-9 * dim;
          EXPECT_EQ(numeric, solver.contains(n)) << to_string(kind) << " N=" << dim << " q=" << q;
        });
        for (int t = 0; t < 20 && h.cols() > 0; ++t) {
          const CoeffVector m = testing::random_coeffs(rng, h.cols(), -4, 3);
          const CoeffVector n = apply_constraints(h, m);
          EXPECT_LE(std::abs(s_value(u, q, n)), 1e-9 * dim);
        }
      }
    }
  }
}

TEST(properties, kernel_dimension_laws) {
  for (int dim = 2; dim <= 24; ++dim) {
    for (int q = 1; q < dim; ++q) {
      if (std::gcd(dim, q) == 1) EXPECT_EQ(kernel_basis(SymmetryKind::Cyclic, dim, q).cols(), dim - totient(dim));
    }
    EXPECT_EQ(kernel_basis(SymmetryKind::NegaCyclic, dim, 0).cols(), dim - totient(2 * dim));
  }
}

TEST(properties, cyclic_kernel_depends_on_gcd_only) {
  for (int dim = 2; dim <= 12; ++dim) {
    for (int q = 1; q < dim; ++q) {
      for (int r = q + 1; r < dim; ++r) {
        if (std::gcd(dim, q) != std::gcd(dim, r)) continue;
        const IntMatrix a = kernel_basis(SymmetryKind::Cyclic, dim, q).entries;
        const IntMatrix b = kernel_basis(SymmetryKind::Cyclic, dim, r).entries;
        EXPECT_EQ(a, b) << "N=" << dim << " q=" << q << " r=" << r;
      }
    }
  }
}

TEST(properties, hnf_unimodular_on_random_matrices) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int t = 0; t < 80; ++t) {
    BigMatrix x(size(rng), size(rng));
    for (int r = 0; r < x.rows(); ++r) {
      for (int c = 0; c < x.cols(); ++c) x(r, c) = entry(rng);
    }
    const HnfResult h = hnf(x);
    EXPECT_EQ(h.h, x * h.u);
    EXPECT_EQ(abs(determinant(h.u)), 1);
  }
}

TEST(properties, reduced_vqe_energy_is_lattice_length) {
  OptimizerOptions opt;
  opt.budget = 40;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const GramMatrix g = testing::random_gram(SymmetryKind::NegaCyclic, 6, seed);
    const SpectralData s = eigenvalues(g, fourier_basis(SymmetryKind::NegaCyclic, 6));
    for (const auto& a : constraints_for(SymmetryKind::NegaCyclic, 6, s.principal)) {
      const VqeResult r = run_vqe(g, &a, 2, seed, opt);
      EXPECT_EQ(r.qubits_used, a.cols() * 2);
      const bool zero = std::all_of(r.decoded.begin(), r.decoded.end(), [](std::int64_t v) { return v == 0; });
      const double expected = zero ? g(0, 0) : vector_length_sq(g, r.lattice_vector);
      EXPECT_NEAR(r.energy, expected, 1e-10 * expected);
    }
  }
}

}  // namespace
}  // namespace svpsym
