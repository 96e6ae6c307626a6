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

#include <random>

#include <gtest/gtest.h>

#include "svpsym/errors.hpp"
#include "svpsym/kernel_hnf.hpp"
#include "svpsym/spectral.hpp"

namespace svpsym {
namespace {

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> row(const BigMatrix& m, int r) {
  std::vector<BigInt> out;
  for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

BigMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  BigMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

// Column echelon form with zero columns first: the last nonzero row of each
// nonzero column strictly increases left to right, pivots are positive and
// entries to the right of a pivot lie in [0, pivot).
void expect_hermite_form(const HnfResult& r) {
  const BigMatrix& h = r.h;
  const int zero_cols = r.kernel_dim();
  for (int c = 0; c < zero_cols; ++c) {
    for (int i = 0; i < h.rows(); ++i) EXPECT_EQ(h(i, c), 0);
  }
  int previous = -1;
  for (int c = zero_cols; c < h.cols(); ++c) {
    int p = -1;
    for (int i = h.rows() - 1; i >= 0; --i) {
      if (h(i, c) != 0) {
        p = i;
        break;
      }
    }
    ASSERT_GE(p, 0) << "column " << c << " should be nonzero";
    EXPECT_GT(p, previous);
    EXPECT_GT(h(p, c), 0);
    for (int j = c + 1; j < h.cols(); ++j) {
      EXPECT_GE(h(p, j), 0);
      EXPECT_LT(h(p, j), h(p, c));
    }
    previous = p;
  }
}

TEST(kernel_hnf, totient_values) {
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(totient(2), 1);
  EXPECT_EQ(totient(12), 4);
  EXPECT_EQ(totient(16), 8);
  EXPECT_EQ(totient(97), 96);
}

TEST(kernel_hnf, cyclotomic_coefficients) {
  EXPECT_EQ(cyclotomic(1).coefficients, big({-1, 1}));
  EXPECT_EQ(cyclotomic(2).coefficients, big({1, 1}));
  EXPECT_EQ(cyclotomic(6).coefficients, big({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12).coefficients, big({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic(15).coefficients, big({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  const IntPolynomial p105 = cyclotomic(105);
  EXPECT_EQ(p105.degree(), 48);
  EXPECT_EQ(p105.coefficients[7], -2);
  EXPECT_EQ(p105.coefficients[41], -2);
  for (int n = 1; n <= 200; ++n) EXPECT_EQ(cyclotomic(n).degree(), totient(n));
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
}

TEST(kernel_hnf, determinant_small_cases) {
  BigMatrix m(2, 2);
  m(0, 0) = 3, m(0, 1) = 8, m(1, 0) = 4, m(1, 1) = 6;
  EXPECT_EQ(determinant(m), -14);
  EXPECT_EQ(determinant(BigMatrix::identity(5)), 1);
  BigMatrix singular(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) singular(i, j) = i + j;
  }
  EXPECT_EQ(determinant(singular), 0);
}

TEST(kernel_hnf, reduction_cyclic_five) {
  const ReductionMatrix r = reduction_matrix(SymmetryKind::Cyclic, 5, 1);
  EXPECT_EQ(r.order, 5);
  ASSERT_EQ(r.entries.cols(), 4);
  for (int k = 0; k < 4; ++k) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(r.entries(k, j), k == j ? 1 : 0);
  }
  EXPECT_EQ(row(r.entries, 4), big({-1, -1, -1, -1}));
}

TEST(kernel_hnf, reduction_nega_three) {
  const ReductionMatrix r = reduction_matrix(SymmetryKind::NegaCyclic, 3, 0);
  EXPECT_EQ(r.order, 6);
  ASSERT_EQ(r.entries.cols(), 2);
  EXPECT_EQ(row(r.entries, 2), big({-1, 1}));
}

TEST(kernel_hnf, reduction_nega_eight_is_identity) {
  const ReductionMatrix r = reduction_matrix(SymmetryKind::NegaCyclic, 8, 0);
  EXPECT_EQ(r.order, 16);
  EXPECT_EQ(r.entries, BigMatrix::identity(8));
}

TEST(kernel_hnf, reduction_nondividing_step) {
  // Cyclic N=6, q=2: the phases are cube roots of unity.
  const ReductionMatrix r = reduction_matrix(SymmetryKind::Cyclic, 6, 2);
  EXPECT_EQ(r.order, 3);
  EXPECT_EQ(r.step, 1);
  EXPECT_EQ(row(r.entries, 2), big({-1, -1}));
  EXPECT_EQ(row(r.entries, 3), big({1, 0}));
  EXPECT_THROW(reduction_matrix(SymmetryKind::Cyclic, 6, 0), Unsupported);
}

TEST(kernel_hnf, reduction_reproduces_phases) {
  for (SymmetryKind kind : {SymmetryKind::Cyclic, SymmetryKind::NegaCyclic}) {
    for (int dim = 2; dim <= 16; ++dim) {
      const FourierBasis u = fourier_basis(kind, dim);
      for (int q = kind == SymmetryKind::Cyclic ? 1 : 0; q < dim; ++q) {
        const ReductionMatrix r = reduction_matrix(kind, dim, q);
        const Complex zeta = std::polar(1.0, -2.0 * std::numbers::pi / r.order);
        for (int k = 0; k < dim; ++k) {
          Complex total = 0;
          for (int j = 0; j < r.entries.cols(); ++j) {
            total += static_cast<double>(r.entries(k, j)) * std::pow(zeta, j);
          }
          const Complex expected = u(q, k) * std::sqrt(static_cast<double>(dim));
          EXPECT_NEAR(std::abs(total - expected), 0.0, 1e-9) << dim << " " << q << " " << k;
        }
      }
    }
  }
}

TEST(kernel_hnf, hnf_of_small_matrix) {
  BigMatrix x(2, 3);
  x(0, 0) = 2, x(0, 1) = 4, x(0, 2) = 6;
  x(1, 0) = 1, x(1, 1) = 3, x(1, 2) = 5;
  const HnfResult r = hnf(x);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.h, x * r.u);
  EXPECT_EQ(abs(determinant(r.u)), 1);
  expect_hermite_form(r);
  const BigMatrix kernel = x * r.kernel_columns();
  for (int i = 0; i < 2; ++i) EXPECT_EQ(kernel(i, 0), 0);
}

TEST(kernel_hnf, hnf_random_matrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<int> size(1, 8);
    const BigMatrix x = random_matrix(rng, size(rng), size(rng), 50);
    const HnfResult r = hnf(x);
    EXPECT_EQ(r.h, x * r.u);
    EXPECT_EQ(abs(determinant(r.u)), 1);
    expect_hermite_form(r);
  }
}

TEST(kernel_hnf, hnf_rank_deficient) {
  BigMatrix x(3, 4);
  for (int c = 0; c < 4; ++c) {
    x(0, c) = c + 1;
    x(1, c) = 2 * (c + 1);
    x(2, c) = 3 * (c + 1);
  }
  const HnfResult r = hnf(x);
  EXPECT_EQ(r.rank, 1);
  EXPECT_EQ(r.kernel_dim(), 3);
  expect_hermite_form(r);
  EXPECT_THROW(hnf(BigMatrix(0, 3)), InvalidArgument);
}

TEST(kernel_hnf, kernel_basis_examples) {
  const ConstraintsMatrix c5 = kernel_basis(SymmetryKind::Cyclic, 5, 1);
  ASSERT_EQ(c5.cols(), 1);
  const std::int64_t sign = c5.entries(0, 0);
  EXPECT_TRUE(sign == 1 || sign == -1);
  EXPECT_EQ(c5.entries, IntMatrix::Constant(5, 1, sign));
  EXPECT_EQ(c5.origin, "hnf");

  EXPECT_EQ(kernel_basis(SymmetryKind::NegaCyclic, 8, 0).cols(), 0);
  EXPECT_EQ(kernel_basis(SymmetryKind::NegaCyclic, 8, 0).rows(), 8);

  const ConstraintsMatrix c6 = kernel_basis(SymmetryKind::Cyclic, 6, 2);
  EXPECT_EQ(c6.cols(), 4);
  const FourierBasis u = fourier_basis(SymmetryKind::Cyclic, 6);
  for (int j = 0; j < c6.cols(); ++j) {
    CoeffVector col(6);
    for (int i = 0; i < 6; ++i) col[static_cast<std::size_t>(i)] = c6.entries(i, j);
    EXPECT_LE(std::abs(s_value(u, 2, col)), 1e-9);
  }
  EXPECT_THROW(kernel_basis(SymmetryKind::Cyclic, 6, 6), InvalidArgument);
}

TEST(kernel_hnf, nega_six_hnf_matches_analytic_display) {
  IntMatrix expected(6, 2);
  expected << 1, 0, 0, 1, -1, 0, 0, -1, 1, 0, 0, 1;
  EXPECT_EQ(kernel_basis(SymmetryKind::NegaCyclic, 6, 0).entries, expected);
}

TEST(kernel_hnf, span_solver) {
  IntMatrix a(3, 2);
  a << 1, 0, 0, 2, 1, 2;
  const IntegerSpanSolver solver(a);
  EXPECT_EQ(solver.rank(), 2);
  const CoeffVector in{3, 4, 7};
  const auto m = solver.solve(in);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ((*m)[0], 3);
  EXPECT_EQ((*m)[1], 2);
  EXPECT_TRUE(solver.contains(in));
  EXPECT_FALSE(solver.contains(CoeffVector{0, 1, 1}));  // needs m = (0, 1/2)
  EXPECT_FALSE(solver.contains(CoeffVector{1, 0, 0}));  // outside the real span
  EXPECT_THROW(solver.contains(CoeffVector{1, 2}), InvalidArgument);
}

TEST(kernel_hnf, to_int_overflow) {
  BigMatrix m(1, 1);
  m(0, 0) = BigInt(1) << 70;
  EXPECT_THROW(m.to_int(), ResourceLimit);
}

}  // namespace
}  // namespace svpsym
