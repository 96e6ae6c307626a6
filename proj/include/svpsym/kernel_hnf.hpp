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

// Exact integer kernels of the operators S_q.
//
// The k-th phase exp(-i 2 pi m k / modulus) of the kernel equation is a power
// of a primitive ord-th root of unity zeta, ord = modulus / gcd(modulus, m).
// Reducing x^e modulo the cyclotomic polynomial Phi_ord expresses each phase
// as an integer combination of 1, zeta, ..., zeta^(phi(ord) - 1), which are
// linearly independent over Q. An integer vector n is in the kernel iff the
// transpose of that reduction matrix annihilates it; the Hermite normal form
// of the transpose yields an integer basis of exactly those n.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "svpsym/constraints.hpp"
#include "svpsym/lattice.hpp"

namespace svpsym {

using BigInt = boost::multiprecision::cpp_int;

// Dense column-major matrix of arbitrary-precision integers.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static BigMatrix identity(int n);
  static BigMatrix from(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

  BigMatrix transpose() const;
  // Columns [first, first + count).
  BigMatrix columns(int first, int count) const;
  // Throws ResourceLimit if an entry does not fit in 64 bits.
  IntMatrix to_int() const;

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(c) * static_cast<std::size_t>(rows_) + static_cast<std::size_t>(r);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);

// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const BigMatrix& m);

// Euler's totient; phi(1) = 1.
int totient(int n);

// Integer polynomial, coefficients in ascending degree, no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

inline constexpr int kMaxCyclotomicOrder = 1024;

// Phi_n for 1 <= n <= kMaxCyclotomicOrder, by dividing x^n - 1 by Phi_d for
// every proper divisor d.
IntPolynomial cyclotomic(int n);

struct ReductionMatrix {
  BigMatrix entries;  // N x phi(order)
  int order = 1;      // ord
  int step = 0;       // phase k is zeta^(step * k mod ord)
};

// Row k holds the coefficients of x^(step * k mod ord) reduced modulo
// Phi_ord. Throws Unsupported for cyclic q = 0.
ReductionMatrix reduction_matrix(SymmetryKind kind, int dim, int q);

struct HnfResult {
  BigMatrix h;  // X * U; zero columns first, then the Hermite form
  BigMatrix u;  // unimodular
  int rank = 0;

  int kernel_dim() const { return u.cols() - rank; }
  BigMatrix kernel_columns() const { return u.columns(0, kernel_dim()); }
};

// Column-style Hermite normal form: pivots of the nonzero columns sit in
// increasing rows from left to right, are positive, and the entries to their
// right in the pivot row are reduced into [0, pivot).
HnfResult hnf(const BigMatrix& x);

// Integer basis of {n in Z^N : sum_p U_qp n_p = 0}, in column Hermite form.
// Cyclic q = 0 returns the closed-form basis e_j - e_{N-1}.
ConstraintsMatrix kernel_basis(SymmetryKind kind, int dim, int q);

// Exact membership and coordinates in the integer column span of a matrix.
class IntegerSpanSolver {
 public:
  explicit IntegerSpanSolver(const IntMatrix& a);

  int rank() const { return static_cast<int>(pivot_rows_.size()); }

  bool contains(std::span<const std::int64_t> c) const;

  // m with A m = c, or nullopt when c is outside the integer span.
  std::optional<std::vector<BigInt>> solve(std::span<const std::int64_t> c) const;

 private:
  std::optional<std::vector<BigInt>> coordinates(std::span<const std::int64_t> c) const;

  int rows_ = 0;
  BigMatrix pivot_h_;  // rows x rank
  BigMatrix pivot_u_;  // cols(A) x rank
  std::vector<int> pivot_rows_;
  IntMatrix fast_h_;
  bool fast_ok_ = false;
};

}  // namespace svpsym
