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

// Fourier eigenbases shared by every cyclic / nega-cyclic Gram matrix of a
// given dimension, and the per-mode eigenvalues s^q_n = sum_p U_qp n_p.

#pragma once

#include <complex>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "svpsym/lattice.hpp"

namespace svpsym {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

class FourierBasis {
 public:
  SymmetryKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(int q, int p) const { return entries_(q, p); }

 private:
  friend FourierBasis fourier_basis(SymmetryKind kind, int dim);
  FourierBasis(SymmetryKind kind, ComplexMatrix entries)
      : kind_(kind), entries_(std::move(entries)) {}

  SymmetryKind kind_;
  ComplexMatrix entries_;
};

// Cyclic:      U_qp = exp(-i 2 pi p q / N) / sqrt(N)
// Nega-cyclic: U_qp = exp(-i pi p (2q + 1) / N) / sqrt(N)
FourierBasis fourier_basis(SymmetryKind kind, int dim);

struct SpectralData {
  RealVector eigenvalues;  // g_q, indexed like the rows of U
  int principal = 0;       // smallest q among the maximal g_q
};

// Relative tolerance for the off-diagonal part of U G U^dagger.
inline constexpr double kStructureTolerance = 1e-8;
// Eigenvalues within this relative distance of the maximum count as tied.
inline constexpr double kPrincipalTieTolerance = 1e-10;

// g = Re diag(U G U^dagger). Throws NotStructured when G is not diagonal in U.
SpectralData eigenvalues(const GramMatrix& gram, const FourierBasis& basis);

Complex s_value(const FourierBasis& basis, int q, std::span<const std::int64_t> n);

// sum_q g_q |s^q_n|^2
double energy_via_spectrum(const SpectralData& spectrum, const FourierBasis& basis,
                           std::span<const std::int64_t> n);

}  // namespace svpsym
