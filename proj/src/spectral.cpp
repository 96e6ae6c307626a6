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

#include "svpsym/spectral.hpp"

#include <cmath>
#include <numbers>

#include "svpsym/errors.hpp"

namespace svpsym {

FourierBasis fourier_basis(SymmetryKind kind, int dim) {
  if (dim < 2) throw InvalidArgument("fourier_basis: dimension must be at least 2");
  ComplexMatrix u(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  // Phases are reduced modulo their period in integer arithmetic before the
  // trigonometric call so that large p*q products do not lose precision.
  const std::int64_t period = kind == SymmetryKind::Cyclic ? dim : 2 * dim;
  for (int q = 0; q < dim; ++q) {
    const std::int64_t step = kind == SymmetryKind::Cyclic ? q : 2 * q + 1;
    for (int p = 0; p < dim; ++p) {
      const std::int64_t residue = (step * p) % period;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(residue) /
                           static_cast<double>(period);
      u(q, p) = std::polar(norm, angle);
    }
  }
  return FourierBasis(kind, std::move(u));
}

SpectralData eigenvalues(const GramMatrix& gram, const FourierBasis& basis) {
  if (gram.dim() != basis.dim()) throw InvalidArgument("eigenvalues: dimension mismatch");
  const ComplexMatrix& u = basis.entries();
  const ComplexMatrix d = u * gram.entries().cast<Complex>() * u.adjoint();
  const int n = gram.dim();

  SpectralData out;
  out.eigenvalues = d.diagonal().real();
  const double gmax = out.eigenvalues.maxCoeff();

  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off = std::max(off, std::abs(d(i, j)));
    }
  }
  if (off > kStructureTolerance * std::max(gmax, 0.0)) {
    throw NotStructured("eigenvalues: Gram matrix is not diagonal in the " +
                        std::string(to_string(basis.kind())) + " Fourier basis");
  }

  const double cutoff = gmax - kPrincipalTieTolerance * std::abs(gmax);
  for (int q = 0; q < n; ++q) {
    if (out.eigenvalues(q) >= cutoff) {
      out.principal = q;
      break;
    }
  }
  return out;
}

Complex s_value(const FourierBasis& basis, int q, std::span<const std::int64_t> n) {
  if (q < 0 || q >= basis.dim()) throw InvalidArgument("s_value: operator index out of range");
  if (n.size() != static_cast<std::size_t>(basis.dim())) {
    throw InvalidArgument("s_value: coefficient vector has wrong length");
  }
  Complex s{0.0, 0.0};
  for (int p = 0; p < basis.dim(); ++p) {
    s += basis(q, p) * static_cast<double>(n[static_cast<std::size_t>(p)]);
  }
  return s;
}

double energy_via_spectrum(const SpectralData& spectrum, const FourierBasis& basis,
                           std::span<const std::int64_t> n) {
  double e = 0.0;
  for (int q = 0; q < basis.dim(); ++q) {
    e += spectrum.eigenvalues(q) * std::norm(s_value(basis, q, n));
  }
  return e;
}

}  // namespace svpsym
