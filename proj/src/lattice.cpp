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

#include "svpsym/lattice.hpp"

#include <cmath>
#include <random>

#include "svpsym/errors.hpp"

namespace svpsym {

std::string_view to_string(SymmetryKind kind) {
  return kind == SymmetryKind::Cyclic ? "cyclic" : "nega-cyclic";
}

SymmetryKind parse_symmetry_kind(std::string_view text) {
  if (text == "cyclic") return SymmetryKind::Cyclic;
  if (text == "nega" || text == "nega-cyclic" || text == "negacyclic") {
    return SymmetryKind::NegaCyclic;
  }
  throw InvalidArgument("unknown symmetry kind '" + std::string(text) + "'");
}

RealVector cyclic_shift(const RealVector& v) {
  const auto n = v.size();
  if (n == 0) throw InvalidArgument("cyclic_shift: empty vector");
  RealVector out(n);
  out(0) = v(n - 1);
  out.tail(n - 1) = v.head(n - 1);
  return out;
}

RealVector nega_shift(const RealVector& v) {
  RealVector out = cyclic_shift(v);
  out(0) = -out(0);
  return out;
}

RealVector shift(SymmetryKind kind, const RealVector& v) {
  return kind == SymmetryKind::Cyclic ? cyclic_shift(v) : nega_shift(v);
}

StructuredBasis build_basis(SymmetryKind kind, const RealVector& generator) {
  const auto n = generator.size();
  if (n < 2) throw InvalidArgument("build_basis: dimension must be at least 2");
  RealMatrix rows(n, n);
  RealVector current = generator;
  for (Eigen::Index i = 0; i < n; ++i) {
    rows.row(i) = current.transpose();
    if (i + 1 < n) current = shift(kind, current);
  }
  return StructuredBasis(kind, std::move(rows));
}

GramMatrix::GramMatrix(RealMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw InvalidArgument("GramMatrix: expected a nonempty square matrix");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("GramMatrix: matrix is not symmetric");
  }
}

GramMatrix gram(const StructuredBasis& basis) {
  const RealMatrix& b = basis.rows();
  const auto n = b.rows();
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = g(j, i) = b.row(i).dot(b.row(j));
    }
  }
  return GramMatrix(std::move(g));
}

double quadratic_form(const RealMatrix& form, std::span<const std::int64_t> n) {
  const auto dim = static_cast<std::size_t>(form.rows());
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (n[i] == 0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      row += form(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
             static_cast<double>(n[j]);
    }
    total += static_cast<double>(n[i]) * row;
  }
  return total;
}

double vector_length_sq(const GramMatrix& gram, std::span<const std::int64_t> n) {
  if (n.size() != static_cast<std::size_t>(gram.dim())) {
    throw InvalidArgument("vector_length_sq: coefficient vector has wrong length");
  }
  return quadratic_form(gram.entries(), n);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

double min_gram_eigenvalue(SymmetryKind kind, const RealVector& generator) {
  const GramMatrix g = gram(build_basis(kind, generator));
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(g.entries(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

RealVector sample_generator(std::uint64_t seed, int dim) {
  if (dim < 2) throw InvalidArgument("sample_generator: dimension must be at least 2");
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(dim)));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < kMaxSamplerAttempts; ++attempt) {
    RealVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal(rng);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    v /= norm;
    if (min_gram_eigenvalue(SymmetryKind::Cyclic, v) >= kMinGramEigenvalue &&
        min_gram_eigenvalue(SymmetryKind::NegaCyclic, v) >= kMinGramEigenvalue) {
      return v;
    }
  }
  throw DegenerateSampler("sample_generator: no well-conditioned lattice after " +
                          std::to_string(kMaxSamplerAttempts) + " attempts");
}

}  // namespace svpsym
