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

// Cyclic and nega-cyclic lattice bases generated from a single vector, and
// squared lengths of lattice vectors through the Gram matrix.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace svpsym {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Integer lattice coordinates n_i of a vector sum_i n_i b_i.
using CoeffVector = std::vector<std::int64_t>;

enum class SymmetryKind { Cyclic, NegaCyclic };

std::string_view to_string(SymmetryKind kind);

// Accepts "cyclic", "nega", "nega-cyclic" and "negacyclic".
SymmetryKind parse_symmetry_kind(std::string_view text);

// (b_{N-1}, b_0, ..., b_{N-2})
RealVector cyclic_shift(const RealVector& v);

// (-b_{N-1}, b_0, ..., b_{N-2})
RealVector nega_shift(const RealVector& v);

RealVector shift(SymmetryKind kind, const RealVector& v);

// Basis whose row i is shift^i(generator).
class StructuredBasis {
 public:
  SymmetryKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(rows_.rows()); }
  RealVector generator() const { return rows_.row(0).transpose(); }
  const RealMatrix& rows() const { return rows_; }

 private:
  friend StructuredBasis build_basis(SymmetryKind kind, const RealVector& generator);
  StructuredBasis(SymmetryKind kind, RealMatrix rows) : kind_(kind), rows_(std::move(rows)) {}

  SymmetryKind kind_;
  RealMatrix rows_;
};

StructuredBasis build_basis(SymmetryKind kind, const RealVector& generator);

// Symmetric matrix of basis inner products. Construction checks shape and
// symmetry only; positive semidefiniteness is a property of how it was built.
class GramMatrix {
 public:
  explicit GramMatrix(RealMatrix entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const RealMatrix& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  RealMatrix entries_;
};

GramMatrix gram(const StructuredBasis& basis);

// n^T Q n for an integer vector, summed in a fixed row-major order so that
// every caller obtains bit-identical results for the same inputs.
double quadratic_form(const RealMatrix& form, std::span<const std::int64_t> n);

// |sum_i n_i b_i|^2 = n^T G n.
double vector_length_sq(const GramMatrix& gram, std::span<const std::int64_t> n);

// Smallest eigenvalue allowed for a sampled lattice's Gram matrix.
inline constexpr double kMinGramEigenvalue = 1e-6;
inline constexpr int kMaxSamplerAttempts = 1000;

// Unit-norm generator with i.i.d. standard normal entries. Deterministic in
// (seed, dim). Candidates whose cyclic or nega-cyclic Gram matrix has an
// eigenvalue below kMinGramEigenvalue are rejected and redrawn.
RealVector sample_generator(std::uint64_t seed, int dim);

// SplitMix64 finalizer; derives independent stream seeds from a parent seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace svpsym
