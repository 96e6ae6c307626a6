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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

namespace svpsym {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Integer N x M matrix A whose columns span (a sublattice of) the integer
// kernel of the operator S_q: every n = A m satisfies sum_p U_qp n_p = 0.
struct ConstraintsMatrix {
  IntMatrix entries;
  std::string origin;          // e.g. "cyclic-3", "nega-II", "hnf"
  int operator_index = 0;      // q
  std::optional<int> prime;    // prime factor the matrix is associated with

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

}  // namespace svpsym
