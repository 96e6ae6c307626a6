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

#include <stdexcept>
#include <string>

namespace svpsym {

// Argument outside an operation's domain (bad dimension, index, length).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a fixed resource bound (qubit cap, enumeration size).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gram matrix is not diagonalized by the Fourier basis of its symmetry kind.
class NotStructured : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A reduction was requested for a constraints matrix with zero columns.
class EmptyKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The generator sampler failed to produce a well-conditioned lattice.
class DegenerateSampler : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation is defined elsewhere for this input (e.g. cyclic q = 0).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace svpsym
