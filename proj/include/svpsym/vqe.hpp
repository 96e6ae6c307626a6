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

// Variational search for low-energy basis states of a diagonal Hamiltonian
// with a layered RY/RZ + circular CNOT ansatz.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "svpsym/constraints.hpp"
#include "svpsym/lattice.hpp"
#include "svpsym/statevector.hpp"

namespace svpsym {

struct AnsatzSpec {
  int qubits = 1;
  int layers = 3;

  int parameter_count() const { return 2 * qubits * layers; }
};

// Gate sequence of the ansatz. Per layer: RY then RZ on every qubit, then
// CNOT(0,1), CNOT(1,2), ..., CNOT(n-1,0). Parameter layout per layer l:
// params[2nl + q] drives RY on q, params[2nl + n + q] drives RZ on q.
// param_index[g] is the parameter driving gate g, or -1 for CNOTs.
struct AnsatzCircuit {
  std::vector<Gate> gates;
  std::vector<int> param_index;
};

AnsatzCircuit build_ansatz(const AnsatzSpec& spec, std::span<const double> params);

StateVector run_circuit(const AnsatzSpec& spec, std::span<const double> params);

// Longest chain of gates sharing a qubit.
int circuit_depth(const AnsatzSpec& spec);

// sum_b |amp_b|^2 table[b]
double expectation(const StateVector& state, std::span<const double> table);

// Two-term parameter-shift rule: (E(t + pi/2) - E(t - pi/2)) / 2 per parameter.
std::vector<double> parameter_shift_gradient(const AnsatzSpec& spec, std::span<const double> params,
                                             std::span<const double> table);

// Same gradient from one forward and one reverse sweep over the circuit.
// Writes the expectation at `params` to *value when non-null.
std::vector<double> adjoint_gradient(const AnsatzSpec& spec, std::span<const double> params,
                                     std::span<const double> table, double* value = nullptr);

enum class Readout { Argmax, Sampled };

struct OptimizerOptions {
  int budget = 500;
  // Step on the gradient of E / (max(table) - min(table)); decays as
  // step / (1 + t / decay_iterations).
  double step = 16.0;
  double decay_iterations = 200.0;
  Readout readout = Readout::Argmax;
  int shots = 1000;
};

struct VqeResult {
  std::uint64_t best_bits = 0;
  double best_probability = 0.0;
  CoeffVector decoded;         // register values
  CoeffVector lattice_vector;  // A * decoded for reduced runs, decoded otherwise
  double energy = 0.0;         // table[best_bits]
  double initial_expectation = 0.0;
  double final_expectation = 0.0;
  std::vector<double> expectation_trace;
  int qubits_used = 0;
  int depth = 0;
  std::uint64_t seed = 0;
};

// Parameters start uniform in [0, 2 pi) from a stream derived from `seed`.
// The returned state is the lowest-expectation iterate, so the final
// expectation never exceeds the initial one.
VqeResult optimize(std::span<const double> table, const AnsatzSpec& spec, std::uint64_t seed,
                   const OptimizerOptions& options = {});

// Full problem when `constraints` is null (N registers), otherwise the
// reduced form A^T G A on A.cols() registers. Penalty is G_00.
VqeResult run_vqe(const GramMatrix& gram, const ConstraintsMatrix* constraints, int bits_per_register,
                  std::uint64_t seed, const OptimizerOptions& options = {});

// Qubit t is character t.
std::string bitstring(std::uint64_t basis_state, int qubits);

nlohmann::json to_json(const VqeResult& result);

}  // namespace svpsym
