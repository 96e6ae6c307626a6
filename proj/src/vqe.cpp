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

#include "svpsym/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "svpsym/errors.hpp"
#include "svpsym/hamiltonian.hpp"

namespace svpsym {

namespace {

constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kShotStream = 2;

void check_params(const AnsatzSpec& spec, std::span<const double> params) {
  if (spec.qubits < 1 || spec.layers < 1) throw InvalidArgument("AnsatzSpec: qubits and layers must be positive");
  if (params.size() != static_cast<std::size_t>(spec.parameter_count())) {
    throw InvalidArgument("ansatz expects " + std::to_string(spec.parameter_count()) +
                          " parameters, got " + std::to_string(params.size()));
  }
}

void check_table(const StateVector& state, std::span<const double> table) {
  if (table.size() != state.size()) throw InvalidArgument("energy table length does not match the state");
}

}  // namespace

AnsatzCircuit build_ansatz(const AnsatzSpec& spec, std::span<const double> params) {
  check_params(spec, params);
  const int n = spec.qubits;
  AnsatzCircuit circuit;
  circuit.gates.reserve(static_cast<std::size_t>(3 * n * spec.layers));
  auto push = [&](Gate g, int index) {
    circuit.gates.push_back(g);
    circuit.param_index.push_back(index);
  };
  for (int layer = 0; layer < spec.layers; ++layer) {
    const int base = 2 * n * layer;
    for (int q = 0; q < n; ++q) {
      push(Gate::ry(q, params[static_cast<std::size_t>(base + q)]), base + q);
      push(Gate::rz(q, params[static_cast<std::size_t>(base + n + q)]), base + n + q);
    }
    if (n >= 2) {
      for (int q = 0; q < n; ++q) push(Gate::cnot(q, (q + 1) % n), -1);
    }
  }
  return circuit;
}

StateVector run_circuit(const AnsatzSpec& spec, std::span<const double> params) {
  StateVector state(spec.qubits);
  for (const Gate& g : build_ansatz(spec, params).gates) apply_gate(state, g);
  return state;
}

int circuit_depth(const AnsatzSpec& spec) {
  const std::vector<double> zeros(static_cast<std::size_t>(spec.parameter_count()), 0.0);
  std::vector<int> ready(static_cast<std::size_t>(spec.qubits), 0);
  int depth = 0;
  for (const Gate& g : build_ansatz(spec, zeros).gates) {
    auto& t = ready[static_cast<std::size_t>(g.target)];
    int start = t;
    if (g.kind == GateKind::CNOT) start = std::max(start, ready[static_cast<std::size_t>(g.control)]);
    t = start + 1;
    if (g.kind == GateKind::CNOT) ready[static_cast<std::size_t>(g.control)] = start + 1;
    depth = std::max(depth, start + 1);
  }
  return depth;
}

double expectation(const StateVector& state, std::span<const double> table) {
  check_table(state, table);
  double total = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    total += (amps[b].real() * amps[b].real() + amps[b].imag() * amps[b].imag()) * table[b];
  }
  return total;
}

std::vector<double> parameter_shift_gradient(const AnsatzSpec& spec, std::span<const double> params,
                                             std::span<const double> table) {
  check_params(spec, params);
  std::vector<double> shifted(params.begin(), params.end());
  std::vector<double> grad(params.size());
  const double h = std::numbers::pi / 2.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    shifted[k] = params[k] + h;
    const double plus = expectation(run_circuit(spec, shifted), table);
    shifted[k] = params[k] - h;
    const double minus = expectation(run_circuit(spec, shifted), table);
    shifted[k] = params[k];
    grad[k] = 0.5 * (plus - minus);
  }
  return grad;
}

namespace {

struct Cplx {
  double re;
  double im;
};

inline Cplx load(const double* p) { return {p[0], p[1]}; }
inline void store(double* p, Cplx v) {
  p[0] = v.re;
  p[1] = v.im;
}
inline Cplx mul(Cplx a, Cplx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
// conj(a) * b
inline Cplx cdot(Cplx a, Cplx b) { return {a.re * b.re + a.im * b.im, a.re * b.im - a.im * b.re}; }

template <typename F>
void for_each_pair(std::size_t size, int qubit, F&& f) {
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t block = 0; block < size; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) f(i, i + stride);
  }
}

// RZ(tz) RY(ty) on one qubit in a single sweep.
void apply_rotation_pair(StateVector& state, int qubit, double ty, double tz) {
  double* a = reinterpret_cast<double*>(state.amplitudes().data());
  const double c = std::cos(0.5 * ty);
  const double s = std::sin(0.5 * ty);
  const Cplx lo{std::cos(0.5 * tz), -std::sin(0.5 * tz)};
  const Cplx hi{lo.re, -lo.im};
  for_each_pair(state.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    const Cplx a0 = load(a + 2 * i0);
    const Cplx a1 = load(a + 2 * i1);
    store(a + 2 * i0, mul(lo, {c * a0.re - s * a1.re, c * a0.im - s * a1.im}));
    store(a + 2 * i1, mul(hi, {s * a0.re + c * a1.re, s * a0.im + c * a1.im}));
  });
}

// Reverse step over the same pair: accumulates Im<l|Z|p>, undoes RZ on both
// states, accumulates Im<l|Y|p>, undoes RY on both states.
void reverse_rotation_pair(StateVector& psi, StateVector& lambda, int qubit, double ty, double tz, double& gy,
                           double& gz) {
  double* p = reinterpret_cast<double*>(psi.amplitudes().data());
  double* l = reinterpret_cast<double*>(lambda.amplitudes().data());
  const double c = std::cos(0.5 * ty);
  const double s = std::sin(0.5 * ty);
  const Cplx undo_lo{std::cos(0.5 * tz), std::sin(0.5 * tz)};
  const Cplx undo_hi{undo_lo.re, -undo_lo.im};
  double sum_z = 0.0;
  double sum_y = 0.0;
  for_each_pair(psi.size(), qubit, [&](std::size_t i0, std::size_t i1) {
    Cplx p0 = load(p + 2 * i0), p1 = load(p + 2 * i1);
    Cplx l0 = load(l + 2 * i0), l1 = load(l + 2 * i1);
    sum_z += cdot(l0, p0).im - cdot(l1, p1).im;
    p0 = mul(undo_lo, p0), p1 = mul(undo_hi, p1);
    l0 = mul(undo_lo, l0), l1 = mul(undo_hi, l1);
    // Im(i (conj(l1) p0 - conj(l0) p1))
    sum_y += cdot(l1, p0).re - cdot(l0, p1).re;
    store(p + 2 * i0, {c * p0.re + s * p1.re, c * p0.im + s * p1.im});
    store(p + 2 * i1, {c * p1.re - s * p0.re, c * p1.im - s * p0.im});
    store(l + 2 * i0, {c * l0.re + s * l1.re, c * l0.im + s * l1.im});
    store(l + 2 * i1, {c * l1.re - s * l0.re, c * l1.im - s * l0.im});
  });
  gy += sum_y;
  gz += sum_z;
}

// The circular CNOT ladder as a basis permutation: the ladder maps |b> to
// |ladder[b]>.
std::vector<std::uint32_t> ladder_permutation(int qubits) {
  std::vector<std::uint32_t> perm(std::size_t{1} << qubits);
  for (std::size_t b = 0; b < perm.size(); ++b) {
    std::uint32_t x = static_cast<std::uint32_t>(b);
    for (int q = 0; q < qubits; ++q) {
      if ((x >> q) & 1U) x ^= 1U << ((q + 1) % qubits);
    }
    perm[b] = x;
  }
  return perm;
}

// new[perm[b]] = old[b] (forward) or new[b] = old[perm[b]] (inverse).
void permute(StateVector& state, std::vector<Amplitude>& scratch, const std::vector<std::uint32_t>& perm,
             bool inverse) {
  auto amps = state.amplitudes();
  scratch.resize(amps.size());
  if (inverse) {
    for (std::size_t b = 0; b < amps.size(); ++b) scratch[b] = amps[perm[b]];
  } else {
    for (std::size_t b = 0; b < amps.size(); ++b) scratch[perm[b]] = amps[b];
  }
  std::copy(scratch.begin(), scratch.end(), amps.begin());
}

}  // namespace

std::vector<double> adjoint_gradient(const AnsatzSpec& spec, std::span<const double> params,
                                     std::span<const double> table, double* value) {
  check_params(spec, params);
  const int n = spec.qubits;
  StateVector psi(n);
  check_table(psi, table);
  auto ry_index = [n](int layer, int q) { return static_cast<std::size_t>(2 * n * layer + q); };
  auto rz_index = [n](int layer, int q) { return static_cast<std::size_t>(2 * n * layer + n + q); };

  thread_local int cached_qubits = 0;
  thread_local std::vector<std::uint32_t> ladder;
  thread_local std::vector<Amplitude> scratch;
  if (cached_qubits != n) {
    ladder = ladder_permutation(n);
    cached_qubits = n;
  }

  for (int layer = 0; layer < spec.layers; ++layer) {
    for (int q = 0; q < n; ++q) apply_rotation_pair(psi, q, params[ry_index(layer, q)], params[rz_index(layer, q)]);
    if (n >= 2) permute(psi, scratch, ladder, false);
  }

  StateVector lambda = psi;
  apply_diagonal(lambda, table);
  if (value != nullptr) *value = inner_product(psi, lambda).real();

  std::vector<double> grad(params.size(), 0.0);
  for (int layer = spec.layers; layer-- > 0;) {
    if (n >= 2) {
      permute(psi, scratch, ladder, true);
      permute(lambda, scratch, ladder, true);
    }
    for (int q = n; q-- > 0;) {
      reverse_rotation_pair(psi, lambda, q, params[ry_index(layer, q)], params[rz_index(layer, q)],
                            grad[ry_index(layer, q)], grad[rz_index(layer, q)]);
    }
  }
  return grad;
}

namespace {

std::uint64_t argmax_probability(const StateVector& state, double& probability) {
  std::uint64_t best = 0;
  probability = -1.0;
  const auto amps = state.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    const double p = std::norm(amps[b]);
    if (p > probability) {
      probability = p;
      best = b;
    }
  }
  return best;
}

std::uint64_t most_frequent_sample(const StateVector& state, int shots, std::uint64_t seed) {
  std::vector<double> cumulative(state.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < state.size(); ++b) {
    acc += state.probability(b);
    cumulative[b] = acc;
  }
  std::mt19937_64 rng(mix_seed(seed, kShotStream));
  std::uniform_real_distribution<double> uniform(0.0, acc);
  std::vector<int> counts(state.size(), 0);
  for (int s = 0; s < shots; ++s) {
    const double u = uniform(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return static_cast<std::uint64_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

}  // namespace

VqeResult optimize(std::span<const double> table, const AnsatzSpec& spec, std::uint64_t seed,
                   const OptimizerOptions& options) {
  if (options.budget < 1) throw InvalidArgument("optimize: budget must be at least 1");
  if (table.size() != (std::size_t{1} << spec.qubits)) {
    throw InvalidArgument("optimize: energy table length does not match the qubit count");
  }

  std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
  std::mt19937_64 rng(mix_seed(seed, kInitStream));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (double& p : params) p = angle(rng);

  const auto [lo, hi] = std::minmax_element(table.begin(), table.end());
  const double scale = *hi - *lo > 0.0 ? *hi - *lo : 1.0;

  VqeResult result;
  result.seed = seed;
  result.qubits_used = spec.qubits;
  result.depth = circuit_depth(spec);
  result.expectation_trace.reserve(static_cast<std::size_t>(options.budget) + 1);

  std::vector<double> best_params = params;
  double best_value = 0.0;
  for (int t = 0; t < options.budget; ++t) {
    double value = 0.0;
    const std::vector<double> grad = adjoint_gradient(spec, params, table, &value);
    result.expectation_trace.push_back(value);
    if (t == 0 || value < best_value) {
      best_value = value;
      best_params = params;
    }
    const double step = options.step / (1.0 + t / options.decay_iterations) / scale;
    for (std::size_t k = 0; k < params.size(); ++k) params[k] -= step * grad[k];
  }
  const double last = expectation(run_circuit(spec, params), table);
  result.expectation_trace.push_back(last);
  if (last < best_value) {
    best_value = last;
    best_params = params;
  }

  const StateVector final_state = run_circuit(spec, best_params);
  result.initial_expectation = result.expectation_trace.front();
  result.final_expectation = best_value;
  if (options.readout == Readout::Argmax) {
    result.best_bits = argmax_probability(final_state, result.best_probability);
  } else {
    result.best_bits = most_frequent_sample(final_state, options.shots, seed);
    result.best_probability = final_state.probability(result.best_bits);
  }
  result.energy = table[result.best_bits];
  return result;
}

VqeResult run_vqe(const GramMatrix& gram, const ConstraintsMatrix* constraints, int bits_per_register,
                  std::uint64_t seed, const OptimizerOptions& options) {
  RealMatrix form = gram.entries();
  if (constraints != nullptr) form = reduce_gram(gram, *constraints).entries;
  const DiagonalHamiltonian h = build_hamiltonian(form, bits_per_register, gram(0, 0));
  const std::vector<double> table = energy_table(h);

  VqeResult result = optimize(table, AnsatzSpec{h.layout().total_qubits(), 3}, seed, options);
  result.decoded = h.layout().decode(result.best_bits);
  result.lattice_vector =
      constraints != nullptr ? apply_constraints(*constraints, result.decoded) : result.decoded;
  return result;
}

std::string bitstring(std::uint64_t basis_state, int qubits) {
  std::string s(static_cast<std::size_t>(qubits), '0');
  for (int t = 0; t < qubits; ++t) {
    if ((basis_state >> t) & 1U) s[static_cast<std::size_t>(t)] = '1';
  }
  return s;
}

nlohmann::json to_json(const VqeResult& r) {
  return nlohmann::json{
      {"best_bits", bitstring(r.best_bits, r.qubits_used)},
      {"best_probability", r.best_probability},
      {"decoded", r.decoded},
      {"lattice_vector", r.lattice_vector},
      {"energy", r.energy},
      {"initial_expectation", r.initial_expectation},
      {"final_expectation", r.final_expectation},
      {"expectation_trace", r.expectation_trace},
      {"qubits_used", r.qubits_used},
      {"depth", r.depth},
      {"seed", r.seed},
  };
}

}  // namespace svpsym
