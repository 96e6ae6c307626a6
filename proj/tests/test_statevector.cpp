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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "svpsym/errors.hpp"
#include "svpsym/statevector.hpp"

namespace svpsym {
namespace {

using std::numbers::pi;

StateVector random_state(int qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  StateVector s(qubits);
  double total = 0;
  for (auto& a : s.amplitudes()) {
    a = {normal(rng), normal(rng)};
    total += std::norm(a);
  }
  for (auto& a : s.amplitudes()) a /= std::sqrt(total);
  return s;
}

// Dense 2^n x 2^n matrix of a gate, built independently of apply_gate.
Eigen::MatrixXcd dense_gate(int qubits, const Gate& g) {
  const int dim = 1 << qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const double c = std::cos(g.angle / 2);
  const double s = std::sin(g.angle / 2);
  for (int b = 0; b < dim; ++b) {
    const int bit = (b >> g.target) & 1;
    const int flipped = b ^ (1 << g.target);
    switch (g.kind) {
      case GateKind::RY:
        m(b, b) = c;
        m(flipped, b) = bit == 0 ? s : -s;
        break;
      case GateKind::RZ:
        m(b, b) = std::polar(1.0, bit == 0 ? -g.angle / 2 : g.angle / 2);
        break;
      case GateKind::CNOT:
        m((b >> g.control) & 1 ? flipped : b, b) = 1;
        break;
    }
  }
  return m;
}

Eigen::VectorXcd to_eigen(const StateVector& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s.amplitudes()[i];
  return v;
}

TEST(statevector, starts_in_zero_state) {
  const StateVector s(3);
  EXPECT_EQ(s.size(), 8u);
  EXPECT_EQ(s.probability(0), 1.0);
  EXPECT_EQ(s.norm_sq(), 1.0);
  EXPECT_THROW(StateVector(0), InvalidArgument);
  EXPECT_THROW(StateVector(25), ResourceLimit);
}

TEST(statevector, ry_pi_flips_qubit) {
  for (int q = 0; q < 3; ++q) {
    StateVector s(3);
    apply_gate(s, Gate::ry(q, pi));
    EXPECT_NEAR(s.probability(std::uint64_t{1} << q), 1.0, 1e-15);
  }
}

TEST(statevector, rz_keeps_probabilities) {
  StateVector s(2);
  apply_gate(s, Gate::ry(0, pi));
  apply_gate(s, Gate::rz(0, 0.7));
  apply_gate(s, Gate::rz(1, -1.3));
  EXPECT_NEAR(s.probability(1), 1.0, 1e-15);
}

TEST(statevector, cnot_little_endian) {
  StateVector s(2);
  apply_gate(s, Gate::ry(0, pi));  // |q1 q0> = |01>, index 1
  apply_gate(s, Gate::cnot(0, 1));
  EXPECT_NEAR(s.probability(3), 1.0, 1e-15);
  StateVector t(2);
  apply_gate(t, Gate::cnot(0, 1));
  EXPECT_EQ(t.probability(0), 1.0);
}

TEST(statevector, gates_match_dense_matrices) {
  const int n = 3;
  const Gate gates[] = {Gate::ry(0, 0.3), Gate::ry(2, -1.1), Gate::rz(1, 2.2), Gate::rz(0, -0.4),
                        Gate::cnot(0, 2), Gate::cnot(2, 1), Gate::cnot(1, 0)};
  for (const Gate& g : gates) {
    StateVector s = random_state(n, 17);
    const Eigen::VectorXcd expected = dense_gate(n, g) * to_eigen(s);
    apply_gate(s, g);
    EXPECT_LE((to_eigen(s) - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(statevector, gates_preserve_norm) {
  StateVector s = random_state(5, 4);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-10, 10);
  for (int t = 0; t < 200; ++t) {
    const int q = t % 5;
    const Gate g = t % 3 == 0 ? Gate::ry(q, angle(rng)) : t % 3 == 1 ? Gate::rz(q, angle(rng)) : Gate::cnot(q, (q + 2) % 5);
    const double before = s.norm_sq();
    apply_gate(s, g);
    EXPECT_NEAR(s.norm_sq(), before, 1e-12);
  }
}

TEST(statevector, full_turn_is_identity_up_to_phase) {
  for (GateKind kind : {GateKind::RY, GateKind::RZ}) {
    StateVector s = random_state(3, 21);
    const StateVector before = s;
    apply_gate(s, Gate{kind, 1, -1, 2 * pi});
    EXPECT_NEAR(std::abs(inner_product(before, s)), 1.0, 1e-10);
  }
}

TEST(statevector, inverse_undoes_gate) {
  const Gate g = Gate::ry(1, 0.9);
  StateVector s = random_state(3, 5);
  const StateVector before = s;
  apply_gate(s, g);
  apply_gate(s, g.inverse());
  EXPECT_LE((to_eigen(s) - to_eigen(before)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(statevector, bad_indices) {
  StateVector s(2);
  EXPECT_THROW(apply_gate(s, Gate::ry(2, 1.0)), InvalidArgument);
  EXPECT_THROW(apply_gate(s, Gate::cnot(0, 0)), InvalidArgument);
  EXPECT_THROW(apply_gate(s, Gate::cnot(-1, 1)), InvalidArgument);
  EXPECT_THROW(apply_diagonal(s, std::vector<double>(3)), InvalidArgument);
  EXPECT_THROW(generator_matrix_element(s, s, Gate::cnot(0, 1)), InvalidArgument);
}

TEST(statevector, generator_elements_match_dense) {
  const StateVector bra = random_state(3, 31);
  const StateVector ket = random_state(3, 32);
  Eigen::Matrix2cd y, z;
  y << 0, Amplitude(0, -1), Amplitude(0, 1), 0;
  z << 1, 0, 0, -1;
  for (int q = 0; q < 3; ++q) {
    for (auto [kind, pauli] : {std::pair{GateKind::RY, y}, std::pair{GateKind::RZ, z}}) {
      Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
      for (int t = 2; t >= 0; --t) {
        const Eigen::MatrixXcd factor = t == q ? Eigen::MatrixXcd(pauli) : Eigen::MatrixXcd::Identity(2, 2);
        Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
        for (int i = 0; i < full.rows(); ++i) {
          for (int j = 0; j < full.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = full(i, j) * factor;
        }
        full = next;
      }
      const Amplitude expected = to_eigen(bra).dot(full * to_eigen(ket));
      EXPECT_NEAR(std::abs(generator_matrix_element(bra, ket, Gate{kind, q, -1, 0.0}) - expected), 0.0, 1e-14);
    }
  }
}

}  // namespace
}  // namespace svpsym
