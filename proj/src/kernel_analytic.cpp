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

#include "svpsym/kernel_analytic.hpp"

#include <numeric>
#include <string>

#include "svpsym/errors.hpp"

namespace svpsym {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Cyc1: return "cyclic-1";
    case CaseTag::Cyc2: return "cyclic-2";
    case CaseTag::Cyc3: return "cyclic-3";
    case CaseTag::Cyc4: return "cyclic-4";
    case CaseTag::Cyc5: return "cyclic-5";
    case CaseTag::NegaI: return "nega-I";
    case CaseTag::NegaII: return "nega-II";
    case CaseTag::NegaIII: return "nega-III";
    case CaseTag::NegaIV: return "nega-IV";
  }
  return "unknown";
}

std::vector<int> prime_factors(int n) {
  if (n <= 0) throw InvalidArgument("prime_factors: argument must be positive");
  std::vector<int> primes;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

CaseLabel classify(SymmetryKind kind, int dim, int q) {
  if (dim < 2) throw InvalidArgument("classify: dimension must be at least 2");
  if (q < 0 || q >= dim) throw InvalidArgument("classify: operator index out of range");

  if (kind == SymmetryKind::Cyclic) {
    const int k = std::gcd(dim, q);  // gcd(N, 0) = N
    if (q == 0) return {CaseTag::Cyc1, k};
    const int reduced = dim / k;
    const bool odd_or_pow2 = reduced % 2 == 1 || is_power_of_two(reduced);
    if (k == 1) return {odd_or_pow2 ? CaseTag::Cyc2 : CaseTag::Cyc3, k};
    return {odd_or_pow2 ? CaseTag::Cyc4 : CaseTag::Cyc5, k};
  }

  const int l = std::gcd(2 * dim, 2 * q + 1);
  if (is_power_of_two(dim)) return {CaseTag::NegaI, l};
  if (l == 1) return {CaseTag::NegaII, l};
  const int quotient = dim / l;  // l is odd and divides 2N, hence N
  if (quotient >= 2 && is_power_of_two(quotient)) return {CaseTag::NegaIII, l};
  return {CaseTag::NegaIV, l};
}

namespace {

// Nt x Nt/p, column j constant on residues i = j mod Nt/p.
IntMatrix periodic_block(int nt, int p) {
  const int width = nt / p;
  IntMatrix a = IntMatrix::Zero(nt, width);
  for (int i = 0; i < nt; ++i) a(i, i % width) = 1;
  return a;
}

// N x N/p with alternating signs between consecutive blocks of length N/p.
IntMatrix antiperiodic_block(int n, int p) {
  const int width = n / p;
  IntMatrix a = IntMatrix::Zero(n, width);
  for (int i = 0; i < n; ++i) a(i, i % width) = ((i * p) / n) % 2 == 0 ? 1 : -1;
  return a;
}

// Basis of {y in Z^Nt : z in span(antiperiodic_block(Nt/2, p))} where
// z_l = y_l - y_{l + Nt/2}. Valid when exp(-i 2 pi qt Nt/2 / Nt) = -1.
IntMatrix half_folded_block(int nt, int p) {
  const int half = nt / 2;
  const IntMatrix w = antiperiodic_block(half, p);
  IntMatrix a = IntMatrix::Zero(nt, w.cols() + half);
  a.topLeftCorner(half, w.cols()) = w;
  for (int l = half; l < nt; ++l) {
    const auto col = w.cols() + (l - half);
    a(l, col) = 1;
    a(l - half, col) = 1;
  }
  return a;
}

// Lifts a basis of admissible folded vectors y (Nt rows) to n-space: the
// y-part sits in rows [0, Nt) and every position t >= Nt is free, paired
// with -e_{t mod Nt} so that the fold y(n) is unchanged.
IntMatrix lift_folded(int n, int nt, const IntMatrix& y_basis) {
  const auto r = y_basis.cols();
  IntMatrix a = IntMatrix::Zero(n, r + (n - nt));
  a.topLeftCorner(nt, r) = y_basis;
  for (int t = nt; t < n; ++t) {
    const auto col = r + (t - nt);
    a(t, col) = 1;
    a(t % nt, col) -= 1;
  }
  return a;
}

ConstraintsMatrix make(IntMatrix entries, std::string origin, int q, std::optional<int> prime) {
  return ConstraintsMatrix{std::move(entries), std::move(origin), q, prime};
}

}  // namespace

std::vector<ConstraintsMatrix> constraints_for(SymmetryKind kind, int dim, int q) {
  const CaseLabel label = classify(kind, dim, q);
  std::vector<ConstraintsMatrix> out;

  switch (label.tag) {
    case CaseTag::Cyc1: {
      IntMatrix a = IntMatrix::Zero(dim, dim - 1);
      for (int j = 0; j < dim - 1; ++j) {
        a(j, j) = 1;
        a(dim - 1, j) = -1;
      }
      out.push_back(make(std::move(a), "cyclic-1", q, std::nullopt));
      break;
    }
    case CaseTag::Cyc2:
      for (int p : prime_factors(dim)) {
        out.push_back(make(periodic_block(dim, p), "cyclic-2", q, p));
      }
      break;
    case CaseTag::Cyc3:
      for (int p : prime_factors(dim)) {
        out.push_back(make(periodic_block(dim, p), "cyclic-2", q, p));
      }
      for (int r : prime_factors(dim / 2)) {
        if (r > 2) out.push_back(make(half_folded_block(dim, r), "cyclic-3", q, r));
      }
      break;
    case CaseTag::Cyc4: {
      const int nt = dim / label.gcd_value;
      for (int p : prime_factors(nt)) {
        out.push_back(make(lift_folded(dim, nt, periodic_block(nt, p)), "cyclic-4", q, p));
      }
      break;
    }
    case CaseTag::Cyc5: {
      const int nt = dim / label.gcd_value;
      for (int r : prime_factors(nt / 2)) {
        if (r > 2) {
          out.push_back(make(lift_folded(dim, nt, half_folded_block(nt, r)), "cyclic-3", q, r));
        }
      }
      for (int p : prime_factors(nt)) {
        out.push_back(make(lift_folded(dim, nt, periodic_block(nt, p)), "cyclic-4", q, p));
      }
      break;
    }
    case CaseTag::NegaI:
      break;
    case CaseTag::NegaII:
      for (int p : prime_factors(dim)) {
        if (p > 2) out.push_back(make(antiperiodic_block(dim, p), "nega-II", q, p));
      }
      break;
    case CaseTag::NegaIII: {
      const int nt = 2 * dim / label.gcd_value;
      out.push_back(make(lift_folded(dim, nt, periodic_block(nt, 2)), "nega-III", q, 2));
      break;
    }
    case CaseTag::NegaIV: {
      const int nt = 2 * dim / label.gcd_value;
      for (int p : prime_factors(nt)) {
        out.push_back(make(lift_folded(dim, nt, periodic_block(nt, p)), "nega-IV", q, p));
      }
      for (int r : prime_factors(dim / label.gcd_value)) {
        if (r > 2) {
          out.push_back(make(lift_folded(dim, nt, half_folded_block(nt, r)), "nega-V", q, r));
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace svpsym
