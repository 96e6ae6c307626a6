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

#include "svpsym/kernel_hnf.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "svpsym/errors.hpp"

namespace svpsym {

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::from(const IntMatrix& m) {
  BigMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int c = 0; c < out.cols(); ++c) {
    for (int r = 0; r < out.rows(); ++r) out(r, c) = m(r, c);
  }
  return out;
}

BigMatrix BigMatrix::transpose() const {
  BigMatrix out(cols_, rows_);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) out(c, r) = (*this)(r, c);
  }
  return out;
}

BigMatrix BigMatrix::columns(int first, int count) const {
  BigMatrix out(rows_, count);
  for (int c = 0; c < count; ++c) {
    for (int r = 0; r < rows_; ++r) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

IntMatrix BigMatrix::to_int() const {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  IntMatrix out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) {
    for (int r = 0; r < rows_; ++r) {
      const BigInt& v = (*this)(r, c);
      if (v < lo || v > hi) throw ResourceLimit("integer matrix entry exceeds 64 bits");
      out(r, c) = static_cast<std::int64_t>(v);
    }
  }
  return out;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("BigMatrix product: shape mismatch");
  BigMatrix out(a.rows(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    for (int k = 0; k < a.cols(); ++k) {
      const BigInt& bk = b(k, c);
      if (bk == 0) continue;
      for (int r = 0; r < a.rows(); ++r) out(r, c) += a(r, k) * bk;
    }
  }
  return out;
}

BigInt determinant(const BigMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int totient(int n) {
  if (n <= 0) throw InvalidArgument("totient: argument must be positive");
  int result = n;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Exact quotient of a by a monic divisor.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& monic) {
  const int db = static_cast<int>(monic.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  std::vector<BigInt> quotient(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    const BigInt lead = a[static_cast<std::size_t>(k + db)];
    quotient[static_cast<std::size_t>(k)] = lead;
    if (lead == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[static_cast<std::size_t>(k + j)] -= lead * monic[static_cast<std::size_t>(j)];
    }
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic: inexact polynomial division");
  return quotient;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// d = gcd(a, b) >= 0 with u a + v b = d.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& d, BigInt& u, BigInt& v) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  d = r0;
  u = s0;
  v = t0;
}

}  // namespace

IntPolynomial cyclotomic(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder) {
    throw InvalidArgument("cyclotomic: order must lie in [1, " +
                          std::to_string(kMaxCyclotomicOrder) + "]");
  }
  std::map<int, std::vector<BigInt>> known;
  for (int d : divisors(n)) {
    // x^d - 1 divided by Phi_e for every proper divisor e of d.
    std::vector<BigInt> poly(static_cast<std::size_t>(d) + 1);
    poly.front() = -1;
    poly.back() = 1;
    for (int e : divisors(d)) {
      if (e != d) poly = divide_exact(std::move(poly), known.at(e));
    }
    known.emplace(d, std::move(poly));
  }
  return IntPolynomial{known.at(n)};
}

ReductionMatrix reduction_matrix(SymmetryKind kind, int dim, int q) {
  if (dim < 2) throw InvalidArgument("reduction_matrix: dimension must be at least 2");
  if (q < 0 || q >= dim) throw InvalidArgument("reduction_matrix: operator index out of range");
  if (kind == SymmetryKind::Cyclic && q == 0) {
    throw Unsupported("reduction_matrix: cyclic q = 0 uses the closed-form basis");
  }
  const int multiplier = kind == SymmetryKind::Cyclic ? q : 2 * q + 1;
  const int modulus = kind == SymmetryKind::Cyclic ? dim : 2 * dim;
  const int g = std::gcd(modulus, multiplier);

  ReductionMatrix out;
  out.order = modulus / g;
  out.step = (multiplier / g) % out.order;
  const std::vector<BigInt> phi = cyclotomic(out.order).coefficients;
  const int width = static_cast<int>(phi.size()) - 1;

  // powers[e] = x^e mod Phi_ord for e in [0, ord).
  std::vector<std::vector<BigInt>> powers(static_cast<std::size_t>(out.order));
  std::vector<BigInt> current(static_cast<std::size_t>(width));
  current[0] = 1;
  for (int e = 0; e < out.order; ++e) {
    powers[static_cast<std::size_t>(e)] = current;
    // Multiply by x, then fold the x^width term back with the monic Phi.
    BigInt top = current.back();
    for (int j = width - 1; j > 0; --j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)];
    }
    current[0] = 0;
    if (top != 0) {
      for (int j = 0; j < width; ++j) current[static_cast<std::size_t>(j)] -= top * phi[static_cast<std::size_t>(j)];
    }
  }

  out.entries = BigMatrix(dim, width);
  for (int k = 0; k < dim; ++k) {
    const auto e = static_cast<std::size_t>((static_cast<long long>(out.step) * k) % out.order);
    for (int j = 0; j < width; ++j) out.entries(k, j) = powers[e][static_cast<std::size_t>(j)];
  }
  return out;
}

namespace {

class ColumnOps {
 public:
  ColumnOps(BigMatrix& h, BigMatrix& u) : h_(h), u_(u) {}

  // (col_k, col_j) <- (a col_k + b col_j, c col_j + d col_k)
  void combine(int k, int j, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    apply(h_, k, j, a, b, c, d);
    apply(u_, k, j, a, b, c, d);
  }

  void negate(int k) {
    for (int r = 0; r < h_.rows(); ++r) h_(r, k) = -h_(r, k);
    for (int r = 0; r < u_.rows(); ++r) u_(r, k) = -u_(r, k);
  }

  // col_j -= f col_k
  void subtract(int j, int k, const BigInt& f) {
    for (int r = 0; r < h_.rows(); ++r) h_(r, j) -= f * h_(r, k);
    for (int r = 0; r < u_.rows(); ++r) u_(r, j) -= f * u_(r, k);
  }

 private:
  static void apply(BigMatrix& m, int k, int j, const BigInt& a, const BigInt& b, const BigInt& c,
                    const BigInt& d) {
    for (int r = 0; r < m.rows(); ++r) {
      BigInt nk = a * m(r, k) + b * m(r, j);
      BigInt nj = c * m(r, j) + d * m(r, k);
      m(r, k) = std::move(nk);
      m(r, j) = std::move(nj);
    }
  }

  BigMatrix& h_;
  BigMatrix& u_;
};

}  // namespace

HnfResult hnf(const BigMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0) throw InvalidArgument("hnf: empty matrix");
  HnfResult out;
  out.h = x;
  out.u = BigMatrix::identity(x.cols());
  ColumnOps ops(out.h, out.u);
  BigMatrix& h = out.h;

  int k = x.cols() - 1;
  for (int i = x.rows() - 1; i >= 0 && k >= 0; --i) {
    for (int j = k - 1; j >= 0; --j) {
      if (h(i, j) == 0) continue;
      const BigInt a = h(i, k);
      const BigInt b = h(i, j);
      BigInt d, s, t;
      extended_gcd(a, b, d, s, t);
      // [[s, -b/d], [t, a/d]] has determinant 1.
      ops.combine(k, j, s, t, a / d, -(b / d));
    }
    if (h(i, k) < 0) ops.negate(k);
    if (h(i, k) == 0) continue;
    const BigInt pivot = h(i, k);
    for (int j = k + 1; j < x.cols(); ++j) {
      const BigInt f = floor_div(h(i, j), pivot);
      if (f != 0) ops.subtract(j, k, f);
    }
    --k;
  }
  out.rank = x.cols() - 1 - k;
  return out;
}

ConstraintsMatrix kernel_basis(SymmetryKind kind, int dim, int q) {
  if (dim < 2) throw InvalidArgument("kernel_basis: dimension must be at least 2");
  if (q < 0 || q >= dim) throw InvalidArgument("kernel_basis: operator index out of range");

  ConstraintsMatrix out;
  out.origin = "hnf";
  out.operator_index = q;

  if (kind == SymmetryKind::Cyclic && q == 0) {
    out.entries = IntMatrix::Zero(dim, dim - 1);
    for (int j = 0; j < dim - 1; ++j) {
      out.entries(j, j) = 1;
      out.entries(dim - 1, j) = -1;
    }
    return out;
  }

  const ReductionMatrix reduction = reduction_matrix(kind, dim, q);
  const HnfResult first = hnf(reduction.entries.transpose());
  if (first.kernel_dim() == 0) {
    out.entries = IntMatrix::Zero(dim, 0);
    return out;
  }
  // Canonical basis of the same lattice: Hermite form of the kernel columns.
  const HnfResult canonical = hnf(first.kernel_columns());
  out.entries = canonical.h.columns(canonical.h.cols() - canonical.rank, canonical.rank).to_int();
  return out;
}

IntegerSpanSolver::IntegerSpanSolver(const IntMatrix& a) : rows_(static_cast<int>(a.rows())) {
  if (a.cols() == 0) return;
  const HnfResult r = hnf(BigMatrix::from(a));
  const int zero_cols = r.kernel_dim();
  pivot_h_ = r.h.columns(zero_cols, r.rank);
  pivot_u_ = r.u.columns(zero_cols, r.rank);
  for (int j = 0; j < r.rank; ++j) {
    int row = -1;
    for (int i = rows_ - 1; i >= 0; --i) {
      if (pivot_h_(i, j) != 0) {
        row = i;
        break;
      }
    }
    pivot_rows_.push_back(row);
  }
  try {
    fast_h_ = pivot_h_.to_int();
    fast_ok_ = fast_h_.cwiseAbs().maxCoeff() < (std::int64_t{1} << 20);
  } catch (const ResourceLimit&) {
    fast_ok_ = false;
  }
}

std::optional<std::vector<BigInt>> IntegerSpanSolver::coordinates(
    std::span<const std::int64_t> c) const {
  if (c.size() != static_cast<std::size_t>(rows_)) {
    throw InvalidArgument("IntegerSpanSolver: vector has wrong length");
  }
  std::vector<BigInt> residual(c.begin(), c.end());
  std::vector<BigInt> x(pivot_rows_.size());
  for (int j = rank() - 1; j >= 0; --j) {
    const int p = pivot_rows_[static_cast<std::size_t>(j)];
    const BigInt& pivot = pivot_h_(p, j);
    const BigInt& value = residual[static_cast<std::size_t>(p)];
    if (value % pivot != 0) return std::nullopt;
    const BigInt f = value / pivot;
    if (f == 0) continue;
    for (int i = 0; i <= p; ++i) residual[static_cast<std::size_t>(i)] -= f * pivot_h_(i, j);
    x[static_cast<std::size_t>(j)] = f;
  }
  for (const BigInt& v : residual) {
    if (v != 0) return std::nullopt;
  }
  return x;
}

bool IntegerSpanSolver::contains(std::span<const std::int64_t> c) const {
  if (c.size() != static_cast<std::size_t>(rows_)) {
    throw InvalidArgument("IntegerSpanSolver: vector has wrong length");
  }
  if (!fast_ok_) return coordinates(c).has_value();

  constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
  std::vector<__int128> residual(c.begin(), c.end());
  for (int j = rank() - 1; j >= 0; --j) {
    const int p = pivot_rows_[static_cast<std::size_t>(j)];
    const std::int64_t pivot = fast_h_(p, j);
    const __int128 value = residual[static_cast<std::size_t>(p)];
    if (value % pivot != 0) return false;
    const __int128 f = value / pivot;
    if (f == 0) continue;
    if (f > kLimit / (1 << 21) || -f > kLimit / (1 << 21)) return coordinates(c).has_value();
    for (int i = 0; i <= p; ++i) {
      residual[static_cast<std::size_t>(i)] -= f * fast_h_(i, j);
      if (residual[static_cast<std::size_t>(i)] > kLimit || -residual[static_cast<std::size_t>(i)] > kLimit) {
        return coordinates(c).has_value();
      }
    }
  }
  for (__int128 v : residual) {
    if (v != 0) return false;
  }
  return true;
}

std::optional<std::vector<BigInt>> IntegerSpanSolver::solve(std::span<const std::int64_t> c) const {
  auto x = coordinates(c);
  if (!x) return std::nullopt;
  std::vector<BigInt> m(static_cast<std::size_t>(pivot_u_.rows()));
  for (int r = 0; r < pivot_u_.rows(); ++r) {
    for (int j = 0; j < rank(); ++j) m[static_cast<std::size_t>(r)] += pivot_u_(r, j) * (*x)[static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace svpsym
