#include "flatstat/classical.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace flatstat {

EulerianTable::EulerianTable(int max_n) {
  if (max_n < 0) throw Error(ErrorCode::Range, "Eulerian table size must be >= 0");
  std::vector<BigInt> row{1};
  rows_.emplace_back(row);
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
      BigInt v = 0;
      if (k < static_cast<int>(row.size())) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k >= 1 && k - 1 < static_cast<int>(row.size())) v += (n - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v;
    }
    row = std::move(next);
    rows_.emplace_back(row);
  }
}

BigInt EulerianTable::number(int n, int k) const { return poly(n).coeff(k); }

QPolynomial eulerian_poly(int n) { return EulerianTable(n).poly(n); }

SPolynomial chebyshev_v(int n) {
  if (n < -2) throw Error(ErrorCode::Range, "Chebyshev index must be >= -2");
  SPolynomial prev2(-1), prev1(0);  // V_{-2}, V_{-1}
  if (n == -2) return prev2;
  const SPolynomial s = SPolynomial::variable();
  for (int i = 0; i <= n; ++i) {
    SPolynomial next = s * prev1 - prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

namespace {

std::complex<double> ipow(std::complex<double> z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  std::complex<double> r = 1.0;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= z;
    z *= z;
  }
  return r;
}

}  // namespace

double chebyshev_closed_eval(int n, double t) {
  if (n < -2) throw Error(ErrorCode::Range, "Chebyshev index must be >= -2");
  const std::complex<double> root = std::sqrt(std::complex<double>(t * t - 1.0, 0.0));
  if (std::abs(root) < 1e-12) {
    // t = +-1: the quotient degenerates to its limit (+-1)^n (n+1).
    return (t > 0 || n % 2 == 0 ? 1.0 : -1.0) * (n + 1);
  }
  const std::complex<double> value =
      (ipow(t + root, n + 1) - ipow(t - root, n + 1)) / (2.0 * root);
  if (std::abs(value.imag()) > 1e-9)
    throw Error(ErrorCode::ResidueTooLarge,
                "imaginary residue " + std::to_string(value.imag()) + " in U_" + std::to_string(n));
  return value.real();
}

BigInt stirling(StirlingKind kind, int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Row-by-row: c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k); S2(n,k) = S2(n-1,k-1) + k S2(n-1,k).
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
    for (int j = 1; j <= i; ++j) {
      BigInt v = row[static_cast<std::size_t>(j - 1)];
      if (j < i) v += (kind == StirlingKind::Second ? j : i - 1) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  BigInt value = row[static_cast<std::size_t>(k)];
  if (kind == StirlingKind::FirstSigned && (n - k) % 2 == 1) value = -value;
  return value;
}

namespace {

// Triangle of a Stirling kind up to size n, indexed [a][b].
std::vector<std::vector<BigInt>> stirling_table(StirlingKind kind, int n) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(n) + 1);
  t[0] = {1};
  for (int i = 1; i <= n; ++i) {
    auto& row = t[static_cast<std::size_t>(i)];
    const auto& prev = t[static_cast<std::size_t>(i - 1)];
    row.assign(static_cast<std::size_t>(i) + 1, 0);
    for (int j = 1; j <= i; ++j) {
      BigInt v = prev[static_cast<std::size_t>(j - 1)];
      if (j < i) {
        const BigInt& p = prev[static_cast<std::size_t>(j)];
        if (kind == StirlingKind::Second) v += j * p;
        else if (kind == StirlingKind::FirstSigned) v -= (i - 1) * p;
        else v += (i - 1) * p;
      }
      row[static_cast<std::size_t>(j)] = std::move(v);
    }
  }
  return t;
}

BigInt table_at(const std::vector<std::vector<BigInt>>& t, int a, int b) {
  if (a < 0 || b < 0 || a >= static_cast<int>(t.size()) || b > a) return 0;
  return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

// 1/a!, with the reciprocal-gamma convention 1/a! = 0 for negative a.
Rational inverse_factorial(int a) {
  if (a < 0) return 0;
  return Rational(1) / Rational(factorial(a));
}

using RationalSeries = std::vector<Rational>;

RationalSeries multiply(const RationalSeries& a, const RationalSeries& b, std::size_t order) {
  RationalSeries out(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

Rational t_coeff_closed(int n, int m) {
  if (m < 1) throw Error(ErrorCode::Range, "t_{n,m} requires m >= 1");
  if (n < m || (n - m) % 2 != 0) return 0;
  const int shift = n - 2 * m;  // may be negative
  const auto s1 = stirling_table(StirlingKind::FirstSigned, n + 1);
  const auto s2 = stirling_table(StirlingKind::Second, n + 1);
  Rational sum = 0;
  for (int l = 0; l <= m; ++l) {
    // S2(shift + l, k) vanishes for k > shift + l.
    for (int k = 0; k <= shift + l; ++k) {
      const BigInt a = table_at(s1, l + k, l);
      const BigInt b = table_at(s2, shift + l, k);
      if (a == 0 || b == 0) continue;
      sum += Rational(BigInt(1) << l) * Rational(factorial(k) * a * b) * inverse_factorial(m - l) *
             inverse_factorial(l + k) * inverse_factorial(shift + l);
    }
  }
  Rational pow2 = shift >= 0 ? Rational(BigInt(1) << shift) : Rational(1) / Rational(BigInt(1) << -shift);
  Rational value = pow2 * Rational(factorial(m)) * sum;
  if (((n - m) / 2) % 2 == 1) value = -value;
  return value;
}

Rational t_coeff_series(int n, int m) {
  if (m < 1) throw Error(ErrorCode::Range, "t_{n,m} requires m >= 1");
  if (n < m || (n - m) % 2 != 0) return 0;
  // x^2 cot x = x * cos(x) / (sin(x)/x); (x^2 cot x)^m = x^m * (x cot x)^m.
  const std::size_t order = static_cast<std::size_t>(n - m);
  RationalSeries cosine(order + 1, Rational(0)), sinc(order + 1, Rational(0));
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    const Rational sign = k % 2 ? -1 : 1;
    cosine[2 * k] = sign / Rational(factorial(static_cast<int>(2 * k)));
    sinc[2 * k] = sign / Rational(factorial(static_cast<int>(2 * k + 1)));
  }
  RationalSeries inv_sinc(order + 1, Rational(0));
  inv_sinc[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= i; ++k) acc += sinc[k] * inv_sinc[i - k];
    inv_sinc[i] = -acc;
  }
  const RationalSeries xcot = multiply(cosine, inv_sinc, order);
  RationalSeries power(order + 1, Rational(0));
  power[0] = 1;
  RationalSeries base = xcot;
  for (int e = m; e > 0; e >>= 1) {
    if (e & 1) power = multiply(power, base, order);
    if (e > 1) base = multiply(base, base, order);
  }
  return power[order];
}

Rational t_coeff(int n, int m) {
  const Rational closed = t_coeff_closed(n, m);
  const Rational series = t_coeff_series(n, m);
  if (closed != series)
    throw Error(ErrorCode::Mismatch, "Mismatch(" + std::to_string(n) + "," + std::to_string(m) +
                                         "): closed sum " + rational_to_string(closed) + " vs series " +
                                         rational_to_string(series));
  return series;
}

namespace {

void compose(int remaining, std::size_t slot, std::vector<int>& buf,
             const std::function<void(std::span<const int>)>& visit) {
  if (slot + 1 == buf.size()) {
    buf[slot] = remaining;
    visit(buf);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    buf[slot] = v;
    compose(remaining - v, slot + 1, buf, visit);
  }
}

}  // namespace

void weak_compositions(int total, int parts, const std::function<void(std::span<const int>)>& visit) {
  if (total < 0 || parts < 1) return;
  std::vector<int> buf(static_cast<std::size_t>(parts));
  compose(total, 0, buf, visit);
}

}  // namespace flatstat
