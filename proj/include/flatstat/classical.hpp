#pragma once

#include <functional>
#include <span>
#include <vector>

#include "flatstat/polynomial.hpp"

namespace flatstat {

/// Eulerian numbers A_{n,k} (permutations of [n] with k ascents), rows 0..N.
class EulerianTable {
 public:
  explicit EulerianTable(int max_n);

  int max_n() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  /// A_{n,k}; zero outside 0 <= k <= n.
  BigInt number(int n, int k) const;
  /// A_n(q) = sum_k A_{n,k} q^k.
  const QPolynomial& poly(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<QPolynomial> rows_;
};

QPolynomial eulerian_poly(int n);

/// V_n(s) = U_n(s/2): V_{-2} = -1, V_{-1} = 0, V_n = s V_{n-1} - V_{n-2}.
/// Integer coefficients; degree n and parity n for n >= 0.
SPolynomial chebyshev_v(int n);

/// U_n(t) from the closed form with complex square roots, n >= -2. Throws
/// Error(ResidueTooLarge) if the imaginary residue exceeds 1e-9.
double chebyshev_closed_eval(int n, double t);

enum class StirlingKind { FirstSignless, FirstSigned, Second };

/// c(n,k), s1(n,k) or S2(n,k); zero for negative arguments.
BigInt stirling(StirlingKind kind, int n, int k);

/// [x^n] (x^2 cot x)^m, evaluated twice: by the closed Stirling double sum
/// and by exact truncated series arithmetic. Throws Error(Mismatch) if the
/// two disagree. Zero when n < m or n - m is odd.
Rational t_coeff(int n, int m);

/// Closed Stirling double-sum route only.
Rational t_coeff_closed(int n, int m);
/// Series route only.
Rational t_coeff_series(int n, int m);

/// Visits every sequence of `parts` nonnegative integers summing to `total`
/// exactly once, in lexicographic order.
void weak_compositions(int total, int parts, const std::function<void(std::span<const int>)>& visit);

}  // namespace flatstat
