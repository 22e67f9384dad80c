#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flatstat {

/// Floating evaluation of the closed analytic forms, q in (0,1):
///   "H"   the derivative of G^r(x) in trigonometric form
///   "Gr"  1 + integral_0^x H(t) dt by adaptive Gauss-Kronrod quadrature
///   "Br"  trigonometric form of B^r(x)
///   "Bd"  trigonometric form of B^d(x)
/// Throws Error(PoleProximity) near a zero of a denominator,
/// Error(QuadratureFailure) when the quadrature error estimate is too large.
double analytic_eval(std::string_view name, double x, double q);

/// The same four functions from their exact power series truncated after
/// x^order, coefficients evaluated exactly at q.
double series_eval(std::string_view name, double x, double q, int order = 30);

struct InfiniteSum {
  double value = 0.0;
  double tail_bound = 0.0;  // certified bound on the omitted terms
  int terms = 0;
};

/// The geometric-type infinite sums for g_n(q):
///   "des"     q in (0,1)
///   "asc"     q > 1, through q^{n-1} des(n, 1/q)
///   "valley"  q in (0,1), n >= 2
/// Throws Error(NoConvergence) if the tail bound is not below 1e-12 after
/// 10^4 terms.
InfiniteSum infinite_sum_eval(std::string_view name, int n, double q);

struct PeakDiagnosticTerm {
  int j;
  double term;
  double partial_sum;
};

struct PeakDiagnostic {
  int n = 0;
  double q = 0.0;
  int max_j = 0;
  double exact = 0.0;
  std::vector<PeakDiagnosticTerm> terms;

  std::string to_string() const;
};

/// Partial sums of the t_{n+2j,j} expansion of g_n^peak(q) for j <= J with
/// j = n mod 2, next to the exact value. Reports only; never asserts.
PeakDiagnostic peak_series_diagnostic(int n, double q, int max_j);

}  // namespace flatstat
