#pragma once

#include <string_view>
#include <vector>

#include "flatstat/permutation.hpp"
#include "flatstat/polynomial.hpp"
#include "flatstat/series.hpp"

namespace flatstat {

/// How a distribution is computed. Series reads the coefficient off a
/// closed-form generating function and exists for cross-checking.
enum class MethodTag { Brute, Recurrence, Closed, Kernel, Series };

const char* to_string(MethodTag m) noexcept;
/// "brute", "recurrence", "closed", "kernel", "series"; Error(Parse) otherwise.
MethodTag parse_method(std::string_view name);

/// alpha_{k,i} = C(k-1,i-1) - C(k-3,i-3) under the zero binomial convention.
BigInt alpha(int k, int i);
/// beta_{k,i} = C(k-2,i-1) + C(k-3,i-2).
BigInt beta(int k, int i);

/// b_i for Sub123, Sub321, Peak and Valley (and Des, where b_i = (-theta)^{i-1}),
/// i >= 1. Chebyshev-based values go through SPolynomial and
/// spoly_reduce_even.
QPolynomial b_coeff(const Statistic& st, int i);

/// theta * b^r_{-1} and b^r_0 for the 123 recurrence; both equal -1.
QPolynomial sub123_theta_b_minus_one();
QPolynomial sub123_b_zero();

/// Methods accepted by dist() for a statistic, in preference order
/// (Closed, Recurrence, Kernel, Series, Brute).
std::vector<MethodTag> supported_methods(const Statistic& st);
bool method_supported(const Statistic& st, MethodTag m);
/// First of Closed, Recurrence, Brute that the statistic supports.
MethodTag default_method(const Statistic& st);

/// g_n^st. Throws Error(MethodUnsupported) for a method the statistic does
/// not support and Error(Range) for n < 1.
QPolynomial dist(const Statistic& st, int n, MethodTag method);
QPolynomial dist(const Statistic& st, int n);

/// F_21(n; q, v) = sum_{j=2}^n F_21(n; q | 1j) v^{j-2}, n >= 1.
QVPolynomial des_kernel_bivariate(int n);

/// g_n^st(1k) for 2 <= k <= n and st in {Des, Sub123, Sub321, Peak, Valley}.
QPolynomial prefix_dist(const Statistic& st, int n, int k);

/// Closed-form average of the statistic over S_n; Error(Range) outside the
/// formula's range (Des, Asc n >= 1; Sub321, Peak n >= 2; Sub123, Valley n >= 3).
Rational average(const Statistic& st, int n);
/// g'(1) / n!.
Rational average_from_distribution(const QPolynomial& g, int n);

/// Closed-form generating function G(x) = sum_m g_{m+1} x^m / m! for
/// "des" (A(x,q)^2), "321" and "peak" ((1 - B(x))^{-2}) and "valley".
QSeries identity_series(std::string_view name, int order);

/// m! [x^m] identity_series(name) == dist(st, m+1, Recurrence) for all
/// m <= order. Throws Error(Range) when order exceeds max_order.
bool series_identity_check(std::string_view name, int order, int max_order = 12);

/// Recomputes the frozen constants (the 123 seeds g_1..g_3 and
/// g_n(12) = 2 q^{[st = 123]} g_{n-1}) by enumeration up to n_max.
bool verify_frozen_constants(int n_max = 6);

}  // namespace flatstat
