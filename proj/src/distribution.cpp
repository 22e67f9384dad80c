#include "flatstat/distribution.hpp"

#include <mutex>
#include <string>

#include "flatstat/classical.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/oracle.hpp"

namespace flatstat {

const char* to_string(MethodTag m) noexcept {
  switch (m) {
    case MethodTag::Brute: return "brute";
    case MethodTag::Recurrence: return "recurrence";
    case MethodTag::Closed: return "closed";
    case MethodTag::Kernel: return "kernel";
    case MethodTag::Series: return "series";
  }
  return "?";
}

MethodTag parse_method(std::string_view name) {
  for (MethodTag m : {MethodTag::Brute, MethodTag::Recurrence, MethodTag::Closed, MethodTag::Kernel, MethodTag::Series})
    if (name == to_string(m)) return m;
  throw Error(ErrorCode::Parse, "unknown method: " + std::string(name));
}

BigInt alpha(int k, int i) { return binomial(k - 1, i - 1) - binomial(k - 3, i - 3); }
BigInt beta(int k, int i) { return binomial(k - 2, i - 1) + binomial(k - 3, i - 2); }

namespace {

const QPolynomial kTheta(std::vector<BigInt>{1, -1});

}  // namespace

QPolynomial b_coeff(const Statistic& st, int i) {
  if (i < 1) throw Error(ErrorCode::Range, "b_i needs i >= 1");
  const SPolynomial s_pow = SPolynomial::monomial(1, i - 1);
  switch (st.kind) {
    case StatKind::Sub123:
      return spoly_reduce_even(-(s_pow * chebyshev_v(i + 1)));
    case StatKind::Sub321: {
      const SPolynomial v = s_pow * chebyshev_v(i - 3);
      return spoly_reduce_even(i % 2 == 0 ? v : -v);
    }
    case StatKind::Peak:
    case StatKind::Valley: {
      const QPolynomial t = theta_power(i / 2);
      return i % 2 == 1 ? t : -t;
    }
    case StatKind::Des: {
      const QPolynomial t = theta_power(i - 1);
      return (i - 1) % 2 == 0 ? t : -t;
    }
    default:
      throw Error(ErrorCode::MethodUnsupported, "no b-coefficients for " + st.name());
  }
}

QPolynomial sub123_theta_b_minus_one() { return QPolynomial(-1); }
QPolynomial sub123_b_zero() { return QPolynomial(-1); }

namespace {

std::vector<QPolynomial> b_table(const Statistic& st, int max_i) {
  std::vector<QPolynomial> b(static_cast<std::size_t>(std::max(max_i, 0)) + 1);
  for (int i = 1; i <= max_i; ++i) b[static_cast<std::size_t>(i)] = b_coeff(st, i);
  return b;
}

const std::vector<QPolynomial>& sub123_seeds() {
  // g_1, g_2, g_3 for 123-subwords, frozen from enumeration of S_1..S_3.
  static const std::vector<QPolynomial> seeds{QPolynomial(), QPolynomial(1), QPolynomial(2),
                                              QPolynomial(std::vector<BigInt>{2, 4})};
  return seeds;
}

void assert_frozen_constants() {
  static std::once_flag once;
  static bool ok = false;
  std::call_once(once, [] { ok = verify_frozen_constants(6); });
  if (!ok) throw Error(ErrorCode::Mismatch, "frozen seed constants disagree with enumeration");
}

// Each *_sequence returns g_0..g_N with g_0 unused (zero).

std::vector<QPolynomial> des_recurrence_sequence(int N) {
  std::vector<QPolynomial> g(static_cast<std::size_t>(N) + 1);
  g[0] = QPolynomial(1);  // never used: its bracket vanishes below
  if (N >= 1) g[1] = QPolynomial(1);
  const QPolynomial minus_theta = -kTheta;
  for (int n = 2; n <= N; ++n) {
    const BigInt last = binomial(n, n) - binomial(n - 2, n - 2);
    if (last != 0) throw Error(ErrorCode::Mismatch, "descent recurrence depends on g_0");
    QPolynomial acc;
    QPolynomial power(1);  // (-theta)^{i-1}
    for (int i = 1; i < n; ++i) {
      const BigInt c = binomial(n, i) - binomial(n - 2, i - 2);
      if (c != 0) acc += (power * g[static_cast<std::size_t>(n - i)]).scaled(c);
      power *= minus_theta;
    }
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return g;
}

std::vector<QPolynomial> sub123_sequence(int N) {
  assert_frozen_constants();
  const auto& seeds = sub123_seeds();
  std::vector<QPolynomial> g(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= std::min(N, 3); ++n) g[static_cast<std::size_t>(n)] = seeds[static_cast<std::size_t>(n)];
  const auto b = b_table(Statistic::sub123(), N);
  // theta * b_{i-2}, including the two special values at i = 1, 2.
  auto theta_b_shift = [&](int i) -> QPolynomial {
    if (i == 1) return sub123_theta_b_minus_one();
    if (i == 2) return kTheta * sub123_b_zero();
    return kTheta * b[static_cast<std::size_t>(i - 2)];
  };
  for (int n = 4; n <= N; ++n) {
    QPolynomial acc;
    for (int i = 1; i <= n - 2; ++i) {
      const QPolynomial factor = b[static_cast<std::size_t>(i)].scaled(alpha(n, i + 1)) -
                                 theta_b_shift(i).scaled(alpha(n - 1, i));
      acc += factor * g[static_cast<std::size_t>(n - i)];
    }
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return g;
}

// g_n = 2 g_{n-1} + sum_{k=3}^n g_n(1k), with g_n(1k) = sum_i coef(k,i) b_i g_{n-i}.
std::vector<QPolynomial> composition_sequence(const Statistic& st, int N) {
  assert_frozen_constants();
  std::vector<QPolynomial> g(static_cast<std::size_t>(N) + 1);
  if (N >= 1) g[1] = QPolynomial(1);
  const auto b = b_table(st, N);
  const bool use_beta = st.kind == StatKind::Peak;
  for (int n = 2; n <= N; ++n) {
    QPolynomial acc = g[static_cast<std::size_t>(n - 1)].scaled(2);
    for (int i = 1; i <= n - 1; ++i) {
      BigInt weight = 0;
      for (int k = std::max(3, i + 1); k <= n; ++k) weight += use_beta ? beta(k, i) : alpha(k, i);
      if (weight != 0) acc += (b[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(n - i)]).scaled(weight);
    }
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return g;
}

std::vector<QPolynomial> valley_sequence(int N) {
  std::vector<QPolynomial> g(static_cast<std::size_t>(N) + 1);
  if (N >= 1) g[1] = QPolynomial(1);
  const auto b = b_table(Statistic::valley(), N);
  for (int n = 2; n <= N; ++n) {
    QPolynomial acc;
    for (int i = 1; i <= n - 1; ++i)
      acc += (b[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(n - i)]).scaled(beta(n + 1, i + 1));
    if (n % 2 == 1) acc += theta_power((n - 1) / 2).scaled(2);
    g[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return g;
}

std::vector<QPolynomial> recurrence_sequence(const Statistic& st, int N) {
  switch (st.kind) {
    case StatKind::Des: return des_recurrence_sequence(N);
    case StatKind::Sub123: return sub123_sequence(N);
    case StatKind::Sub321:
    case StatKind::Peak: return composition_sequence(st, N);
    case StatKind::Valley: return valley_sequence(N);
    default: throw Error(ErrorCode::MethodUnsupported, "no recurrence for " + st.name());
  }
}

QPolynomial des_closed(int n) {
  const QPolynomial qm1(std::vector<BigInt>{-1, 1});
  return qpoly_div_q(eulerian_poly(n) + qm1 * eulerian_poly(n - 1));
}

QPolynomial valley_closed(int n) {
  if (n == 1) return QPolynomial(1);
  const SPolynomial one_minus(std::vector<BigInt>{1, -1});
  const SPolynomial one_plus(std::vector<BigInt>{1, 1});
  const QPolynomial a = eulerian_poly(n - 1);
  SPolynomial acc;
  for (int k = 0; k <= a.degree(); ++k)
    acc += (one_minus.pow(k) * one_plus.pow(n - 2 - k)).scaled(a.coeff(k));
  return spoly_reduce_even(acc.scaled(n));
}

QPolynomial peak_closed(int n) {
  if (n == 1) return QPolynomial(1);
  const int total = n - 1;
  const BigInt top = factorial(total);
  QPolynomial acc;
  for (int k = 1; k <= total; ++k) {
    QPolynomial inner;
    weak_compositions(total - k, k, [&](std::span<const int> parts) {
      BigInt multinomial = top;
      int exponent = 0;
      for (int p : parts) {
        multinomial /= factorial(p + 1);
        exponent += (p + 1) / 2;
      }
      inner += theta_power(exponent).scaled(multinomial);
    });
    const BigInt sign = (n + k - 1) % 2 == 0 ? 1 : -1;
    acc += inner.scaled(sign * (k + 1));
  }
  return acc;
}

QPolynomial des_kernel(int n) {
  if (n == 1) return QPolynomial(1);
  QPolynomial total(1);  // F_21(1; q)
  for (int m = 2; m <= n; ++m) total += des_kernel_bivariate(m).at_v_equals_one();
  return total;
}

std::string_view series_name(const Statistic& st) {
  if (st.flattened) {
    switch (st.kind) {
      case StatKind::Des: return "des";
      case StatKind::Sub321: return "321";
      case StatKind::Peak: return "peak";
      case StatKind::Valley: return "valley";
      default: break;
    }
  }
  throw Error(ErrorCode::MethodUnsupported, "no generating-function identity for " + st.name());
}

Statistic series_statistic(std::string_view name) {
  if (name == "des") return Statistic::des();
  if (name == "321") return Statistic::sub321();
  if (name == "peak") return Statistic::peak();
  if (name == "valley") return Statistic::valley();
  throw Error(ErrorCode::UnknownName, "unknown identity: " + std::string(name));
}

QPolynomial ddes_marginal_poly(int n, int d) {
  const auto a = marginal_by_recurrence(n, d);
  return QPolynomial(a[static_cast<std::size_t>(n)]);
}

}  // namespace

QVPolynomial des_kernel_bivariate(int n) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  // F(1; v) = 0, F(2; v) = 1, F(1) = 1, F(2) = 2.
  std::vector<QVPolynomial> F(static_cast<std::size_t>(std::max(n, 2)) + 1);
  std::vector<QPolynomial> total(F.size());
  F[1] = QVPolynomial();
  F[2] = QVPolynomial(QPolynomial(1));
  total[1] = QPolynomial(1);
  total[2] = QPolynomial(2);
  const QPolynomial qm1(std::vector<BigInt>{-1, 1});
  for (int m = 3; m <= n; ++m) {
    const auto mi = static_cast<std::size_t>(m);
    QVPolynomial next = QVPolynomial::geometric_partial_sum(m - 1) * QVPolynomial(total[mi - 1]);
    next += QVPolynomial::geometric_partial_sum(m - 2).times_v(1) * QVPolynomial(qm1 * total[mi - 2]);
    // (v F(m-1; v) - F(m-1; 1) v^{m-1}) / (1 - v), term by term in v.
    const QVPolynomial& prev = F[mi - 1];
    QVPolynomial quotient;
    for (int t = 0; t <= prev.v_degree(); ++t) {
      const QPolynomial c = prev.v_coeff(t);
      if (c.is_zero()) continue;
      quotient += QVPolynomial::geometric_partial_sum(m - 2 - t).times_v(t + 1) * QVPolynomial(c);
    }
    next += quotient * QVPolynomial(qm1);
    total[mi] = total[mi - 1] + next.at_v_equals_one();
    F[mi] = std::move(next);
  }
  return F[static_cast<std::size_t>(n)];
}

std::vector<MethodTag> supported_methods(const Statistic& st) {
  using M = MethodTag;
  if (!st.flattened) return {M::Brute};
  switch (st.kind) {
    case StatKind::Des: return {M::Closed, M::Recurrence, M::Kernel, M::Series, M::Brute};
    case StatKind::Asc: return {M::Closed, M::Brute};
    case StatKind::Sub123: return {M::Recurrence, M::Brute};
    case StatKind::Sub321: return {M::Recurrence, M::Series, M::Brute};
    case StatKind::Peak:
    case StatKind::Valley: return {M::Closed, M::Recurrence, M::Series, M::Brute};
    case StatKind::BigDes:
    case StatKind::DDes: return {M::Recurrence, M::Brute};
  }
  return {M::Brute};
}

bool method_supported(const Statistic& st, MethodTag m) {
  for (MethodTag s : supported_methods(st))
    if (s == m) return true;
  return false;
}

MethodTag default_method(const Statistic& st) {
  for (MethodTag m : {MethodTag::Closed, MethodTag::Recurrence, MethodTag::Brute})
    if (method_supported(st, m)) return m;
  return MethodTag::Brute;
}

QPolynomial dist(const Statistic& st, int n, MethodTag method) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  if (!method_supported(st, method))
    throw Error(ErrorCode::MethodUnsupported,
                std::string("method ") + to_string(method) + " is not available for " + st.name());
  switch (method) {
    case MethodTag::Brute:
      return brute_distribution(st, n);
    case MethodTag::Kernel:
      return des_kernel(n);
    case MethodTag::Series:
      return identity_series(series_name(st), n - 1).egf_coefficient(n - 1);
    case MethodTag::Closed:
      switch (st.kind) {
        case StatKind::Des: return des_closed(n);
        case StatKind::Asc: return des_closed(n).reversed(n - 1);
        case StatKind::Peak: return peak_closed(n);
        case StatKind::Valley: return valley_closed(n);
        default: break;
      }
      break;
    case MethodTag::Recurrence:
      if (st.kind == StatKind::DDes || st.kind == StatKind::BigDes) return ddes_marginal_poly(n, st.d);
      return recurrence_sequence(st, n)[static_cast<std::size_t>(n)];
  }
  throw Error(ErrorCode::MethodUnsupported, "unsupported method");
}

QPolynomial dist(const Statistic& st, int n) { return dist(st, n, default_method(st)); }

QPolynomial prefix_dist(const Statistic& st, int n, int k) {
  if (!st.flattened || !(st.kind == StatKind::Des || st.kind == StatKind::Sub123 || st.kind == StatKind::Sub321 ||
                         st.kind == StatKind::Peak || st.kind == StatKind::Valley))
    throw Error(ErrorCode::MethodUnsupported, "no prefix formula for " + st.name());
  if (n < 2 || k < 2 || k > n)
    throw Error(ErrorCode::Range,
                "prefix 1," + std::to_string(k) + " needs 2 <= k <= n (n = " + std::to_string(n) + ")");
  const auto g = recurrence_sequence(st, n);
  auto at = [&](int m) -> const QPolynomial& { return g[static_cast<std::size_t>(m)]; };
  if (k == 2) {
    const bool rises = st.kind == StatKind::Sub123 && n >= 3;
    return at(n - 1).shifted(rises ? 1 : 0).scaled(2);
  }
  const auto b = b_table(st, n);
  QPolynomial acc;
  if (st.kind == StatKind::Sub123 && k == n) {
    // g_n(1n) = -sum_{i>=0} alpha_{n,i+1} b_i g_{n-i}, with b_0 = -1.
    acc -= (sub123_b_zero() * at(n)).scaled(alpha(n, 1));
    for (int i = 1; i <= n - 1; ++i) acc -= (b[static_cast<std::size_t>(i)] * at(n - i)).scaled(alpha(n, i + 1));
    return acc;
  }
  const bool use_beta = st.kind == StatKind::Peak || st.kind == StatKind::Valley;
  for (int i = 1; i <= k - 1; ++i)
    acc += (b[static_cast<std::size_t>(i)] * at(n - i)).scaled(use_beta ? beta(k, i) : alpha(k, i));
  if (st.kind == StatKind::Valley && n % 2 == 1 && k == n) acc += theta_power((n - 1) / 2).scaled(2);
  return acc;
}

Rational average(const Statistic& st, int n) {
  auto need = [&](int lo) {
    if (n < lo)
      throw Error(ErrorCode::Range, "average formula for " + st.name() + " needs n >= " + std::to_string(lo));
  };
  if (!st.flattened) throw Error(ErrorCode::MethodUnsupported, "no average formula for plain " + st.name());
  const Rational N(n);
  switch (st.kind) {
    case StatKind::Des: need(1); return (N - 1) * (N - 2) / (2 * N);
    case StatKind::Asc: need(1); return (N - 1) * (N + 2) / (2 * N);
    case StatKind::Sub123: need(3); return (N * N + 3 * N - 6) / (6 * N);
    case StatKind::Sub321: need(2); return (N - 2) * (N - 3) / (6 * N);
    case StatKind::Peak: need(2); return (N - 2) / 3;
    case StatKind::Valley: need(3); return (N - 3) / 3;
    default: throw Error(ErrorCode::MethodUnsupported, "no average formula for " + st.name());
  }
}

Rational average_from_distribution(const QPolynomial& g, int n) {
  return Rational(g.derivative().evaluate(BigInt(1))) / Rational(factorial(n));
}

QSeries identity_series(std::string_view name, int order) {
  if (name == "des") return build_series("A", order).square();
  if (name == "321" || name == "peak") {
    const QSeries one = QSeries::constant(QPolynomial(1), order);
    return (one - build_series(name == "321" ? "Bd" : "Bp", order)).square().reciprocal();
  }
  if (name == "valley") {
    // Numerator and denominator of G^v, each divided by theta so both live in Q[q][[x]].
    QSeries numerator = build_series("theta_cosh_2s", order) - build_series("s_sinh_2s", order);
    numerator += QSeries::x(order).times(kTheta.scaled(2));
    numerator += QSeries::constant(kTheta, order);
    const QSeries base = build_series("cosh_s", order) - build_series("sinh_s_over_s", order);
    return numerator.divided_exact(kTheta) * base.square().scaled(2).reciprocal();
  }
  throw Error(ErrorCode::UnknownName, "unknown identity: " + std::string(name));
}

bool series_identity_check(std::string_view name, int order, int max_order) {
  if (order < 0 || order > max_order)
    throw Error(ErrorCode::Range, "series order must lie in [0, " + std::to_string(max_order) + "]");
  const Statistic st = series_statistic(name);
  const QSeries g = identity_series(name, order);
  const auto expected = recurrence_sequence(st, order + 1);
  for (int m = 0; m <= order; ++m) {
    try {
      if (g.egf_coefficient(m) != expected[static_cast<std::size_t>(m + 1)]) return false;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotDivisible) return false;
      throw;
    }
  }
  return true;
}

bool verify_frozen_constants(int n_max) {
  const Statistic r = Statistic::sub123();
  const auto& seeds = sub123_seeds();
  for (int n = 1; n <= 3; ++n)
    if (brute_distribution(r, n) != seeds[static_cast<std::size_t>(n)]) return false;
  for (const Statistic& st : {Statistic::des(), Statistic::sub123(), Statistic::sub321(), Statistic::peak(),
                              Statistic::valley()}) {
    for (int n = 2; n <= n_max; ++n) {
      const std::vector<int> prefix{1, 2};
      const bool rises = st.kind == StatKind::Sub123 && n >= 3;
      const QPolynomial expected = brute_distribution(st, n - 1).shifted(rises ? 1 : 0).scaled(2);
      if (brute_prefix_distribution(st, n, prefix) != expected) return false;
    }
  }
  return true;
}

}  // namespace flatstat
