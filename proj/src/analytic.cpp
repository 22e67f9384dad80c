#include "flatstat/analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "flatstat/classical.hpp"
#include "flatstat/distribution.hpp"

namespace flatstat {

namespace {

void require_unit_interval(double q) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::Range, "q must lie in (0, 1)");
}

double h_closed(double x, double q) {
  const double theta = 1.0 - q;
  const double st = std::sqrt(theta);
  const double s4 = std::sqrt(4.0 - theta);
  const double angle = st * s4 * x / 4.0;
  if (std::abs(std::cos(angle)) < 1e-8) throw Error(ErrorCode::PoleProximity, "tangent argument near pi/2");
  const double xi = std::tan(angle);
  const double d1 = st * xi + s4;
  const double d2 = st - s4 * xi;
  if (std::abs(d1) < 1e-8 || std::abs(d2) < 1e-8) throw Error(ErrorCode::PoleProximity, "H denominator near zero");
  const double e = std::exp(-theta * x);
  const double bracket = (1.0 - xi * xi) * s4 * (1.0 - (1.0 - theta) * e) + 2.0 * st * xi * (1.0 - (3.0 - theta) * e);
  const double lift = (1.0 + xi * xi) * (1.0 + xi * xi);
  return 2.0 * st * (4.0 - theta) * lift * bracket / (d1 * d1 * d1 * d2 * d2 * d2);
}

double b_trig(double x, double q, double sign) {
  const double theta = 1.0 - q;
  const double beta = std::sqrt(theta * (4.0 - theta));
  return 1.0 - 2.0 * std::exp(sign * theta * x / 2.0) / beta * std::cos(beta * x / 2.0 + std::asin((2.0 - theta) / 2.0));
}

double gr_quadrature(double x, double q) {
  if (x == 0.0) return 1.0;
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [q](double t) { return h_closed(t, q); }, 0.0, x, 15, 1e-12, &error);
  if (!std::isfinite(integral) || error > 1e-9 * std::max(1.0, std::abs(integral)))
    throw Error(ErrorCode::QuadratureFailure, "quadrature error estimate " + std::to_string(error));
  return 1.0 + integral;
}

double exact_at(const QPolynomial& p, double q) { return to_double(p.evaluate(Rational(q))); }

}  // namespace

double analytic_eval(std::string_view name, double x, double q) {
  require_unit_interval(q);
  if (name == "H") return h_closed(x, q);
  if (name == "Gr") return gr_quadrature(x, q);
  if (name == "Br") return b_trig(x, q, 1.0);
  if (name == "Bd") return b_trig(x, q, -1.0);
  throw Error(ErrorCode::UnknownName, "unknown analytic function: " + std::string(name));
}

double series_eval(std::string_view name, double x, double q, int order) {
  if (order < 0) throw Error(ErrorCode::Range, "order must be >= 0");
  std::vector<QPolynomial> coeffs(static_cast<std::size_t>(order) + 1);
  if (name == "H" || name == "Gr") {
    const int shift = name == "H" ? 2 : 1;
    for (int m = 0; m <= order; ++m)
      coeffs[static_cast<std::size_t>(m)] = dist(Statistic::sub123(), m + shift, MethodTag::Recurrence);
  } else if (name == "Br" || name == "Bd") {
    const Statistic st = name == "Br" ? Statistic::sub123() : Statistic::sub321();
    for (int m = 1; m <= order; ++m) coeffs[static_cast<std::size_t>(m)] = b_coeff(st, m);
  } else {
    throw Error(ErrorCode::UnknownName, "unknown analytic function: " + std::string(name));
  }
  // Horner in x with exact coefficient values divided by m!.
  double acc = 0.0;
  for (int m = order; m >= 0; --m)
    acc = acc * x + exact_at(coeffs[static_cast<std::size_t>(m)], q) / to_double(factorial(m));
  return acc;
}

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTailTarget = 1e-12;

// Sums prefactor * sum_{j >= first} term(j) where term(j+1)/term(j) decreases
// in j, so once that ratio r drops below 1 the tail after j is at most
// term(j+1) / (1 - r(j+1)).
template <class Term>
InfiniteSum ratio_certified_sum(long double prefactor, int first, Term term) {
  long double sum = 0.0L;
  for (int j = first; j <= kMaxTerms; ++j) {
    const long double t = term(j);
    sum += t;
    const long double next = term(j + 1);
    const long double after = term(j + 2);
    if (next == 0.0L) return {static_cast<double>(prefactor * sum), 0.0, j - first + 1};
    const long double ratio = after / next;
    if (ratio < 1.0L) {
      const long double tail = prefactor * next / (1.0L - ratio);
      if (tail < kTailTarget) return {static_cast<double>(prefactor * sum), static_cast<double>(tail), j - first + 1};
    }
  }
  throw Error(ErrorCode::NoConvergence, "tail bound not reached after 10^4 terms");
}

InfiniteSum des_sum(int n, long double q) {
  // (1-q)^{n+1} sum_{j>=2} (j-1) j^{n-1} q^{j-2}
  return ratio_certified_sum(std::pow(1.0L - q, n + 1), 2, [n, q](int j) {
    return (j - 1) * std::pow(static_cast<long double>(j), n - 1) * std::pow(q, j - 2);
  });
}

}  // namespace

InfiniteSum infinite_sum_eval(std::string_view name, int n, double q) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  if (name == "des") {
    require_unit_interval(q);
    return des_sum(n, q);
  }
  if (name == "asc") {
    if (!(q > 1.0)) throw Error(ErrorCode::Range, "the ascent sum converges only for q > 1");
    InfiniteSum s = des_sum(n, 1.0L / q);
    const double scale = std::pow(q, n - 1);
    s.value *= scale;
    s.tail_bound *= scale;
    return s;
  }
  if (name == "valley") {
    require_unit_interval(q);
    if (n < 2) throw Error(ErrorCode::Range, "the valley sum needs n >= 2");
    const long double s = std::sqrt(1.0L - q);
    const long double r = (1.0L - s) / (1.0L + s);
    const long double prefactor = n * std::pow(2.0L * s, n) / ((1.0L + s) * (1.0L + s));
    return ratio_certified_sum(prefactor, 1, [n, r](int j) {
      return std::pow(static_cast<long double>(j), n - 1) * std::pow(r, j - 1);
    });
  }
  throw Error(ErrorCode::UnknownName, "unknown infinite sum: " + std::string(name));
}

PeakDiagnostic peak_series_diagnostic(int n, double q, int max_j) {
  require_unit_interval(q);
  if (n < 1 || max_j < 0) throw Error(ErrorCode::Range, "peak diagnostic needs n >= 1 and J >= 0");
  PeakDiagnostic report;
  report.n = n;
  report.q = q;
  report.max_j = max_j;
  report.exact = exact_at(dist(Statistic::peak(), n, MethodTag::Closed), q);
  const double theta = 1.0 - q;
  const double nfact = to_double(factorial(n));
  double partial = 0.0;
  for (int j = 1; j <= max_j; ++j) {
    if ((n + j) % 2 != 0) continue;
    const double sign = ((n + j + 2) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double term = nfact * sign * std::pow(theta, (n + j) / 2) * to_double(t_coeff(n + 2 * j, j));
    partial += term;
    report.terms.push_back({j, term, partial});
  }
  return report;
}

std::string PeakDiagnostic::to_string() const {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "peak series diagnostic n=" << n << " q=" << q << " J=" << max_j << '\n';
  os << "exact " << exact << '\n';
  for (const auto& t : terms)
    os << "j=" << t.j << " term=" << t.term << " partial=" << t.partial_sum << " diff=" << t.partial_sum - exact
       << '\n';
  return os.str();
}

}  // namespace flatstat
