#include "flatstat/series.hpp"

#include <algorithm>

#include "flatstat/classical.hpp"
#include "flatstat/distribution.hpp"

namespace flatstat {

SeriesCoeff::SeriesCoeff(QPolynomial numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw Error(ErrorCode::NotInvertible, "zero denominator");
  normalize();
}

void SeriesCoeff::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_.content(), den_);
  if (g > 1) {
    num_ = num_.divided_by(g);
    den_ /= g;
  }
}

SeriesCoeff& SeriesCoeff::operator+=(const SeriesCoeff& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_.scaled(o.den_) + o.num_.scaled(den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

SeriesCoeff& SeriesCoeff::operator-=(const SeriesCoeff& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_.scaled(o.den_) - o.num_.scaled(den_);
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

SeriesCoeff operator*(const SeriesCoeff& a, const SeriesCoeff& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return SeriesCoeff(a.num_ * b.num_, a.den_ * b.den_);
}

SeriesCoeff SeriesCoeff::scaled(const Rational& r) const {
  return SeriesCoeff(num_.scaled(boost::multiprecision::numerator(r)), den_ * boost::multiprecision::denominator(r));
}

double SeriesCoeff::evaluate(double q) const { return num_.evaluate(q) / to_double(den_); }

std::string SeriesCoeff::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.str();
}

QSeries::QSeries(int order) : terms_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

QSeries::QSeries(int order, std::vector<SeriesCoeff> terms) : terms_(std::move(terms)) {
  terms_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
}

QSeries QSeries::constant(const QPolynomial& c, int order) {
  QSeries s(order);
  s.terms_[0] = SeriesCoeff(c);
  return s;
}

QSeries QSeries::x(int order) {
  QSeries s(order);
  if (order >= 1) s.terms_[1] = SeriesCoeff(QPolynomial(1));
  return s;
}

QSeries QSeries::from_egf(std::span<const QPolynomial> a, int order) {
  QSeries s(order);
  for (int m = 0; m <= order && m < static_cast<int>(a.size()); ++m)
    s.terms_[static_cast<std::size_t>(m)] = SeriesCoeff(a[static_cast<std::size_t>(m)], factorial(m));
  return s;
}

QPolynomial QSeries::egf_coefficient(int m) const {
  const SeriesCoeff& c = coeff(m);
  const BigInt f = factorial(m);
  if (f % c.denominator() != 0)
    throw Error(ErrorCode::NotDivisible, "egf coefficient of x^" + std::to_string(m) + " is not integral");
  return c.numerator().scaled(f / c.denominator());
}

QSeries& QSeries::operator+=(const QSeries& o) {
  terms_.resize(std::min(terms_.size(), o.terms_.size()));
  for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] += o.terms_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  terms_.resize(std::min(terms_.size(), o.terms_.size()));
  for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] -= o.terms_[i];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order(), b.order());
  QSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a.terms_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b.terms_[static_cast<std::size_t>(j)].is_zero()) continue;
      out.terms_[static_cast<std::size_t>(i + j)] +=
          a.terms_[static_cast<std::size_t>(i)] * b.terms_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

QSeries QSeries::scaled(const Rational& r) const {
  QSeries out = *this;
  for (auto& t : out.terms_) t = t.scaled(r);
  return out;
}

QSeries QSeries::times(const QPolynomial& p) const {
  QSeries out = *this;
  for (auto& t : out.terms_) t = t * SeriesCoeff(p);
  return out;
}

QSeries QSeries::divided_exact(const QPolynomial& p) const {
  QSeries out = *this;
  for (auto& t : out.terms_) t = SeriesCoeff(t.numerator().divide_exact(p), t.denominator());
  return out;
}

QSeries QSeries::pow(int e) const {
  QSeries result = constant(QPolynomial(1), order());
  QSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

QSeries QSeries::reciprocal() const {
  const SeriesCoeff& c0 = terms_.front();
  if (c0.is_zero() || c0.numerator().degree() != 0)
    throw Error(ErrorCode::NotInvertible,
                "series constant coefficient " + c0.to_string() + " is not a nonzero rational constant");
  const Rational inv = Rational(c0.denominator()) / Rational(c0.numerator().coeff(0));
  QSeries out(order());
  out.terms_[0] = SeriesCoeff(QPolynomial(1)).scaled(inv);
  for (int m = 1; m <= order(); ++m) {
    SeriesCoeff acc;
    for (int k = 1; k <= m; ++k) {
      if (terms_[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += terms_[static_cast<std::size_t>(k)] * out.terms_[static_cast<std::size_t>(m - k)];
    }
    out.terms_[static_cast<std::size_t>(m)] = acc.scaled(-inv);
  }
  return out;
}

QSeries QSeries::derivative() const {
  QSeries out(std::max(order() - 1, 0));
  for (int m = 1; m <= order(); ++m)
    out.terms_[static_cast<std::size_t>(m - 1)] = terms_[static_cast<std::size_t>(m)].scaled(Rational(m));
  return out;
}

QSeries QSeries::integral() const {
  QSeries out(order() + 1);
  for (int m = 0; m <= order(); ++m)
    out.terms_[static_cast<std::size_t>(m + 1)] = terms_[static_cast<std::size_t>(m)].scaled(Rational(1, m + 1));
  return out;
}

QSeries QSeries::truncated(int order) const {
  QSeries out = *this;
  out.terms_.resize(static_cast<std::size_t>(std::clamp(order, 0, this->order())) + 1);
  return out;
}

double QSeries::evaluate(double x, double q) const {
  double acc = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * x + it->evaluate(q);
  return acc;
}

namespace {

// sum_k c^{2k} theta^k x^{2k} / (2k)!  (odd = false)   -> cosh(c s x)
// sum_k c^{2k+1} theta^k x^{2k+1} / (2k+1)!  (odd = true) -> sinh(c s x)/s
QSeries hyperbolic_in_s(int c, bool odd, int order) {
  QSeries out(order);
  for (int m = odd ? 1 : 0; m <= order; m += 2) {
    const int k = m / 2;
    out.set_coeff(m, SeriesCoeff(theta_power(k).scaled(boost::multiprecision::pow(BigInt(c), static_cast<unsigned>(m))),
                                 factorial(m)));
  }
  return out;
}

QSeries b_series(const Statistic& st, int order) {
  std::vector<QPolynomial> b(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) b[static_cast<std::size_t>(n)] = b_coeff(st, n);
  return QSeries::from_egf(b, order);
}

}  // namespace

QSeries build_series(std::string_view name, int order) {
  if (order < 0) throw Error(ErrorCode::Range, "series order must be >= 0");
  if (name == "exp_qm1") {
    const QPolynomial qm1(std::vector<BigInt>{-1, 1});
    std::vector<QPolynomial> a;
    for (int m = 0; m <= order; ++m) a.push_back(qm1.pow(m));
    return QSeries::from_egf(a, order);
  }
  if (name == "A") {
    // exp((q-1)x) - q = (1-q) * (1 - sum_{m>=1} (q-1)^{m-1} x^m/m!)
    const QPolynomial qm1(std::vector<BigInt>{-1, 1});
    std::vector<QPolynomial> a{QPolynomial(1)};
    for (int m = 1; m <= order; ++m) a.push_back(-qm1.pow(m - 1));
    return QSeries::from_egf(a, order).reciprocal();
  }
  if (name == "E") {
    std::vector<QPolynomial> e{QPolynomial()};
    for (int n = 1; n <= order; ++n) e.push_back(eulerian_poly(n).shifted(1));
    return QSeries::from_egf(e, order);
  }
  if (name == "cosh_s") return hyperbolic_in_s(1, false, order);
  if (name == "sinh_s_over_s") return hyperbolic_in_s(1, true, order);
  if (name == "theta_cosh_2s") return hyperbolic_in_s(2, false, order).times(theta_power(1));
  if (name == "s_sinh_2s") return hyperbolic_in_s(2, true, order).times(theta_power(1));
  if (name == "Br") return b_series(Statistic::sub123(), order);
  if (name == "Bd") return b_series(Statistic::sub321(), order);
  if (name == "Bp") return b_series(Statistic::peak(), order);
  if (name == "Bv") return b_series(Statistic::valley(), order);
  throw Error(ErrorCode::UnknownName, "unknown series builder: " + std::string(name));
}

}  // namespace flatstat
