#include "flatstat/polynomial.hpp"

#include <sstream>

namespace flatstat {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }
double to_double(const Rational& v) { return v.convert_to<double>(); }

QPolynomial theta_power(int k) { return QPolynomial(std::vector<BigInt>{1, -1}).pow(k); }

QPolynomial substitute_theta(const ThetaPolynomial& p) {
  const QPolynomial theta(std::vector<BigInt>{1, -1});
  QPolynomial acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * theta + QPolynomial(p.coeff(i));
  return acc;
}

QPolynomial qpoly_div_q(const QPolynomial& a) { return a.divided_by_variable(); }

QPolynomial spoly_reduce_even(const SPolynomial& a) {
  std::vector<BigInt> in_theta;
  for (int i = 0; i <= a.degree(); ++i) {
    if (i % 2 == 1) {
      if (a.coeff(i) != 0)
        throw Error(ErrorCode::OddPowerResidue,
                    "OddPowerResidue(" + std::to_string(i) + "): s-polynomial " + a.to_string() +
                        " has an odd power");
      continue;
    }
    in_theta.push_back(a.coeff(i));
  }
  return substitute_theta(ThetaPolynomial(std::move(in_theta)));
}

QVPolynomial::QVPolynomial(QPolynomial constant) {
  rows_.push_back(std::move(constant));
  trim();
}

QVPolynomial::QVPolynomial(std::vector<QPolynomial> by_v_power) : rows_(std::move(by_v_power)) { trim(); }

QVPolynomial QVPolynomial::geometric_partial_sum(int m) {
  return QVPolynomial(std::vector<QPolynomial>(static_cast<std::size_t>(std::max(m, 0)), QPolynomial(1)));
}

QVPolynomial QVPolynomial::v_power(int k) { return QVPolynomial(QPolynomial(1)).times_v(k); }

QPolynomial QVPolynomial::v_coeff(int power) const {
  if (power < 0 || power > v_degree()) return {};
  return rows_[static_cast<std::size_t>(power)];
}

QVPolynomial& QVPolynomial::operator+=(const QVPolynomial& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
  trim();
  return *this;
}

QVPolynomial& QVPolynomial::operator-=(const QVPolynomial& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
  trim();
  return *this;
}

QVPolynomial operator*(const QVPolynomial& a, const QVPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPolynomial> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i)
    for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
  return QVPolynomial(std::move(out));
}

QVPolynomial QVPolynomial::times_v(int k) const {
  if (is_zero()) return {};
  std::vector<QPolynomial> out(static_cast<std::size_t>(k));
  out.insert(out.end(), rows_.begin(), rows_.end());
  return QVPolynomial(std::move(out));
}

QPolynomial QVPolynomial::at_v_equals_one() const {
  QPolynomial sum;
  for (const auto& r : rows_) sum += r;
  return sum;
}

std::string QVPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= v_degree(); ++j) {
    const auto& r = rows_[static_cast<std::size_t>(j)];
    if (r.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << r.to_string() << ")";
    if (j > 0) os << "*v" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

void QVPolynomial::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

}  // namespace flatstat
