#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "flatstat/polynomial.hpp"

namespace flatstat {

/// A rational multiple of a q-polynomial, numerator/denominator in lowest
/// terms (gcd of numerator content and denominator is 1, denominator > 0).
class SeriesCoeff {
 public:
  SeriesCoeff() = default;
  SeriesCoeff(QPolynomial numerator, BigInt denominator = 1);  // NOLINT

  const QPolynomial& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  SeriesCoeff& operator+=(const SeriesCoeff& o);
  SeriesCoeff& operator-=(const SeriesCoeff& o);
  friend SeriesCoeff operator+(SeriesCoeff a, const SeriesCoeff& b) { return a += b; }
  friend SeriesCoeff operator-(SeriesCoeff a, const SeriesCoeff& b) { return a -= b; }
  friend SeriesCoeff operator*(const SeriesCoeff& a, const SeriesCoeff& b);
  friend bool operator==(const SeriesCoeff&, const SeriesCoeff&) = default;

  SeriesCoeff scaled(const Rational& r) const;
  double evaluate(double q) const;
  std::string to_string() const;

 private:
  void normalize();
  QPolynomial num_;
  BigInt den_ = 1;
};

/// Power series in x truncated after x^order, coefficients in Q[q].
/// Binary operations on series of different orders truncate to the smaller.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  QSeries(int order, std::vector<SeriesCoeff> terms);

  static QSeries constant(const QPolynomial& c, int order);
  /// x (the series variable itself).
  static QSeries x(int order);
  /// Exponential generating function: sum_m a[m] x^m / m!.
  static QSeries from_egf(std::span<const QPolynomial> a, int order);

  int order() const noexcept { return static_cast<int>(terms_.size()) - 1; }
  const SeriesCoeff& coeff(int m) const { return terms_.at(static_cast<std::size_t>(m)); }
  void set_coeff(int m, SeriesCoeff c) { terms_.at(static_cast<std::size_t>(m)) = std::move(c); }

  /// m! times the x^m coefficient; throws NotDivisible if not a polynomial
  /// with integer coefficients.
  QPolynomial egf_coefficient(int m) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  QSeries scaled(const Rational& r) const;
  QSeries times(const QPolynomial& p) const;
  /// Divide every coefficient by p exactly (NotDivisible otherwise).
  QSeries divided_exact(const QPolynomial& p) const;
  QSeries square() const { return *this * *this; }
  QSeries pow(int e) const;
  /// Requires the constant coefficient to be a nonzero rational constant.
  QSeries reciprocal() const;
  /// d/dx; the result has order one less (minimum 0).
  QSeries derivative() const;
  /// Integral from 0; the result has order one more.
  QSeries integral() const;
  QSeries truncated(int order) const;

  double evaluate(double x, double q) const;

 private:
  std::vector<SeriesCoeff> terms_;
};

/// Named exact series, all with coefficients in Q[q]:
///   exp_qm1       exp((q-1)x)
///   A             Eulerian egf (1-q)/(exp((q-1)x) - q)
///   E             q(e^{qx}-e^x)/(q e^x - e^{qx}) built from Eulerian numbers
///   cosh_s        cosh(s x)
///   sinh_s_over_s sinh(s x)/s
///   theta_cosh_2s theta cosh(2 s x)
///   s_sinh_2s     s sinh(2 s x)
///   Br Bd Bp Bv   sum_n b_n x^n/n! for the four length-3 statistics
/// Throws Error(UnknownName) for anything else.
QSeries build_series(std::string_view name, int order);

}  // namespace flatstat
