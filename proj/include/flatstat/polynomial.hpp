#pragma once

#include <algorithm>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flatstat/error.hpp"

namespace flatstat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
/// C(a, b), zero when b < 0, b > a, or a < 0.
BigInt binomial(int a, int b);
std::string rational_to_string(const Rational& r);  // "5147/300", "0", "-2"
double to_double(const BigInt& v);
double to_double(const Rational& v);

namespace detail {
template <class T>
T coefficient_as(const BigInt& c) {
  if constexpr (std::is_same_v<T, BigInt>)
    return c;
  else if constexpr (std::is_same_v<T, Rational>)
    return Rational(c);
  else if constexpr (std::is_same_v<T, std::complex<double>>)
    return std::complex<double>(to_double(c), 0.0);
  else
    return static_cast<T>(to_double(c));
}
}  // namespace detail

struct QVar { static constexpr const char* name = "q"; };
struct SVar { static constexpr const char* name = "s"; };       // s*s = theta = 1 - q
struct ThetaVar { static constexpr const char* name = "theta"; };

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficients are stored lowest power first and never carry trailing
/// zeros, so the zero polynomial is the empty vector and `==` is identity of
/// polynomials. The tag keeps polynomials in q, s and theta from mixing.
template <class Var>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}  // NOLINT: integer literals read naturally
  Polynomial(BigInt constant) {                                // NOLINT
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(BigInt c, int power) {
    if (c == 0) return {};
    std::vector<BigInt> v(static_cast<std::size_t>(power) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(1, 1); }

  static const char* variable_name() { return Var::name; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  BigInt coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial scaled(const BigInt& k) const {
    if (k == 0) return {};
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c *= k;
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int e) const {
    Polynomial result(1), base = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
    return Polynomial(std::move(out));
  }

  /// Multiply by var^k, k >= 0.
  Polynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  /// Exact division by the variable; the constant term must vanish.
  Polynomial divided_by_variable() const {
    if (is_zero()) return {};
    if (coeffs_.front() != 0)
      throw Error(ErrorCode::NotDivisible,
                  std::string("polynomial has nonzero constant term; not divisible by ") + Var::name);
    return Polynomial(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
  }

  /// var^deg * p(1/var); requires deg >= degree().
  Polynomial reversed(int deg) const {
    if (deg < degree()) throw Error(ErrorCode::Range, "reversal degree below polynomial degree");
    std::vector<BigInt> out(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(deg - i)] = coeffs_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(out));
  }

  /// Exact quotient by `d`; throws NotDivisible on a nonzero remainder or a
  /// non-integral quotient coefficient.
  Polynomial divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < d.degree()) throw Error(ErrorCode::NotDivisible, "polynomial not divisible");
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const BigInt& lead = d.coeffs_.back();
    for (int i = degree() - d.degree(); i >= 0; --i) {
      const std::size_t top = static_cast<std::size_t>(i + d.degree());
      if (rem[top] == 0) continue;
      if (rem[top] % lead != 0) throw Error(ErrorCode::NotDivisible, "polynomial not divisible");
      BigInt f = rem[top] / lead;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * d.coeffs_[j];
      quot[static_cast<std::size_t>(i)] = std::move(f);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
      throw Error(ErrorCode::NotDivisible, "polynomial not divisible");
    return Polynomial(std::move(quot));
  }

  /// Horner evaluation; T is BigInt, Rational, double or std::complex<double>.
  template <class T>
  T evaluate(const T& x) const {
    T acc = T(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + detail::coefficient_as<T>(*it);
    return acc;
  }

  /// gcd of the coefficients (0 for the zero polynomial), always >= 0.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  /// Divide every coefficient by k, which must divide each exactly.
  Polynomial divided_by(const BigInt& k) const {
    std::vector<BigInt> out = coeffs_;
    for (auto& c : out) {
      if (c % k != 0) throw Error(ErrorCode::NotDivisible, "coefficient not divisible by scalar");
      c /= k;
    }
    return Polynomial(std::move(out));
  }

  /// Human form, ascending powers: "4 + 2*q", "1 - q^2", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (i == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += Var::name;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

using QPolynomial = Polynomial<QVar>;
using SPolynomial = Polynomial<SVar>;
using ThetaPolynomial = Polynomial<ThetaVar>;

/// theta^k = (1 - q)^k as a polynomial in q.
QPolynomial theta_power(int k);

/// Rewrite a polynomial in theta as one in q via theta = 1 - q.
QPolynomial substitute_theta(const ThetaPolynomial& p);

/// a / q for a with vanishing constant term; NotDivisible otherwise.
QPolynomial qpoly_div_q(const QPolynomial& a);

/// Maps an s-polynomial with only even powers to q via s^2 = 1 - q.
/// Throws Error(OddPowerResidue) naming the first odd power with a nonzero
/// coefficient.
QPolynomial spoly_reduce_even(const SPolynomial& a);

/// Polynomial in q and v, stored as a dense vector of q-polynomials indexed
/// by the power of v. No trailing zero v-coefficients.
class QVPolynomial {
 public:
  QVPolynomial() = default;
  QVPolynomial(QPolynomial constant);  // NOLINT: a q-polynomial is a v-constant
  explicit QVPolynomial(std::vector<QPolynomial> by_v_power);

  /// Sum_{t < m} v^t.
  static QVPolynomial geometric_partial_sum(int m);
  static QVPolynomial v_power(int k);

  int v_degree() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  bool is_zero() const noexcept { return rows_.empty(); }
  QPolynomial v_coeff(int power) const;
  BigInt coeff(int q_power, int v_power) const { return v_coeff(v_power).coeff(q_power); }

  QVPolynomial& operator+=(const QVPolynomial& o);
  QVPolynomial& operator-=(const QVPolynomial& o);
  friend QVPolynomial operator+(QVPolynomial a, const QVPolynomial& b) { return a += b; }
  friend QVPolynomial operator-(QVPolynomial a, const QVPolynomial& b) { return a -= b; }
  friend QVPolynomial operator*(const QVPolynomial& a, const QVPolynomial& b);
  friend bool operator==(const QVPolynomial&, const QVPolynomial&) = default;

  QVPolynomial times_v(int k = 1) const;
  QPolynomial at_v_equals_one() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<QPolynomial> rows_;
};

}  // namespace flatstat
