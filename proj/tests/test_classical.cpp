#include <doctest.h>

#include <cmath>
#include <random>

#include "flatstat/classical.hpp"
#include "flatstat/error.hpp"
#include "flatstat/oracle.hpp"

using namespace flatstat;

namespace {

QPolynomial qp(std::vector<int> c) { return QPolynomial(std::vector<BigInt>(c.begin(), c.end())); }
SPolynomial sp(std::vector<int> c) { return SPolynomial(std::vector<BigInt>(c.begin(), c.end())); }

}  // namespace

TEST_CASE("Eulerian polynomials") {
  CHECK(eulerian_poly(0) == qp({1}));
  CHECK(eulerian_poly(1) == qp({1}));
  CHECK(eulerian_poly(2) == qp({1, 1}));
  CHECK(eulerian_poly(3) == qp({1, 4, 1}));
  CHECK(eulerian_poly(4) == qp({1, 11, 11, 1}));
  for (int n = 1; n <= 7; ++n) CHECK(eulerian_poly(n) == brute_distribution(Statistic::asc(false), n));

  const EulerianTable table(15);
  for (int n = 1; n <= 15; ++n) {
    BigInt total = 0;
    for (int k = 0; k < n; ++k) {
      total += table.number(n, k);
      REQUIRE(table.number(n, k) == table.number(n, n - 1 - k));
    }
    REQUIRE(total == factorial(n));
  }
}

TEST_CASE("Chebyshev V") {
  CHECK(chebyshev_v(-2) == sp({-1}));
  CHECK(chebyshev_v(-1).is_zero());
  CHECK(chebyshev_v(0) == sp({1}));
  CHECK(chebyshev_v(2) == sp({-1, 0, 1}));
  CHECK(chebyshev_v(4) == sp({1, 0, -3, 0, 1}));
  for (int n = 0; n <= 40; ++n) {
    const SPolynomial v = chebyshev_v(n);
    REQUIRE(v.degree() == n);
    for (int i = 0; i <= n; ++i)
      if ((n - i) % 2 != 0) REQUIRE(v.coeff(i) == 0);
  }
}

TEST_CASE("Chebyshev closed form") {
  CHECK(chebyshev_closed_eval(2, 0.3) == doctest::Approx(-0.64).epsilon(1e-12));
  CHECK(std::abs(chebyshev_closed_eval(2, 0.3) - chebyshev_v(2).evaluate(0.6)) < 1e-9);
  CHECK(chebyshev_closed_eval(0, 0.77) == doctest::Approx(1.0));
  CHECK(std::abs(chebyshev_closed_eval(-1, 0.5)) < 1e-12);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(-0.999, 0.999);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = unit(rng);
    for (int n = 0; n <= 15; ++n) REQUIRE(std::abs(chebyshev_closed_eval(n, t) - chebyshev_v(n).evaluate(2 * t)) < 1e-9);
  }
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling(StirlingKind::FirstSignless, 3, 1) == 2);
  CHECK(stirling(StirlingKind::FirstSignless, 3, 2) == 3);
  CHECK(stirling(StirlingKind::FirstSignless, 3, 3) == 1);
  CHECK(stirling(StirlingKind::FirstSigned, 3, 1) == 2);
  CHECK(stirling(StirlingKind::FirstSigned, 3, 2) == -3);
  CHECK(stirling(StirlingKind::Second, 3, 2) == 3);
  CHECK(stirling(StirlingKind::Second, 5, 3) == 25);
  for (int n = 0; n <= 10; ++n) CHECK(stirling(StirlingKind::FirstSignless, n, n) == 1);
  for (int n = 0; n <= 12; ++n) {
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += stirling(StirlingKind::FirstSignless, n, k);
    REQUIRE(total == factorial(n));
  }
  for (int n = 1; n <= 7; ++n) {
    std::vector<BigInt> by_cycles(static_cast<std::size_t>(n) + 1);
    iterate_sym(n, [&](std::span<const int> w) { ++by_cycles[static_cast<std::size_t>(cycle_count(w))]; });
    for (int k = 0; k <= n; ++k)
      REQUIRE(by_cycles[static_cast<std::size_t>(k)] == stirling(StirlingKind::FirstSignless, n, k));
  }
}

TEST_CASE("t coefficients") {
  CHECK(t_coeff(1, 1) == 1);
  CHECK(t_coeff(3, 1) == Rational(-1, 3));
  CHECK(t_coeff(2, 2) == 1);
  CHECK(t_coeff(4, 2) == Rational(-2, 3));
  CHECK(t_coeff(5, 1) == Rational(-1, 45));
  CHECK(t_coeff(7, 3) == Rational(4, 15));
  CHECK(t_coeff(8, 4) == Rational(26, 45));
  CHECK(t_coeff(4, 1) == 0);
  for (int n = 1; n <= 20; ++n)
    for (int m = 1; m <= n; ++m) REQUIRE(t_coeff_closed(n, m) == t_coeff_series(n, m));
}

TEST_CASE("weak compositions") {
  std::vector<std::vector<int>> seen;
  weak_compositions(2, 2, [&](std::span<const int> c) { seen.emplace_back(c.begin(), c.end()); });
  CHECK(seen == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  seen.clear();
  weak_compositions(0, 3, [&](std::span<const int> c) { seen.emplace_back(c.begin(), c.end()); });
  CHECK(seen == std::vector<std::vector<int>>{{0, 0, 0}});
  int count = 0;
  weak_compositions(5, 3, [&](std::span<const int>) { ++count; });
  CHECK(count == 21);
}
