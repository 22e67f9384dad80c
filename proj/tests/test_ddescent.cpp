#include <doctest.h>

#include "flatstat/classical.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/distribution.hpp"
#include "flatstat/oracle.hpp"

using namespace flatstat;

TEST_CASE("triangle base rows and the first d-descent row") {
  for (int d = 1; d <= 4; ++d) {
    const DistTriangle t = triangle_by_recurrence(d + 2, d);
    for (int n = 1; n <= d + 1; ++n)
      for (int k = 1; k <= n; ++k) {
        REQUIRE(t.at(n, 0, k) == stirling(StirlingKind::FirstSignless, n, k));
        REQUIRE(t.at(n, 1, k) == 0);
      }
    for (int k = 1; k <= d + 2; ++k) {
      REQUIRE(t.at(d + 2, 1, k) == stirling(StirlingKind::FirstSignless, d + 1, k));
      REQUIRE(t.at(d + 2, 0, k) ==
              stirling(StirlingKind::FirstSignless, d + 2, k) - stirling(StirlingKind::FirstSignless, d + 1, k));
    }
  }
}

TEST_CASE("triangle matches enumeration") {
  CHECK(triangle_by_recurrence(9, 3).at(9, 2, 3) == 51260);
  for (int d = 1; d <= 4; ++d) {
    const DistTriangle t = triangle_by_recurrence(8, d);
    for (int n = 1; n <= 8; ++n) {
      const DistTriangle brute = brute_ddescent_table(n, d);
      for (const auto& c : brute.cells()) REQUIRE(t.at(c.n, c.m, c.k) == c.count);
      REQUIRE(t.row_total(n) == factorial(n));
    }
  }
}

TEST_CASE("marginals") {
  const auto one = marginal_by_recurrence(9, 1);
  CHECK(one[3][0] == 4);
  CHECK(one[3][1] == 2);
  for (int n = 1; n <= 9; ++n) {
    const QPolynomial des = dist(Statistic::des(), n);
    for (int m = 0; m < n; ++m) REQUIRE(one[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] == des.coeff(m));
  }
  CHECK(explicit_marginal(4, 1, 1) == dist(Statistic::des(), 4).coeff(1));
  CHECK(explicit_marginal(5, 1, 2) == brute_ddescent_table(5, 2).marginal(5, 1));
  for (int d = 1; d <= 4; ++d) {
    const auto a = marginal_by_recurrence(12, d);
    const DistTriangle t = triangle_by_recurrence(12, d);
    for (int n = 1; n <= 12; ++n) {
      BigInt total = 0;
      for (int m = 0; m < n; ++m) {
        const BigInt& v = a[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
        total += v;
        REQUIRE(v == t.marginal(n, m));
        REQUIRE(v == explicit_marginal(n, m, d));
        REQUIRE((v == 0) == (m > 0 && n < m + d + 1));
      }
      REQUIRE(total == factorial(n));
      if (n >= d + 1) {
        BigInt power = 1;
        for (int i = 0; i < n - 1 - d; ++i) power *= d + 1;
        REQUIRE(explicit_marginal(n, 0, d) == factorial(d + 1) * power);
      }
    }
  }
}

TEST_CASE("factorial identity") {
  CHECK(factorial_identity_check(5, 1));
  CHECK(factorial_identity_check(9, 3));
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 12; ++n) REQUIRE(factorial_identity_check(n, d));
}

TEST_CASE("equidistribution") {
  CHECK(equidistribution_check(1, 1));
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 8; ++n) REQUIRE(equidistribution_check(n, d));
}

TEST_CASE("csv export") {
  const std::string csv = triangle_by_recurrence(3, 1).to_csv();
  CHECK(csv ==
        "n,m,k,count\n1,0,1,1\n2,0,1,1\n2,0,2,1\n3,0,1,1\n3,0,2,2\n3,0,3,1\n3,1,1,1\n3,1,2,1\n");
  CHECK(triangle_by_recurrence(9, 3).to_csv().find("9,2,3,51260\n") != std::string::npos);
}
