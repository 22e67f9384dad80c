#include <doctest.h>

#include <algorithm>

#include "flatstat/classical.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/error.hpp"
#include "flatstat/oracle.hpp"

using namespace flatstat;

namespace {

QPolynomial qp(std::vector<int> c) { return QPolynomial(std::vector<BigInt>(c.begin(), c.end())); }

const std::vector<Statistic> kLengthThree{Statistic::sub123(), Statistic::sub321(), Statistic::peak(),
                                          Statistic::valley()};

QPolynomial prefixed(const Statistic& st, int n, std::vector<int> prefix) {
  return brute_prefix_distribution(st, n, prefix);
}

}  // namespace

TEST_CASE("brute distributions") {
  CHECK(brute_distribution(Statistic::des(), 3) == qp({4, 2}));
  CHECK(brute_distribution(Statistic::sub123(), 3) == qp({2, 4}));
  CHECK(brute_distribution(Statistic::valley(), 3) == qp({6}));
  CHECK(brute_distribution(Statistic::des(), 6) == qp({32, 262, 342, 82, 2}));
  CHECK(brute_distribution(Statistic::sub321(), 6) == qp({510, 182, 26, 2}));
  CHECK(brute_distribution(Statistic::peak(), 6) == qp({32, 416, 272}));
  CHECK(brute_distribution(Statistic::valley(), 6) == qp({96, 528, 96}));
  CHECK(brute_distribution(Statistic::sub123(), 6) == qp({170, 234, 254, 30, 32}));
  CHECK(brute_distribution(Statistic::big_des(), 6) == qp({162, 402, 150, 6}));
  CHECK_THROWS_AS(brute_distribution(Statistic::des(), 11), Error);
}

TEST_CASE("totals and degree bounds") {
  for (int n = 1; n <= 8; ++n) {
    for (const Statistic& st : {Statistic::des(), Statistic::asc(), Statistic::big_des(), Statistic::sub123(),
                                Statistic::sub321(), Statistic::peak(), Statistic::valley()})
      REQUIRE(brute_distribution(st, n).evaluate(BigInt(1)) == factorial(n));
    if (n >= 2) {
      REQUIRE(brute_distribution(Statistic::des(), n).degree() <= n - 2);
      REQUIRE(brute_distribution(Statistic::sub123(), n).degree() <= n - 2);
    }
  }
}

TEST_CASE("prefix distributions") {
  CHECK(prefixed(Statistic::peak(), 5, {2, 1}).is_zero());
  CHECK(prefixed(Statistic::des(), 4, {1, 2}) == qp({8, 4}));
  QPolynomial total;
  for (int k = 2; k <= 5; ++k) total += prefixed(Statistic::peak(), 5, {1, k});
  CHECK(total == brute_distribution(Statistic::peak(), 5));
  CHECK_THROWS_AS(prefixed(Statistic::peak(), 4, {1, 1}), Error);
  CHECK_THROWS_AS(prefixed(Statistic::peak(), 4, {1, 5}), Error);
  CHECK_THROWS_AS(prefixed(Statistic::peak(), 2, {1, 2, 3}), Error);
}

TEST_CASE("prefix sums over the next letter") {
  for (int n = 2; n <= 7; ++n)
    for (const Statistic& st : kLengthThree) {
      std::vector<int> prefix{1};
      const std::function<void()> walk = [&] {
        if (prefix.size() > 3 || static_cast<int>(prefix.size()) >= n) return;
        QPolynomial children;
        for (int h = 2; h <= n; ++h) {
          if (std::find(prefix.begin(), prefix.end(), h) != prefix.end()) continue;
          prefix.push_back(h);
          children += brute_prefix_distribution(st, n, prefix);
          walk();
          prefix.pop_back();
        }
        REQUIRE(brute_prefix_distribution(st, n, prefix) == children);
      };
      walk();
    }
}

TEST_CASE("reduction lemma") {
  for (int n = 4; n <= 6; ++n)
    for (const Statistic& st : kLengthThree)
      for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
          for (int k = 2; k <= n; ++k)
            if (i != j && j != k && i != k) REQUIRE(verify_lemma_reduction(st, n, i, j, k));
  CHECK(verify_lemma_reduction(Statistic::peak(), 4, 3, 2, 4));
}

TEST_CASE("exchange lemma") {
  CHECK(verify_lemma_exchange(Statistic::valley(), 6, 5, 2));
  CHECK(prefixed(Statistic::valley(), 6, {1, 5, 2}) == prefixed(Statistic::valley(), 6, {1, 3, 2}));
  for (int i = 3; i <= 5; ++i)
    for (int j = 2; j < i; ++j) CHECK(verify_lemma_exchange(Statistic::sub321(), 5, i, j));
  CHECK(verify_lemma_exchange(Statistic::peak(), 6, 4, 3));
}

TEST_CASE("d-descent table by enumeration") {
  const DistTriangle nine = brute_ddescent_table(9, 3);
  CHECK(nine.at(9, 2, 3) == 51260);
  CHECK(nine.row_total(9) == factorial(9));
  for (int n = 1; n <= 8; ++n) {
    const DistTriangle one = brute_ddescent_table(n, 1);
    const QPolynomial des = brute_distribution(Statistic::des(), n);
    for (int m = 0; m < n; ++m) REQUIRE(one.marginal(n, m) == des.coeff(m));
  }
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= d + 1; ++n) {
      const DistTriangle t = brute_ddescent_table(n, d);
      for (int k = 1; k <= n; ++k) REQUIRE(t.at(n, 0, k) == stirling(StirlingKind::FirstSignless, n, k));
      REQUIRE(t.marginal(n, 0) == factorial(n));
    }
}

TEST_CASE("oracle threads") { CHECK(oracle_threads() >= 1); }
