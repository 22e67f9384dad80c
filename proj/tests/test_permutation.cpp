#include <doctest.h>

#include <set>

#include "flatstat/error.hpp"
#include "flatstat/permutation.hpp"

using namespace flatstat;

namespace {

Permutation word(std::vector<int> letters) { return Permutation(std::move(letters)); }

}  // namespace

TEST_CASE("standard cycle form") {
  CHECK(standard_cycle_form(word({7, 5, 1, 6, 2, 4, 3, 8})).to_string() == "(1 7 3)(2 5)(4 6)(8)");
  CHECK(standard_cycle_form(word({7, 1, 5, 6, 4, 3, 2, 8})).to_string() == "(1 7 2)(3 5 4 6)(8)");
  CHECK(standard_cycle_form(Permutation::identity(3)).to_string() == "(1)(2)(3)");
}

TEST_CASE("flatten") {
  CHECK(flatten(CycleForm({{1, 7, 2}, {3, 5, 4, 6}, {8}})).to_string() == "1,7,2,3,5,4,6,8");
  CHECK(flatten(CycleForm({{1}, {2}, {3}})).to_string() == "1,2,3");
  const Permutation w = flatten(CycleForm({{1, 7, 3}, {2, 5}, {4, 6}, {8}}));
  CHECK(w.to_string() == "1,7,3,2,5,4,6,8");
  CHECK(count_in_word(w.letters(), Statistic::des()) == 3);

  std::vector<int> out(8);
  const std::vector<int> sigma{7, 1, 5, 6, 4, 3, 2, 8};
  flatten_into(sigma, out);
  CHECK(out == std::vector<int>{1, 7, 2, 3, 5, 4, 6, 8});
}

TEST_CASE("count_stat") {
  const Permutation sigma = CycleForm({{1, 9, 8, 5}, {2, 4}, {3, 6, 7}}).to_permutation();
  CHECK(count_stat(sigma, Statistic::d_des(3)) == 2);
  CHECK(count_stat(sigma, Statistic::des()) == 4);
  CHECK(count_stat(word({1, 2, 4, 7, 6, 5, 3}), Statistic::sub321(false)) == 2);
  CHECK(count_stat(word({1, 2, 3}), Statistic::valley(false)) == 0);
  CHECK(count_stat(word({1, 3, 2}), Statistic::peak(false)) == 1);
  CHECK(count_stat(word({2, 1}), Statistic::sub123(false)) == 0);
  CHECK(count_stat(word({3, 1, 2}), Statistic::big_des(false)) == 1);
  CHECK(count_stat(word({2, 1, 3}), Statistic::big_des(false)) == 0);
}

TEST_CASE("statistic names") {
  CHECK(parse_statistic("ddes", 3) == Statistic::d_des(3));
  CHECK(parse_statistic("123") == Statistic::sub123());
  CHECK(Statistic::d_des(3).name() == "ddes3");
  CHECK_THROWS_AS(parse_statistic("nope"), Error);
}

TEST_CASE("iterate_sym") {
  int count = 0;
  iterate_sym(1, [&](std::span<const int> w) {
    ++count;
    CHECK(w.size() == 1);
  });
  CHECK(count == 1);
  CHECK(all_permutations(3).size() == 6);

  std::set<std::vector<int>> seen;
  std::vector<int> previous;
  bool ordered = true;
  iterate_sym(8, [&](std::span<const int> w) {
    std::vector<int> v(w.begin(), w.end());
    ordered = ordered && previous < v;
    previous = v;
    seen.insert(std::move(v));
  });
  CHECK(seen.size() == 40320);
  CHECK(ordered);

  try {
    iterate_sym(11, [](std::span<const int>) {});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("flatten starts with 1 and cycle forms round trip") {
  for (int n = 1; n <= 8; ++n)
    for (const Permutation& p : all_permutations(n)) {
      const CycleForm c = standard_cycle_form(p);
      REQUIRE(c.is_standard());
      REQUIRE(flatten(c)(1) == 1);
      REQUIRE(c.to_permutation() == p);
    }
}

TEST_CASE("counting identities on words") {
  for (int n = 1; n <= 7; ++n)
    for (const Permutation& p : all_permutations(n)) {
      const int des = count_stat(p, Statistic::des(false));
      REQUIRE(des + count_stat(p, Statistic::asc(false)) == n - 1);
      REQUIRE(count_stat(p, Statistic::d_des(1, false)) == des);
      REQUIRE(count_stat(p, Statistic::big_des(false)) == count_stat(p, Statistic::d_des(2, false)));
    }
}

TEST_CASE("parse_permutation") {
  const auto w = parse_permutation("7,5,1,6,2,4,3,8");
  REQUIRE(std::holds_alternative<Permutation>(w));
  CHECK(std::get<Permutation>(w) == word({7, 5, 1, 6, 2, 4, 3, 8}));

  const auto c = parse_permutation("(1 7 3)(2 5)(4 6)(8)");
  REQUIRE(std::holds_alternative<CycleForm>(c));
  CHECK(std::get<CycleForm>(c).to_string() == "(1 7 3)(2 5)(4 6)(8)");

  try {
    parse_permutation("(2 5)(1 7 3)");
    FAIL("expected NonStandardOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonStandardOrder);
  }
  const auto lenient = parse_permutation("(6 4)(8)(5 2)(7 3 1)", CycleParse::Lenient);
  CHECK(std::get<CycleForm>(lenient).to_string() == "(1 7 3)(2 5)(4 6)(8)");

  try {
    parse_permutation("1,1,2");
    FAIL("expected NotAPermutation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
  }
  CHECK_THROWS_AS(parse_permutation("1,,2"), Error);
  CHECK_THROWS_AS(parse_permutation("(1 2"), Error);
}
