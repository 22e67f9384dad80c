#include <doctest.h>

#include <cmath>

#include "flatstat/analytic.hpp"
#include "flatstat/distribution.hpp"
#include "flatstat/error.hpp"

using namespace flatstat;

namespace {

double exact(const Statistic& st, int n, double q) { return to_double(dist(st, n).evaluate(Rational(q))); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("H at the origin") {
  for (double q : {0.25, 0.5, 0.75}) {
    CHECK(analytic_eval("H", 0.0, q) == doctest::Approx(2.0).epsilon(1e-14));
    const double h = 1e-5;
    const double slope = (analytic_eval("H", h, q) - analytic_eval("H", -h, q)) / (2 * h);
    CHECK(std::abs(slope - (6.0 - 4.0 * (1.0 - q))) < 1e-4);
  }
  CHECK(analytic_eval("Gr", 0.0, 0.5) == 1.0);
}

TEST_CASE("closed forms against exact series") {
  for (double x : {0.05, 0.1, 0.2})
    for (double q : {0.25, 0.5, 0.75})
      for (const char* name : {"H", "Gr", "Br", "Bd"}) {
        CAPTURE(name);
        CAPTURE(x);
        CAPTURE(q);
        const double series = series_eval(name, x, q, 30);
        REQUIRE(std::abs(analytic_eval(name, x, q) - series) <= 1e-8 * std::abs(series));
      }
  const double br = series_eval("Br", 0.1, 0.5, 25);
  CHECK(std::abs(analytic_eval("Br", 0.1, 0.5) - br) <= 1e-8 * std::abs(br));
}

TEST_CASE("analytic domain errors") {
  CHECK(code_of([] { analytic_eval("H", 0.1, 1.5); }) == ErrorCode::Range);
  CHECK(code_of([] { analytic_eval("Q", 0.1, 0.5); }) == ErrorCode::UnknownName);
  // First pole of H at q = 0.5: the tangent argument reaches atan(sqrt(theta/(4-theta))).
  const double theta = 0.5;
  const double beta = std::sqrt(theta * (4 - theta));
  const double pole = 4.0 / beta * std::atan(std::sqrt(theta / (4 - theta)));
  CHECK(code_of([&] { analytic_eval("H", pole, 0.5); }) == ErrorCode::PoleProximity);
}

TEST_CASE("infinite sums") {
  CHECK(infinite_sum_eval("des", 3, 0.5).value == doctest::Approx(5.0).epsilon(1e-10));
  CHECK(infinite_sum_eval("valley", 3, 0.75).value == doctest::Approx(6.0).epsilon(1e-10));
  for (double q : {0.1, 0.5, 0.9}) CHECK(std::abs(infinite_sum_eval("des", 1, q).value - 1.0) < 1e-8);
  for (double q : {0.25, 0.5, 0.75})
    for (int n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CAPTURE(q);
      const InfiniteSum s = infinite_sum_eval("des", n, q);
      REQUIRE(s.tail_bound < 1e-12);
      REQUIRE(std::abs(s.value - exact(Statistic::des(), n, q)) < 1e-8);
      if (n >= 2) REQUIRE(std::abs(infinite_sum_eval("valley", n, q).value - exact(Statistic::valley(), n, q)) < 1e-8);
    }
  for (double q : {1.5, 2.0, 4.0})
    for (int n = 1; n <= 8; ++n) {
      const double truth = exact(Statistic::asc(), n, q);
      REQUIRE(std::abs(infinite_sum_eval("asc", n, q).value - truth) < 1e-8 * truth);
    }
  CHECK(code_of([] { infinite_sum_eval("asc", 3, 0.5); }) == ErrorCode::Range);
  CHECK(code_of([] { infinite_sum_eval("valley", 1, 0.5); }) == ErrorCode::Range);
  CHECK(code_of([] { infinite_sum_eval("des", 60, 0.9999); }) == ErrorCode::NoConvergence);
}

TEST_CASE("peak series diagnostic reports without asserting") {
  const PeakDiagnostic four = peak_series_diagnostic(4, 0.5, 40);
  CHECK(four.exact == doctest::Approx(16.0));
  CHECK(four.terms.size() == 20);
  CHECK(four.to_string().find("exact 16") != std::string::npos);
  const PeakDiagnostic three = peak_series_diagnostic(3, 0.9, 40);
  CHECK(three.exact == doctest::Approx(5.8));
  for (const auto& t : three.terms) CHECK(t.j % 2 == 1);
  const PeakDiagnostic empty = peak_series_diagnostic(4, 0.5, 0);
  CHECK(empty.terms.empty());
  CHECK(empty.exact == doctest::Approx(16.0));
}
