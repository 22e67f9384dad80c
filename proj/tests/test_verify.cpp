#include <doctest.h>

#include "flatstat/error.hpp"
#include "flatstat/verify.hpp"

using namespace flatstat;

TEST_CASE("default run passes") {
  const VerifyReport report = run_verify({});
  CHECK(report.passed());
  CHECK(report.suites.size() == 9);
  for (const auto& s : report.suites) {
    CAPTURE(s.suite);
    CHECK(s.passed);
    CHECK(s.checks > 0);
  }
  CHECK(report.table().find("FAIL") == std::string::npos);
}

TEST_CASE("smallest run passes") {
  VerifyOptions options;
  options.n_max = 1;
  CHECK(run_verify(options).passed());
}

TEST_CASE("an injected fault is reported with its statistic, size and method") {
  VerifyOptions options;
  options.inject_fault = true;
  const VerifyReport report = run_verify(options);
  CHECK_FALSE(report.passed());
  int failed = 0;
  for (const auto& s : report.suites)
    if (!s.passed) {
      ++failed;
      CHECK(s.suite == "distengine");
      CHECK(s.first_failure.find("st=des n=3 method=closed") != std::string::npos);
    }
  CHECK(failed == 1);
}

TEST_CASE("options are range-checked") {
  VerifyOptions options;
  options.n_max = 0;
  CHECK_THROWS_AS(run_verify(options), Error);
  options.n_max = 99;
  CHECK_THROWS_AS(run_verify(options), Error);
}
