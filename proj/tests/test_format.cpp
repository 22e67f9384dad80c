#include <doctest.h>

#include "flatstat/distribution.hpp"
#include "flatstat/error.hpp"
#include "flatstat/format.hpp"

using namespace flatstat;
using nlohmann::json;

TEST_CASE("q-polynomial JSON") {
  const QPolynomial g = dist(Statistic::des(), 3);
  CHECK(qpoly_to_json(g).dump() == R"({"coeffs":["4","2"],"var":"q"})");
  CHECK(qpoly_to_json(QPolynomial()).dump() == R"({"coeffs":[],"var":"q"})");
  for (int n = 1; n <= 20; ++n) {
    const QPolynomial p = dist(Statistic::des(), n);
    REQUIRE(qpoly_from_json(json::parse(qpoly_to_json(p).dump())) == p);
  }
  const QPolynomial negative(std::vector<BigInt>{BigInt("-123456789012345678901234567890"), 0, 7});
  CHECK(qpoly_from_json(qpoly_to_json(negative)) == negative);
}

TEST_CASE("q-polynomial JSON rejects other shapes") {
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"var":"s","coeffs":["1"]})")), Error);
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"var":"q","coeffs":[1]})")), Error);
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"var":"q","coeffs":["1x"]})")), Error);
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"var":"q","coeffs":["-"]})")), Error);
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"var":"q"})")), Error);
  CHECK_THROWS_AS(qpoly_from_json(json::parse(R"([1,2])")), Error);
}

TEST_CASE("CSV") {
  CHECK(qpoly_to_csv(dist(Statistic::des(), 3)) == "power,coeff\n0,4\n1,2\n");
  CHECK(qpoly_to_csv(dist(Statistic::asc(), 2)) == "power,coeff\n1,2\n");
}

TEST_CASE("output record") {
  const json record = output_record({{"name", "dist"}}, qpoly_to_json(dist(Statistic::valley(), 3)));
  CHECK(record["schema_version"] == kSchemaVersion);
  CHECK(record["command"]["name"] == "dist");
  CHECK(qpoly_from_json(record["payload"]) == QPolynomial(6));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("triangle JSON") {
  DistTriangle t(2);
  t.set(3, 0, 1, 2);
  t.set(3, 0, 2, 3);
  CHECK(triangle_to_json(t).dump() ==
        R"({"cells":[{"count":"2","k":1,"m":0,"n":3},{"count":"3","k":2,"m":0,"n":3}],"d":2})");
}
