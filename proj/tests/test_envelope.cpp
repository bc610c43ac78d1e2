#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tools/envelope.hpp"

using namespace vislat;
using vislat::cli::json;

TEST_CASE("rational serialization") {
  CHECK(cli::rational_string(Rational(817, 1320)) == "817/1320");
  CHECK(cli::rational_string(Rational(7, 18)) == "7/18");
  CHECK(cli::rational_string(Rational(3)) == "3");
  CHECK(cli::rational_string(Rational(-1, 2)) == "-1/2");
  CHECK(cli::rational_string(Rational(0)) == "0");
}

TEST_CASE("polynomial pretty-printing") {
  RationalPolynomial b3({Rational(1, 2), Rational(-1, 2), Rational(1, 2)});
  CHECK(b3.to_string() == "1/2 - 1/2*a + 1/2*a^2");
  CHECK(RationalPolynomial::constant(1).to_string() == "1");
  CHECK(RationalPolynomial({Rational(0), Rational(1)}).to_string() == "a");
  CHECK(RationalPolynomial().to_string() == "0");
}

TEST_CASE("envelope JSON round-trips byte-identically") {
  json env = cli::make_envelope(
      "constants", json{{"k", 3}, {"alpha", "1/2"}},
      json{{"c_value", cli::decimal_with_error(0.188153, 5e-7)},
           {"b_poly", cli::polynomial_json(RationalPolynomial(
                          {Rational(1, 2), Rational(-1, 2), Rational(1, 2)}))}});
  const std::string once = env.dump(2);
  const std::string twice = json::parse(once).dump(2);
  CHECK(once == twice);

  CHECK(env["command"] == "constants");
  CHECK(env["metadata"].contains("timestamp"));
  CHECK(env["metadata"]["version"] == "0.1.0");
}
