#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "vislat/rational_walks.hpp"

using namespace vislat;

TEST_CASE("parse_periodic_binary") {
  PeriodicBinary pb = parse_periodic_binary("0.1000(0110)");
  CHECK(pb.aperiodic == std::vector<uint8_t>{1, 0, 0, 0});
  CHECK(pb.periodic == std::vector<uint8_t>{0, 1, 1, 0});

  PeriodicBinary pure = parse_periodic_binary("0.(10)");
  CHECK(pure.aperiodic.empty());
  CHECK(pure.periodic == std::vector<uint8_t>{1, 0});

  CHECK_THROWS_AS(parse_periodic_binary("0.0(1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary("0.0(111)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary("0.10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary("0.1()"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary(".1(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary("0.1(0)1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_periodic_binary("0.12(0)"), std::invalid_argument);
}

TEST_CASE("m_offsets against the worked examples") {
  auto abs_list = [](const std::vector<BigInt>& v) {
    std::vector<uint64_t> out;
    for (const BigInt& m : v) out.push_back(abs(m).convert_to<uint64_t>());
    return out;
  };
  CHECK(abs_list(m_offsets(parse_periodic_binary("0.1000(0110)"))) ==
        std::vector<uint64_t>{6, 4, 2, 4});
  CHECK(abs_list(m_offsets(parse_periodic_binary("0.10000(0110)"))) ==
        std::vector<uint64_t>{8, 6, 4, 6});
  CHECK(abs_list(m_offsets(parse_periodic_binary("0.1000(0111)"))) ==
        std::vector<uint64_t>{11, 10, 9, 8});
}

TEST_CASE("column densities of 0.1000(0110)") {
  PeriodicBinary pb = parse_periodic_binary("0.1000(0110)");
  CHECK(column_density(pb, 1) == Rational(2, 3));
  CHECK(column_density(pb, 2) == 0);  // eps_2(2) = 0
  CHECK(column_density(pb, 3) == 1);
  CHECK(column_density(pb, 4) == 1);
  CHECK_THROWS_AS(column_density(pb, 0), std::domain_error);
  CHECK_THROWS_AS(column_density(pb, 5), std::domain_error);
}

TEST_CASE("m_i = 0 gives a zero column") {
  CHECK(column_density(parse_periodic_binary("0.(0)"), 1) == 0);
  CHECK(limit_density(parse_periodic_binary("0.(0)")).limit == 0);
}

TEST_CASE("published limit densities") {
  const std::pair<const char*, Rational> cases[] = {
      {"0.(10)", Rational(1, 2)},        {"0.10000(10)", Rational(7, 12)},
      {"0.11(101)", Rational(13, 18)},   {"0.1000(0110)", Rational(2, 3)},
      {"0.10000(0110)", Rational(5, 6)}, {"0.1000(0111)", Rational(817, 1320)},
  };
  for (const auto& [text, expected] : cases) {
    CAPTURE(text);
    CHECK(limit_density(parse_periodic_binary(text)).limit == expected);
  }
}

namespace {

// Brute-force column oracle: visibility along a column is periodic in
// k mod |m_i|, so counting one period is exact.
Rational column_oracle(const PeriodicBinary& pb, uint32_t i) {
  DensityReport rep = limit_density(pb);
  const BigInt& mi = rep.m_values[i - 1];
  if (mi == 0) return 0;
  const uint64_t period = abs(mi).convert_to<uint64_t>();
  const auto [r, t] = rep.period_vector;
  const uint64_t xi = rep.x0y0.x + rep.column_offsets[i - 1].first;
  const uint64_t yi = rep.x0y0.y + rep.column_offsets[i - 1].second;
  uint64_t visible = 0;
  for (uint64_t k = 0; k < period; ++k)
    if (std::gcd(xi + k * r, yi + k * t) == 1) ++visible;
  return Rational(visible, period);
}

PeriodicBinary random_expansion(std::mt19937& gen) {
  PeriodicBinary pb;
  const uint32_t ap_len = gen() % 6;
  const uint32_t per_len = 1 + gen() % 8;
  for (uint32_t i = 0; i < ap_len; ++i) pb.aperiodic.push_back(gen() & 1);
  bool all_ones = true;
  for (uint32_t i = 0; i < per_len; ++i) {
    pb.periodic.push_back(gen() & 1);
    all_ones = all_ones && pb.periodic.back() == 1;
  }
  if (all_ones) pb.periodic.back() = 0;
  return pb;
}

}  // namespace

TEST_CASE("delta formula agrees with the brute-force column oracle") {
  // the six paper examples, every column
  for (const char* text : {"0.(10)", "0.10000(10)", "0.11(101)", "0.1000(0110)",
                           "0.10000(0110)", "0.1000(0111)"}) {
    PeriodicBinary pb = parse_periodic_binary(text);
    for (uint32_t i = 1; i <= pb.period_length(); ++i) {
      CAPTURE(text);
      CAPTURE(i);
      REQUIRE(column_density(pb, i) == column_oracle(pb, i));
    }
  }
  // randomized expansions with small period parameters
  std::mt19937 gen(20250823);
  for (int trial = 0; trial < 200; ++trial) {
    PeriodicBinary pb = random_expansion(gen);
    for (uint32_t i = 1; i <= pb.period_length(); ++i) {
      Rational delta = column_density(pb, i);
      REQUIRE(delta >= 0);
      REQUIRE(delta <= 1);
      REQUIRE(delta == column_oracle(pb, i));
    }
  }
}

TEST_CASE("limit is in [0,1] and rotation invariant") {
  for (const char* text : {"0.(10)", "0.10000(10)", "0.11(101)", "0.1000(0110)",
                           "0.10000(0110)", "0.1000(0111)"}) {
    PeriodicBinary pb = parse_periodic_binary(text);
    Rational limit = limit_density(pb).limit;
    CHECK(limit >= 0);
    CHECK(limit <= 1);
    // push the first periodic digit onto the aperiodic part, rotate the period
    PeriodicBinary rotated = pb;
    rotated.aperiodic.push_back(pb.periodic.front());
    rotated.periodic.erase(rotated.periodic.begin());
    rotated.periodic.push_back(pb.periodic.front());
    CAPTURE(text);
    CHECK(limit_density(rotated).limit == limit);
  }
}

TEST_CASE("verify_empirically") {
  EmpiricalCheck half = verify_empirically(parse_periodic_binary("0.(10)"), 10'000);
  CHECK(half.limit == Rational(1, 2));
  CHECK(half.deviation < 1e-3);

  EmpiricalCheck zeros = verify_empirically(parse_periodic_binary("0.(0)"), 100);
  CHECK(zeros.visible_count == 1);
  CHECK(zeros.empirical == doctest::Approx(0.01));
  CHECK(zeros.limit == 0);

  // deviation shrinks with n; the final value is the smallest
  PeriodicBinary pb = parse_periodic_binary("0.1000(0111)");
  std::vector<double> devs;
  for (uint64_t n : {1'000, 10'000, 100'000, 1'000'000})
    devs.push_back(verify_empirically(pb, n).deviation);
  CHECK(devs.back() < 1e-2);
  for (double d : devs) CHECK(devs.back() <= d);

  CHECK_THROWS_AS(verify_empirically(parse_periodic_binary("0.(10)"), 1),
                  std::domain_error);
}
