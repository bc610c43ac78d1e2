#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "vislat/simulator.hpp"

using namespace vislat;

namespace {

bool stats_equal(const WalkStats& a, const WalkStats& b) {
  return a.steps_counted == b.steps_counted && a.k_max == b.k_max &&
         a.level == b.level && a.consecutive_visible == b.consecutive_visible &&
         a.exact_run_counts == b.exact_run_counts && a.change_count == b.change_count &&
         a.level_consecutive == b.level_consecutive;
}

}  // namespace

TEST_CASE("degenerate walks") {
  // alpha = 1: all positions on the x-axis, only (1,0) visible
  WalkStats s1 = simulate({Rational(1), 4, 1, std::nullopt, 0, 1});
  CHECK(s1.consecutive_visible[0] == 1);

  // alpha = 0: vertical walk, only (0,1) visible
  WalkStats s0 = simulate({Rational(0), 5, 2, std::nullopt, 0, 1});
  CHECK(s0.consecutive_visible[0] == 1);
  CHECK(s0.consecutive_visible[1] == 0);
}

TEST_CASE("determinism: identical configs give bit-identical stats") {
  WalkConfig cfg{Rational(1, 3), 50'000, 4, std::nullopt, 12345, 2};
  CHECK(stats_equal(simulate(cfg), simulate(cfg)));
  WalkConfig other = cfg;
  other.seed = 12346;
  CHECK_FALSE(stats_equal(simulate(cfg), simulate(other)));
}

TEST_CASE("multi-stream run equals merged per-stream partition") {
  WalkConfig cfg{Rational(2, 5), 100'001, 3, std::nullopt, 7, 4};
  WalkStats whole = simulate(cfg);
  std::vector<uint64_t> parts = partition_steps(cfg.steps, cfg.streams);
  CHECK(parts == std::vector<uint64_t>{25001, 25000, 25000, 25000});
  WalkStats merged = WalkStats::empty(cfg.k_max, cfg.level);
  for (uint32_t j = 0; j < cfg.streams; ++j)
    merged = merge(merged, simulate_stream(cfg, j, parts[j]));
  CHECK(stats_equal(whole, merged));
}

TEST_CASE("merge identity, commutativity, shape mismatch") {
  WalkConfig cfg{Rational(1, 2), 10'000, 3, std::nullopt, 9, 1};
  WalkStats a = simulate(cfg);
  cfg.seed = 10;
  WalkStats b = simulate(cfg);
  CHECK(stats_equal(merge(a, WalkStats::empty(3, std::nullopt)), a));
  CHECK(stats_equal(merge(a, b), merge(b, a)));
  CHECK_THROWS_AS(merge(a, WalkStats::empty(4, std::nullopt)), std::domain_error);
  CHECK_THROWS_AS(merge(a, WalkStats::empty(3, uint64_t{3})), std::domain_error);
}

TEST_CASE("per-run structural invariants") {
  for (uint64_t seed : {1, 2, 3}) {
    WalkConfig cfg{Rational(1, 2), 100'000, 5, uint64_t{4}, seed, 1};
    WalkStats s = simulate(cfg);
    const uint64_t n = s.steps_counted;

    for (uint32_t k = 0; k + 1 < s.k_max; ++k)
      REQUIRE(s.consecutive_visible[k + 1] <= s.consecutive_visible[k]);

    // runs of length <= k_max cannot cover more visible points than exist
    uint64_t weighted_runs = 0;
    for (uint32_t k = 1; k <= s.k_max; ++k)
      weighted_runs += k * s.exact_run_counts[k - 1];
    REQUIRE(weighted_runs <= s.consecutive_visible[0]);
    // changes vs 2(S_1 - S_2), exact up to boundary effects
    const double lhs = static_cast<double>(s.change_count) / n;
    const double rhs =
        2.0 * static_cast<double>(s.consecutive_visible[0] - s.consecutive_visible[1]) / n;
    REQUIRE(std::abs(lhs - rhs) <= 2.0 * s.k_max / static_cast<double>(n));

    // level-m visibility dominates full visibility
    for (uint32_t k = 0; k < s.k_max; ++k)
      REQUIRE(s.level_consecutive[k] >= s.consecutive_visible[k]);
  }
}

TEST_CASE("all counters match a brute-force recomputation") {
  // Drive the walk from a fixed digit vector and recount everything directly
  // from the definitions.
  std::mt19937 gen(424242);
  const uint64_t n = 2000;
  const uint32_t k_max = 6;
  const uint64_t m = 4;
  std::vector<uint8_t> digits;
  for (uint64_t i = 0; i < n + k_max + 4; ++i)
    digits.push_back(static_cast<uint8_t>(gen() & 1));

  WalkStats s = deterministic_walk(digit_stream_from(digits), n, k_max, m);

  // oracle: X_0 = 0, X_j from positions
  std::vector<int> X{0}, Xm{0};
  uint64_t x = 0, y = 0;
  for (uint64_t j = 1; j <= n + k_max; ++j) {
    if (digits[j - 1]) ++x; else ++y;
    X.push_back(std::gcd(x, y) == 1 ? 1 : 0);
    int lvl = 1;
    for (uint64_t p : {2, 3})
      if (x % p == 0 && y % p == 0) lvl = 0;
    Xm.push_back(lvl);
  }
  for (uint32_t k = 1; k <= k_max; ++k) {
    uint64_t consec = 0, consec_m = 0, runs = 0;
    for (uint64_t i = 1; i <= n; ++i) {
      int prod = 1, prod_m = 1;
      for (uint64_t j = i; j < i + k; ++j) {
        prod &= X[j];
        prod_m &= Xm[j];
      }
      consec += prod;
      consec_m += prod_m;
      runs += (1 - X[i - 1]) * prod * (1 - X[i + k]);
    }
    REQUIRE(s.consecutive_visible[k - 1] == consec);
    REQUIRE(s.level_consecutive[k - 1] == consec_m);
    REQUIRE(s.exact_run_counts[k - 1] == runs);
  }
  uint64_t changes = 0;
  for (uint64_t i = 1; i <= n; ++i) changes += (X[i - 1] != X[i]) ? 1 : 0;
  REQUIRE(s.change_count == changes);
}

TEST_CASE("statistical smoke test against 6/pi^2") {
  WalkStats s = simulate({Rational(1, 2), 400'000, 1, std::nullopt, 99, 1});
  const double prop = static_cast<double>(s.consecutive_visible[0]) / 400'000.0;
  CHECK(std::abs(prop - 0.6079) < 0.01);
}

TEST_CASE("deterministic_walk examples") {
  std::vector<uint8_t> alt;
  for (int i = 0; i < 16; ++i) alt.push_back(i % 2 == 0 ? 1 : 0);
  WalkStats s = deterministic_walk(digit_stream_from(alt), 6, 1);
  CHECK(s.consecutive_visible[0] == 4);

  std::vector<uint8_t> zeros(16, 0);
  WalkStats z = deterministic_walk(digit_stream_from(zeros), 5, 1);
  CHECK(z.consecutive_visible[0] == 1);

  std::vector<uint8_t> short_stream(3, 1);
  CHECK_THROWS_AS(deterministic_walk(digit_stream_from(short_stream), 6, 1),
                  std::domain_error);
}

TEST_CASE("empirical_report") {
  WalkStats empty = WalkStats::empty(2, std::nullopt);
  CHECK(empirical_report(empty, {}).empty());

  WalkConfig cfg{Rational(1, 2), 200'000, 2, std::nullopt, 5, 1};
  WalkStats s = simulate(cfg);
  std::vector<ConstantReport> constants;
  for (uint32_t k = 1; k <= 2; ++k) constants.push_back(c_value(k, Rational(1, 2), 1e-6L));
  auto rows = empirical_report(s, constants);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].k == 1);
  CHECK(rows[0].proportion == doctest::Approx(0.6079).epsilon(0.05));
  CHECK(rows[1].proportion <= rows[0].proportion);
  CHECK_THROWS_AS(empirical_report(s, {constants[0]}), std::domain_error);
}

TEST_CASE("threshold mapping from alpha") {
  CHECK(StepThreshold::from_alpha(Rational(0)).threshold == 0);
  CHECK(StepThreshold::from_alpha(Rational(1)).always_right);
  StepThreshold half = StepThreshold::from_alpha(Rational(1, 2));
  CHECK(half.threshold == (uint64_t{1} << 63));
  CHECK(half.right(0));
  CHECK_FALSE(half.right(uint64_t{1} << 63));
  CHECK_THROWS_AS(StepThreshold::from_alpha(Rational(3, 2)), std::domain_error);
}
