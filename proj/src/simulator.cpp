#include "vislat/simulator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vislat {

uint64_t stream_seed(uint64_t seed, uint32_t stream) {
  return SplitMix64::mix64(seed) + (uint64_t{stream} + 1) * 0x9E3779B97F4A7C15ULL;
}

StepThreshold StepThreshold::from_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::domain_error("alpha must be in [0,1]");
  if (alpha == 1) return {0, true};
  BigInt scaled = (numerator(alpha) << 64) / denominator(alpha);
  return {scaled.convert_to<uint64_t>(), false};
}

WalkStats WalkStats::empty(uint32_t k_max, std::optional<uint64_t> level) {
  WalkStats s;
  s.k_max = k_max;
  s.level = level;
  s.consecutive_visible.assign(k_max, 0);
  s.exact_run_counts.assign(k_max, 0);
  if (level) s.level_consecutive.assign(k_max, 0);
  return s;
}

namespace {

// Core counting loop shared by the random and deterministic walks. Positions
// P_1..P_{n+k_max} are generated so every statistic over i = 1..n is fully
// determined, with X_0 = 0 by convention.
template <typename StepRight>
WalkStats run_walk(uint64_t n, uint32_t k_max, std::optional<uint64_t> level,
                   StepRight&& step_right) {
  if (k_max == 0) throw std::domain_error("k_max must be positive");
  if (level && *level < 2) throw std::domain_error("level must be >= 2");

  WalkStats stats = WalkStats::empty(k_max, level);
  stats.steps_counted = n;

  std::vector<uint64_t> level_primes;
  if (level) level_primes = primes_below(*level);

  uint64_t x = 0, y = 0;
  bool prev_visible = false;  // X_0 = 0
  uint64_t run_len = 0;
  uint64_t level_run_len = 0;
  const uint64_t total = n + k_max;
  for (uint64_t j = 1; j <= total; ++j) {
    if (step_right()) ++x; else ++y;
    const bool visible = std::gcd(x, y) == 1;

    if (j <= n) stats.change_count += (visible != prev_visible) ? 1 : 0;
    prev_visible = visible;

    if (visible) {
      ++run_len;
    } else {
      // A maximal run of run_len visible points ended at j-1.
      if (run_len >= 1 && run_len <= k_max) {
        const uint64_t start = j - run_len;
        if (start >= 1 && start <= n) ++stats.exact_run_counts[run_len - 1];
      }
      run_len = 0;
    }
    for (uint32_t k = 1; k <= k_max && k <= run_len; ++k) {
      // window X_{j-k+1}..X_j all visible; counted when its start index
      // i = j-k+1 lies in 1..n
      if (j >= k && j - k + 1 <= n) ++stats.consecutive_visible[k - 1];
    }

    if (level) {
      bool lvl_visible = true;
      for (uint64_t p : level_primes) {
        if (x % p == 0 && y % p == 0) {
          lvl_visible = false;
          break;
        }
      }
      level_run_len = lvl_visible ? level_run_len + 1 : 0;
      for (uint32_t k = 1; k <= k_max && k <= level_run_len; ++k) {
        if (j >= k && j - k + 1 <= n) ++stats.level_consecutive[k - 1];
      }
    }
  }
  return stats;
}

}  // namespace

std::vector<uint64_t> partition_steps(uint64_t steps, uint32_t streams) {
  if (streams == 0) throw std::domain_error("streams must be positive");
  std::vector<uint64_t> out(streams, steps / streams);
  for (uint32_t j = 0; j < steps % streams; ++j) ++out[j];
  return out;
}

WalkStats simulate_stream(const WalkConfig& config, uint32_t stream, uint64_t steps) {
  const StepThreshold threshold = StepThreshold::from_alpha(config.alpha);
  SplitMix64 rng{stream_seed(config.seed, stream)};
  return run_walk(steps, config.k_max, config.level,
                  [&] { return threshold.right(rng.next()); });
}

WalkStats simulate(const WalkConfig& config) {
  if (config.steps == 0) throw std::domain_error("simulate: steps must be positive");
  const std::vector<uint64_t> parts = partition_steps(config.steps, config.streams);
  WalkStats merged = WalkStats::empty(config.k_max, config.level);
  for (uint32_t j = 0; j < config.streams; ++j)
    merged = merge(merged, simulate_stream(config, j, parts[j]));
  return merged;
}

WalkStats merge(const WalkStats& a, const WalkStats& b) {
  if (a.k_max != b.k_max || a.level != b.level)
    throw std::domain_error("merge: mismatched WalkStats shapes");
  WalkStats out = a;
  out.steps_counted += b.steps_counted;
  out.change_count += b.change_count;
  for (uint32_t i = 0; i < a.k_max; ++i) {
    out.consecutive_visible[i] += b.consecutive_visible[i];
    out.exact_run_counts[i] += b.exact_run_counts[i];
    if (a.level) out.level_consecutive[i] += b.level_consecutive[i];
  }
  return out;
}

DigitStream digit_stream_from(const std::vector<uint8_t>& digits) {
  size_t pos = 0;
  return [digits, pos]() mutable -> std::optional<uint8_t> {
    if (pos >= digits.size()) return std::nullopt;
    return digits[pos++];
  };
}

WalkStats deterministic_walk(const DigitStream& digits, uint64_t n, uint32_t k_max,
                             std::optional<uint64_t> level) {
  return run_walk(n, k_max, level, [&] {
    std::optional<uint8_t> d = digits();
    if (!d) throw std::domain_error("deterministic_walk: digit stream exhausted");
    return *d != 0;
  });
}

std::vector<EmpiricalRow> empirical_report(const WalkStats& stats,
                                           const std::vector<ConstantReport>& constants,
                                           double flag_multiple) {
  std::vector<EmpiricalRow> rows;
  if (stats.steps_counted == 0) return rows;
  if (constants.size() < stats.k_max)
    throw std::domain_error("empirical_report: constants must cover k = 1..k_max");

  const double n = static_cast<double>(stats.steps_counted);
  const double flag_threshold = flag_multiple * std::pow(n, -0.25);
  const auto& counts = stats.level ? stats.level_consecutive : stats.consecutive_visible;
  for (uint32_t k = 1; k <= stats.k_max; ++k) {
    EmpiricalRow row;
    row.k = k;
    row.count = counts[k - 1];
    row.proportion = static_cast<double>(row.count) / n;
    const Interval& c = constants[k - 1].c_interval;
    row.expected = static_cast<double>(c.midpoint());
    row.expected_half_width = static_cast<double>(c.width() / 2.0L);
    row.deviation = std::abs(row.proportion - row.expected);
    row.flagged = row.deviation > flag_threshold;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vislat
