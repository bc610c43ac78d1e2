#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vislat/constants.hpp"
#include "vislat/numtheory.hpp"

namespace vislat {

/// Name of the generator recorded in output metadata. Stream j of a run with
/// master seed S draws from SplitMix64 started at
///   mix64(S) + (j + 1) * 0x9E3779B97F4A7C15,
/// where mix64 is the SplitMix64 finalizer. A right step is taken when the
/// next 64-bit word is < floor(alpha * 2^64) (alpha = 1 always steps right).
inline constexpr const char* kRngName = "splitmix64";

struct SplitMix64 {
  uint64_t state = 0;

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static uint64_t mix64(uint64_t x) {
    SplitMix64 g{x};
    return g.next();
  }
};

uint64_t stream_seed(uint64_t seed, uint32_t stream);

/// floor(alpha * 2^64) as the exact right-step threshold.
struct StepThreshold {
  uint64_t threshold = 0;
  bool always_right = false;

  static StepThreshold from_alpha(const Rational& alpha);
  bool right(uint64_t word) const { return always_right || word < threshold; }
};

struct WalkConfig {
  Rational alpha;
  uint64_t steps = 0;        // n
  uint32_t k_max = 1;
  std::optional<uint64_t> level;  // m >= 2 for level-m statistics
  uint64_t seed = 0;
  uint32_t streams = 1;
};

/// Mergeable visibility counters over a walk. Index 0 of each list is k = 1.
struct WalkStats {
  uint64_t steps_counted = 0;
  uint32_t k_max = 1;
  std::optional<uint64_t> level;
  std::vector<uint64_t> consecutive_visible;  // sum_i X_i...X_{i+k-1}
  std::vector<uint64_t> exact_run_counts;     // runs of exactly k, start in 1..n
  uint64_t change_count = 0;                  // sum_i (X_{i-1} - X_i)^2
  std::vector<uint64_t> level_consecutive;    // same shape, level-m visibility

  static WalkStats empty(uint32_t k_max, std::optional<uint64_t> level);
};

/// Seeded alpha-random walk over all streams, merged. Deterministic in
/// (alpha, steps, k_max, level, seed, streams).
WalkStats simulate(const WalkConfig& config);

/// One stream of a multi-stream run: `steps` walk steps driven by
/// stream_seed(config.seed, stream). simulate() is exactly the merge of
/// these over the stream partition.
WalkStats simulate_stream(const WalkConfig& config, uint32_t stream, uint64_t steps);

/// Per-stream step counts: steps split as evenly as possible, remainder to
/// the lowest stream indices.
std::vector<uint64_t> partition_steps(uint64_t steps, uint32_t streams);

WalkStats merge(const WalkStats& a, const WalkStats& b);

/// Pull-based binary digit source; nullopt means exhausted.
using DigitStream = std::function<std::optional<uint8_t>()>;

DigitStream digit_stream_from(const std::vector<uint8_t>& digits);

/// Same statistics as simulate, but steps come from the digit stream:
/// 1 -> (1,0), 0 -> (0,1). Throws std::domain_error if the stream runs out
/// before n + k_max digits.
WalkStats deterministic_walk(const DigitStream& digits, uint64_t n, uint32_t k_max,
                             std::optional<uint64_t> level = std::nullopt);

struct EmpiricalRow {
  uint32_t k = 0;
  uint64_t count = 0;
  double proportion = 0.0;
  double expected = 0.0;
  double expected_half_width = 0.0;
  double deviation = 0.0;
  bool flagged = false;
};

/// Per-k proportions against the expected constants. When stats carry a
/// level, rows compare level_consecutive against exact c_k(m; alpha).
/// A row is flagged when deviation > flag_multiple * n^{-1/4}.
std::vector<EmpiricalRow> empirical_report(const WalkStats& stats,
                                           const std::vector<ConstantReport>& constants,
                                           double flag_multiple = 1.0);

}  // namespace vislat
