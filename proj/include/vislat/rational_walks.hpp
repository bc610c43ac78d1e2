#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vislat/lattice.hpp"
#include "vislat/numtheory.hpp"
#include "vislat/simulator.hpp"

namespace vislat {

/// Eventually periodic binary expansion 0.a_1..a_m (period digits repeated).
/// Periods of all ones are rejected: such expansions are the ambiguous
/// representations of numbers that also have a terminating expansion.
struct PeriodicBinary {
  std::vector<uint8_t> aperiodic;
  std::vector<uint8_t> periodic;

  uint32_t period_length() const { return static_cast<uint32_t>(periodic.size()); }

  /// Infinite digit source: aperiodic prefix, then the period forever.
  DigitStream digits() const;
};

/// Parses "0.<digits>(<digits>)", digits in {0,1}, nonempty period.
/// Throws std::invalid_argument on malformed syntax or an all-ones period.
PeriodicBinary parse_periodic_binary(const std::string& text);

struct DensityReport {
  LatticePoint x0y0;                       // end of the aperiodic part
  std::pair<uint64_t, uint64_t> period_vector;  // (r, t) = (r_l, t_l)
  std::vector<std::pair<uint64_t, uint64_t>> column_offsets;  // (r_i, t_i)
  std::vector<BigInt> m_values;            // signed m_i
  std::vector<Rational> deltas;            // column densities, in [0,1]
  Rational limit;                          // (1/l) sum delta_i
};

/// Signed m_i = t(x0 + r_i) - r(y0 + t_i) for i = 1..l.
std::vector<BigInt> m_offsets(const PeriodicBinary& pb);

/// Exact density delta_i of visible points in column i (1-based).
/// Zero when m_i = 0.
Rational column_density(const PeriodicBinary& pb, uint32_t i);

/// Full report; limit is the exact rational lim S_n.
DensityReport limit_density(const PeriodicBinary& pb);

struct EmpiricalCheck {
  uint64_t steps = 0;
  uint64_t visible_count = 0;
  double empirical = 0.0;
  Rational limit;
  double deviation = 0.0;
};

/// Walks the expansion for n steps and compares the observed proportion
/// with the exact limit.
EmpiricalCheck verify_empirically(const PeriodicBinary& pb, uint64_t n);

}  // namespace vislat
