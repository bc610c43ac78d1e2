#pragma once

#include <cstdint>

#include "vislat/numtheory.hpp"
#include "vislat/polynomial.hpp"

namespace vislat {

/// Everything that went into an enclosure of c_k(alpha).
struct ConstantReport {
  uint32_t k = 0;
  RationalPolynomial b_poly;
  Rational alpha;
  Rational b_value;          // b_k(alpha), exact
  Interval euler_interval;   // prod_{p>=k} (1 - k/p^2)
  Interval c_interval;       // b_value * euler_interval, outward rounded
  uint64_t prime_cutoff_used = 0;
};

inline constexpr uint32_t kMaxPolyK = 20;

/// b_k(alpha) as an exact rational polynomial: the P(s)-weighted average of
/// prod_{p<k} (1 - |B_p(s)|/p^2) over all 2^{k-1} step sequences.
/// b_1 = b_2 = 1. Throws std::length_error above k = 20.
RationalPolynomial b_poly(uint32_t k);

/// Enclosure of c_k(alpha) = b_k(alpha) * prod_{p>=k} (1 - k/p^2),
/// width <= tolerance.
ConstantReport c_value(uint32_t k, const Rational& alpha, long double tolerance);

/// Exact rational c_k(m; alpha) = b_k(alpha) * prod_{k<=p<m} (1 - k/p^2).
Rational c_level(uint32_t k, uint64_t m, const Rational& alpha);

/// Limit proportion of runs of exactly k visible points:
/// c_k - 2 c_{k+1} + c_{k+2}, total width <= tolerance.
Interval run_exact_limit(uint32_t k, const Rational& alpha, long double tolerance);

/// Limit proportion of visibility changes: 12/pi^2 - 2 prod_p (1 - 2/p^2).
/// Independent of alpha.
Interval visibility_change_limit(long double tolerance);

}  // namespace vislat
