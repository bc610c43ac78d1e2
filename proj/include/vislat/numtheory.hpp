#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vislat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed interval [lower, upper] of long doubles, used to enclose values
/// that cannot be represented exactly (infinite Euler products, pi^2, ...).
/// All arithmetic rounds outward, so a true value contained in the inputs
/// stays contained in the result.
struct Interval {
  long double lower = 0.0L;
  long double upper = 0.0L;

  long double width() const { return upper - lower; }
  long double midpoint() const { return (lower + upper) / 2.0L; }
  bool contains(long double x) const { return lower <= x && x <= upper; }
  bool intersects(const Interval& o) const {
    return lower <= o.upper && o.lower <= upper;
  }

  // Point interval, widened by one ulp each side to absorb the rounding of
  // whatever expression produced x.
  static Interval around(long double x);
  static Interval exact(long double x) { return {x, x}; }

  Interval operator*(const Interval& o) const;
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(long double c) const { return *this * around(c); }
};

/// Enclosure of 6/pi^2 (the k=1 Euler product in closed form).
Interval six_over_pi_squared();

/// Primes p < limit, ascending. limit < 2 gives an empty list.
std::vector<uint64_t> primes_below(uint64_t limit);

/// Streaming variant: calls fn(p) for each prime p < limit in order.
/// Avoids materialising the (possibly huge) prime list.
void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn);

bool is_prime(uint64_t n);

/// Moebius function. Throws std::domain_error for n = 0.
int mobius(uint64_t n);

/// Exact value of sum_{d<=n} (mu(d)/d) * floor(n/d).
/// Grows like 6n/pi^2 with logarithmic error.
Rational weighted_mobius_sum(uint64_t n);

struct EulerProduct {
  Interval value;            // encloses prod_{p>=k} (1 - k/p^2)
  uint64_t prime_cutoff;     // primes p < prime_cutoff entered the product
};

/// Rigorous enclosure of prod_{p>=k} (1 - k/p^2) of width <= tolerance.
/// The truncation point P is chosen so that the tail over p >= P satisfies
/// 1 >= prod >= 1 - k/(2(P-2)) (all primes >= P > 3 are odd).
/// Throws std::length_error if the required cutoff exceeds 2^31.
EulerProduct euler_product(uint32_t k, long double tolerance);

}  // namespace vislat
