#include "vislat/constants.hpp"

#include <stdexcept>

#include "vislat/lattice.hpp"

namespace vislat {

RationalPolynomial b_poly(uint32_t k) {
  if (k == 0) throw std::domain_error("b_poly: k must be positive");
  if (k > kMaxPolyK) throw std::length_error("b_poly: k above configured cap");

  const std::vector<uint64_t> primes = primes_below(k);
  RationalPolynomial sum;
  const uint32_t sequences = 1u << (k - 1);
  for (uint32_t bits = 0; bits < sequences; ++bits) {
    StepSequence s(k, bits);
    Rational factor = 1;
    for (uint64_t p : primes) {
      const Rational psq(p * p);
      factor *= (psq - residue_obstructions(s, p)) / psq;
    }
    sum += step_probability_poly(s.right_count(), s.up_count()) * factor;
  }
  return sum;
}

ConstantReport c_value(uint32_t k, const Rational& alpha, long double tolerance) {
  if (alpha < 0 || alpha > 1) throw std::domain_error("c_value: alpha must be in [0,1]");
  if (!(tolerance > 0)) throw std::domain_error("c_value: tolerance must be positive");

  ConstantReport rep;
  rep.k = k;
  rep.alpha = alpha;
  rep.b_poly = b_poly(k);
  rep.b_value = rep.b_poly.evaluate(alpha);

  // b_k(alpha) <= 1, so an Euler enclosure of width <= tolerance keeps the
  // product enclosure within tolerance too.
  EulerProduct ep = euler_product(k, tolerance);
  rep.euler_interval = ep.value;
  rep.prime_cutoff_used = ep.prime_cutoff;
  rep.c_interval = Interval::around(rep.b_value.convert_to<long double>()) * ep.value;
  return rep;
}

Rational c_level(uint32_t k, uint64_t m, const Rational& alpha) {
  if (k == 0) throw std::domain_error("c_level: k must be positive");
  Rational value = b_poly(k).evaluate(alpha);
  for (uint64_t p : primes_below(m)) {
    if (p < k) continue;
    const Rational psq(p * p);
    value *= (psq - k) / psq;
  }
  return value;
}

Interval run_exact_limit(uint32_t k, const Rational& alpha, long double tolerance) {
  const long double each = tolerance / 4.0L;
  Interval ck = c_value(k, alpha, each).c_interval;
  Interval ck1 = c_value(k + 1, alpha, each).c_interval;
  Interval ck2 = c_value(k + 2, alpha, each).c_interval;
  return ck - ck1 * 2.0L + ck2;
}

Interval visibility_change_limit(long double tolerance) {
  // 12/pi^2 - 2 * prod_{p>=2} (1 - 2/p^2); no alpha anywhere.
  Interval twelve = six_over_pi_squared() * 2.0L;
  Interval prod = euler_product(2, tolerance / 4.0L).value;
  return twelve - prod * 2.0L;
}

}  // namespace vislat
