#include "vislat/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vislat {

namespace {

long double down(long double x) {
  return std::nextafterl(x, -std::numeric_limits<long double>::infinity());
}
long double up(long double x) {
  return std::nextafterl(x, std::numeric_limits<long double>::infinity());
}

constexpr uint64_t kSieveCap = uint64_t{1} << 31;

}  // namespace

Interval Interval::around(long double x) { return {down(x), up(x)}; }

Interval Interval::operator*(const Interval& o) const {
  // All quantities in this codebase are nonnegative apart from small
  // differences of constants, so handle the general sign case properly.
  long double cands[4] = {lower * o.lower, lower * o.upper, upper * o.lower,
                          upper * o.upper};
  long double lo = cands[0], hi = cands[0];
  for (long double c : cands) {
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {down(lo), up(hi)};
}

Interval Interval::operator+(const Interval& o) const {
  return {down(lower + o.lower), up(upper + o.upper)};
}

Interval Interval::operator-(const Interval& o) const {
  return {down(lower - o.upper), up(upper - o.lower)};
}

Interval six_over_pi_squared() {
  const long double pi = std::numbers::pi_v<long double>;
  Interval pi2 = Interval::around(pi) * Interval::around(pi);
  // 6 / pi^2 with outward rounding.
  return {down(6.0L / pi2.upper), up(6.0L / pi2.lower)};
}

void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn) {
  if (limit <= 2) return;
  if (limit > kSieveCap) throw std::length_error("prime sieve limit above 2^31");
  fn(2);
  // Odd-only sieve: bit i represents 2i+1.
  const uint64_t half = limit / 2;
  std::vector<bool> composite(half, false);
  for (uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const uint64_t p = 2 * i + 1;
    fn(p);
    if (p * p < limit) {
      for (uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
    }
  }
}

std::vector<uint64_t> primes_below(uint64_t limit) {
  std::vector<uint64_t> out;
  if (limit <= 2) return out;
  for_each_prime(limit, [&](uint64_t p) { out.push_back(p); });
  return out;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int mobius(uint64_t n) {
  if (n == 0) throw std::domain_error("mobius: n must be positive");
  int factors = 0;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;  // square factor
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

Rational weighted_mobius_sum(uint64_t n) {
  if (n == 0) throw std::domain_error("weighted_mobius_sum: n must be positive");
  // Sieve mu(d) for d <= n: flip sign per prime factor, zero on squares.
  std::vector<int8_t> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  for (uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (uint64_t m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = static_cast<int8_t>(-mu[m]);
    }
    if (p <= n / p) {
      const uint64_t p2 = p * p;
      for (uint64_t m = p2; m <= n; m += p2) mu[m] = 0;
    }
  }
  Rational sum = 0;
  for (uint64_t d = 1; d <= n; ++d) {
    if (mu[d] == 0) continue;
    sum += Rational(BigInt(int64_t{mu[d]} * int64_t(n / d)), BigInt(d));
  }
  return sum;
}

EulerProduct euler_product(uint32_t k, long double tolerance) {
  if (k == 0) throw std::domain_error("euler_product: k must be positive");
  if (!(tolerance > 0)) throw std::domain_error("euler_product: tolerance must be positive");

  // Tail over p >= P: 1 - prod <= sum_{p>=P} k/p^2 <= k * sum_{odd n>=P} 1/n^2
  // <= k/(2(P-2)) for P >= 6. Spend 90% of the budget on truncation, the
  // rest covers per-factor outward rounding.
  const long double budget = 0.9L * tolerance;
  long double cutoff_f = static_cast<long double>(k) / (2.0L * budget) + 3.0L;
  uint64_t cutoff = std::max<uint64_t>(static_cast<uint64_t>(cutoff_f) + 1, k + 8);
  if (cutoff > kSieveCap)
    throw std::length_error("euler_product: tolerance requires prime cutoff above 2^31");

  Interval prod{1.0L, 1.0L};
  for_each_prime(cutoff, [&](uint64_t p) {
    if (p < k) return;
    const long double psq = static_cast<long double>(p) * static_cast<long double>(p);
    Interval factor = Interval::around(1.0L - static_cast<long double>(k) / psq);
    prod = prod * factor;
  });

  const long double tail = static_cast<long double>(k) /
                           (2.0L * (static_cast<long double>(cutoff) - 2.0L));
  Interval result{std::nextafterl(prod.lower * (1.0L - tail),
                                  -std::numeric_limits<long double>::infinity()),
                  prod.upper};
  return {result, cutoff};
}

}  // namespace vislat
