#include "vislat/rational_walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vislat {

DigitStream PeriodicBinary::digits() const {
  size_t pos = 0;
  auto ap = aperiodic;
  auto per = periodic;
  return [ap, per, pos]() mutable -> std::optional<uint8_t> {
    if (pos < ap.size()) return ap[pos++];
    const size_t i = (pos++ - ap.size()) % per.size();
    return per[i];
  };
}

PeriodicBinary parse_periodic_binary(const std::string& text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid periodic binary \"" + text + "\": " + why);
  };
  if (text.size() < 2 || text[0] != '0' || text[1] != '.')
    fail("expected leading \"0.\"");
  size_t pos = 2;
  PeriodicBinary pb;
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1'))
    pb.aperiodic.push_back(static_cast<uint8_t>(text[pos++] - '0'));
  if (pos >= text.size() || text[pos] != '(')
    fail("expected '(' opening the periodic part");
  ++pos;
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1'))
    pb.periodic.push_back(static_cast<uint8_t>(text[pos++] - '0'));
  if (pos >= text.size() || text[pos] != ')') fail("expected closing ')'");
  if (pos + 1 != text.size()) fail("trailing characters after ')'");
  if (pb.periodic.empty()) fail("period must be nonempty");
  if (std::all_of(pb.periodic.begin(), pb.periodic.end(),
                  [](uint8_t d) { return d == 1; }))
    fail("all-ones period is an ambiguous representation");
  return pb;
}

namespace {

struct WalkGeometry {
  uint64_t x0 = 0, y0 = 0;            // end of the aperiodic part
  std::vector<uint64_t> r, t;         // cumulative offsets, 1-based via index-1
  uint64_t period_r = 0, period_t = 0;
};

WalkGeometry geometry(const PeriodicBinary& pb) {
  WalkGeometry g;
  for (uint8_t d : pb.aperiodic) (d ? g.x0 : g.y0)++;
  uint64_t r = 0, t = 0;
  for (uint8_t d : pb.periodic) {
    (d ? r : t)++;
    g.r.push_back(r);
    g.t.push_back(t);
  }
  g.period_r = r;
  g.period_t = t;
  return g;
}

std::vector<uint64_t> prime_divisors(const BigInt& value) {
  BigInt a = abs(value);
  if (a > BigInt(std::numeric_limits<int64_t>::max()))
    throw std::length_error("column offset m_i too large to factor");
  uint64_t n = a.convert_to<uint64_t>();
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<BigInt> m_offsets(const PeriodicBinary& pb) {
  const WalkGeometry g = geometry(pb);
  std::vector<BigInt> out;
  for (size_t i = 0; i < pb.periodic.size(); ++i) {
    BigInt mi = BigInt(g.period_t) * (BigInt(g.x0) + g.r[i]) -
                BigInt(g.period_r) * (BigInt(g.y0) + g.t[i]);
    out.push_back(mi);
  }
  return out;
}

Rational column_density(const PeriodicBinary& pb, uint32_t i) {
  if (i < 1 || i > pb.period_length())
    throw std::domain_error("column_density: column index out of range");
  const WalkGeometry g = geometry(pb);
  const BigInt mi = m_offsets(pb)[i - 1];
  if (mi == 0) return 0;  // every point past the first in this column is blocked

  const uint64_t xi = g.x0 + g.r[i - 1];
  const uint64_t yi = g.y0 + g.t[i - 1];
  Rational delta = 1;
  for (uint64_t p : prime_divisors(mi)) {
    if (g.period_r % p == 0 && g.period_t % p == 0) {
      // p | gcd(m_i, r, t): the (1-1/p) factor cancels against 1/(1-1/p);
      // eps_i(p) decides between 1 and 0.
      if (xi % p == 0 && yi % p == 0) return 0;
    } else {
      delta *= Rational(p - 1, p);
    }
  }
  return delta;
}

DensityReport limit_density(const PeriodicBinary& pb) {
  const WalkGeometry g = geometry(pb);
  DensityReport rep;
  rep.x0y0 = {g.x0, g.y0};
  rep.period_vector = {g.period_r, g.period_t};
  for (size_t i = 0; i < pb.periodic.size(); ++i)
    rep.column_offsets.emplace_back(g.r[i], g.t[i]);
  rep.m_values = m_offsets(pb);
  Rational sum = 0;
  for (uint32_t i = 1; i <= pb.period_length(); ++i) {
    rep.deltas.push_back(column_density(pb, i));
    sum += rep.deltas.back();
  }
  rep.limit = sum / pb.period_length();
  return rep;
}

EmpiricalCheck verify_empirically(const PeriodicBinary& pb, uint64_t n) {
  if (n < pb.period_length())
    throw std::domain_error("verify_empirically: n must cover at least one period");
  EmpiricalCheck check;
  check.steps = n;
  WalkStats stats = deterministic_walk(pb.digits(), n, 1);
  check.visible_count = stats.consecutive_visible[0];
  check.empirical = static_cast<double>(check.visible_count) / static_cast<double>(n);
  check.limit = limit_density(pb).limit;
  check.deviation = std::abs(check.empirical - check.limit.convert_to<double>());
  return check;
}

}  // namespace vislat
