#include "vislat/lattice.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "vislat/numtheory.hpp"

namespace vislat {

StepSequence::StepSequence(uint32_t k, uint32_t steps) {
  if (k == 0) throw std::domain_error("StepSequence: k must be positive");
  if (k > 33) throw std::length_error("StepSequence: k too large");
  offsets_.reserve(k);
  LatticePoint cur{0, 0};
  offsets_.push_back(cur);
  for (uint32_t i = 0; i + 1 < k; ++i) {
    if ((steps >> i) & 1u) {
      ++cur.x;
      ++right_count_;
    } else {
      ++cur.y;
      ++up_count_;
    }
    offsets_.push_back(cur);
  }
}

StepSequence StepSequence::complement() const {
  uint32_t k = size();
  uint32_t bits = 0;
  for (uint32_t i = 0; i + 1 < k; ++i) {
    const bool right = offsets_[i + 1].x > offsets_[i].x;
    if (!right) bits |= (1u << i);
  }
  return StepSequence(k, bits);
}

bool is_visible(const LatticePoint& p) { return std::gcd(p.x, p.y) == 1; }

bool is_p_visible(const LatticePoint& pt, uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("is_p_visible: p must be prime");
  return !(pt.x % p == 0 && pt.y % p == 0);
}

bool is_visible_at_level(const LatticePoint& pt, uint64_t m) {
  if (m < 2) return true;
  for (uint64_t p : primes_below(m))
    if (pt.x % p == 0 && pt.y % p == 0) return false;
  return true;
}

uint32_t residue_obstructions(const StepSequence& s, uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("residue_obstructions: p must be prime");
  std::set<std::pair<uint64_t, uint64_t>> classes;
  for (const LatticePoint& o : s.offsets()) {
    // class of -s_i mod p
    classes.emplace((p - o.x % p) % p, (p - o.y % p) % p);
  }
  return static_cast<uint32_t>(classes.size());
}

uint64_t count_admissible_classes(const StepSequence& s, uint64_t m) {
  const std::vector<uint64_t> primes = primes_below(m);
  uint64_t modulus = 1;
  for (uint64_t p : primes) modulus *= p;
  if (modulus > 2310)
    throw std::length_error("count_admissible_classes: enumeration modulus above 2310");

  uint64_t count = 0;
  for (uint64_t x = 0; x < modulus; ++x) {
    for (uint64_t y = 0; y < modulus; ++y) {
      bool admissible = true;
      for (uint64_t p : primes) {
        for (const LatticePoint& o : s.offsets()) {
          if ((x + o.x) % p == 0 && (y + o.y) % p == 0) {
            admissible = false;
            break;
          }
        }
        if (!admissible) break;
      }
      if (admissible) ++count;
    }
  }
  return count;
}

}  // namespace vislat
