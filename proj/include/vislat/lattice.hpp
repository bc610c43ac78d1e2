#pragma once

#include <cstdint>
#include <vector>

namespace vislat {

struct LatticePoint {
  uint64_t x = 0;
  uint64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// A sequence s_0..s_{k-1} of cumulative offsets, s_0 = (0,0), each step
/// adding (1,0) or (0,1). These are the 2^{k-1} local shapes a walk segment
/// of k consecutive positions can take.
class StepSequence {
 public:
  /// Builds the sequence from step bits: bit i of `steps` (i < k-1) set
  /// means the (i+1)-th offset adds (1,0), clear means (0,1).
  StepSequence(uint32_t k, uint32_t steps);

  uint32_t size() const { return static_cast<uint32_t>(offsets_.size()); }
  const std::vector<LatticePoint>& offsets() const { return offsets_; }
  uint32_t right_count() const { return right_count_; }
  uint32_t up_count() const { return up_count_; }

  /// The complementary sequence: every right step swapped with up.
  StepSequence complement() const;

 private:
  std::vector<LatticePoint> offsets_;
  uint32_t right_count_ = 0;
  uint32_t up_count_ = 0;
};

/// gcd(x, y) = 1, with gcd(0,0) = 0 so the origin is not visible.
bool is_visible(const LatticePoint& p);

/// p does not divide both coordinates. Throws std::domain_error if p is
/// not prime.
bool is_p_visible(const LatticePoint& pt, uint64_t p);

/// p-visible for every prime p < m. m < 2 holds vacuously.
bool is_visible_at_level(const LatticePoint& pt, uint64_t m);

/// |B_p(s)|: the number of distinct residue classes -s_i mod p. Equals k
/// whenever p >= k.
uint32_t residue_obstructions(const StepSequence& s, uint64_t p);

/// |A_m(s)| by direct enumeration of all classes mod D_m = prod_{p<m} p,
/// keeping those that avoid B_p(s) for every prime p < m. Brute-force
/// oracle for the CRT product formula; throws std::length_error when
/// D_m exceeds 2310.
uint64_t count_admissible_classes(const StepSequence& s, uint64_t m);

}  // namespace vislat
