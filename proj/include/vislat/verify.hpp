#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vislat::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StatisticalOptions {
  uint64_t steps = 1'000'000;
  uint32_t seed_count = 16;
};

/// Criterion ids and their suites:
///   exact:       1 polynomial identities, 2 paper constants, 3 rational
///                densities, 5 degree and symmetry
///   oracle:      4 residue-class enumeration vs product formula
///   statistical: 6 Monte Carlo convergence, 7 level-m convergence,
///                8 deterministic cross-check, 9 reproducibility
std::vector<int> criteria_for_suite(const std::string& suite);

CriterionResult run_criterion(int id, const StatisticalOptions& opts = {});

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          const StatisticalOptions& opts = {});

}  // namespace vislat::verify
