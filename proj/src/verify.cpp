#include "vislat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vislat/constants.hpp"
#include "vislat/lattice.hpp"
#include "vislat/rational_walks.hpp"
#include "vislat/simulator.hpp"

namespace vislat::verify {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// criterion 1: b_1 = b_2 = 1, b_3 = (1-a+a^2)/2, b_4 = (6-13a+13a^2)/18
CriterionResult criterion1() {
  Check c;
  const Rational h(1, 2), th(1, 18);
  c.require(b_poly(1) == RationalPolynomial::constant(1), "b_1 != 1");
  c.require(b_poly(2) == RationalPolynomial::constant(1), "b_2 != 1");
  c.require(b_poly(3) == RationalPolynomial({h, -h, h}), "b_3 != (1-a+a^2)/2");
  c.require(b_poly(4) == RationalPolynomial({Rational(6, 18), Rational(-13, 18),
                                             Rational(13, 18)}),
            "b_4 != (6-13a+13a^2)/18");
  return {1, "exact polynomial identities b_1..b_4", c.ok,
          c.ok ? "all four polynomials match" : c.detail.str()};
}

// criterion 2: c_k(1/2) rounds to 0.6079, 0.3226, 0.1882, 0.1041 with
// interval width <= 5e-5
CriterionResult criterion2() {
  Check c;
  const double printed[4] = {0.6079, 0.3226, 0.1882, 0.1041};
  std::ostringstream vals;
  for (uint32_t k = 1; k <= 4; ++k) {
    ConstantReport rep = c_value(k, Rational(1, 2), 2e-5L);
    const Interval& ci = rep.c_interval;
    c.require(ci.width() <= 5e-5L,
              "c_" + std::to_string(k) + " interval width " + fmt((double)ci.width()));
    // Values rounding to the printed 4 decimals live in [t - 5e-5, t + 5e-5).
    Interval rounds{static_cast<long double>(printed[k - 1]) - 5e-5L,
                    static_cast<long double>(printed[k - 1]) + 5e-5L};
    c.require(ci.intersects(rounds), "c_" + std::to_string(k) + " = " +
                                         fmt((double)ci.midpoint()) +
                                         " does not round to " + fmt(printed[k - 1]));
    vals << (k > 1 ? ", " : "") << "c_" << k << "=" << fmt((double)ci.midpoint());
  }
  return {2, "paper constants c_1..c_4 at alpha = 1/2", c.ok,
          c.ok ? vals.str() : c.detail.str()};
}

// criterion 3: six exact rational densities and three |m_i| lists
CriterionResult criterion3() {
  Check c;
  const std::pair<const char*, Rational> cases[] = {
      {"0.(10)", Rational(1, 2)},          {"0.10000(10)", Rational(7, 12)},
      {"0.11(101)", Rational(13, 18)},     {"0.1000(0110)", Rational(2, 3)},
      {"0.10000(0110)", Rational(5, 6)},   {"0.1000(0111)", Rational(817, 1320)},
  };
  for (const auto& [text, expected] : cases) {
    Rational got = limit_density(parse_periodic_binary(text)).limit;
    std::ostringstream gs;
    gs << got;
    c.require(got == expected, std::string(text) + " -> " + gs.str());
  }
  const std::pair<const char*, std::vector<uint64_t>> mi_cases[] = {
      {"0.1000(0110)", {6, 4, 2, 4}},
      {"0.10000(0110)", {8, 6, 4, 6}},
      {"0.1000(0111)", {11, 10, 9, 8}},
  };
  for (const auto& [text, expected] : mi_cases) {
    std::vector<BigInt> m = m_offsets(parse_periodic_binary(text));
    bool same = m.size() == expected.size();
    for (size_t i = 0; same && i < m.size(); ++i)
      same = abs(m[i]) == BigInt(expected[i]);
    c.require(same, std::string("|m_i| mismatch for ") + text);
  }
  return {3, "rational-walk densities and |m_i| lists", c.ok,
          c.ok ? "six densities and three offset lists exact" : c.detail.str()};
}

// criterion 4: enumeration oracle vs CRT product formula, and the b_k sum
CriterionResult criterion4() {
  Check c;
  for (uint32_t k = 1; k <= 5 && c.ok; ++k) {
    for (uint32_t bits = 0; bits < (1u << (k - 1)); ++bits) {
      StepSequence s(k, bits);
      for (uint64_t m : {3, 4, 6}) {
        uint64_t product = 1;
        for (uint64_t p : primes_below(m))
          product *= p * p - residue_obstructions(s, p);
        c.require(count_admissible_classes(s, m) == product,
                  "enumeration != product at k=" + std::to_string(k) +
                      " bits=" + std::to_string(bits) + " m=" + std::to_string(m));
      }
    }
  }
  // sum_s P(s) |A_k(s)| / D_k^2 == b_k(alpha) at 10 rational alphas
  for (uint32_t k = 1; k <= 5; ++k) {
    uint64_t modulus = 1;
    for (uint64_t p : primes_below(k)) modulus *= p;
    RationalPolynomial bk = b_poly(k);
    for (int j = 1; j <= 10; ++j) {
      const Rational alpha(j, 11);
      Rational sum = 0;
      for (uint32_t bits = 0; bits < (1u << (k - 1)); ++bits) {
        StepSequence s(k, bits);
        Rational prob = step_probability_poly(s.right_count(), s.up_count())
                            .evaluate(alpha);
        sum += prob * Rational(count_admissible_classes(s, k));
      }
      sum /= Rational(modulus) * modulus;
      c.require(sum == bk.evaluate(alpha),
                "A_k average != b_" + std::to_string(k) + " at alpha=" +
                    std::to_string(j) + "/11");
    }
  }
  return {4, "residue-class oracle equivalence", c.ok,
          c.ok ? "enumeration matches product formula and b_k average" : c.detail.str()};
}

// criterion 5: degree(b_k) = 2*floor((k-1)/2) and b_k(a) = b_k(1-a), k <= 8
CriterionResult criterion5() {
  Check c;
  for (uint32_t k = 1; k <= 8; ++k) {
    RationalPolynomial bk = b_poly(k);
    const int expected_degree = 2 * static_cast<int>((k - 1) / 2);
    c.require(bk.degree() == expected_degree,
              "degree(b_" + std::to_string(k) + ") = " + std::to_string(bk.degree()));
    for (int j = 0; j <= 50; ++j) {
      const Rational a(j, 50);
      c.require(bk.evaluate(a) == bk.evaluate(1 - a),
                "b_" + std::to_string(k) + " not symmetric at " + std::to_string(j) + "/50");
    }
  }
  return {5, "b_k degree and alpha <-> 1-alpha symmetry", c.ok,
          c.ok ? "degrees and symmetry hold for k <= 8" : c.detail.str()};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

// criterion 6: Monte Carlo convergence of S_{n,k}, run and change proportions
CriterionResult criterion6(const StatisticalOptions& opts) {
  Check c;
  const uint32_t k_max = 4;
  const Rational alphas[] = {Rational(3, 10), Rational(1, 2), Rational(7, 10)};
  const double change_expected =
      static_cast<double>(visibility_change_limit(1e-6L).midpoint());

  for (const Rational& alpha : alphas) {
    double c_expected[k_max], run_expected[k_max];
    for (uint32_t k = 1; k <= k_max; ++k) {
      c_expected[k - 1] =
          static_cast<double>(c_value(k, alpha, 1e-6L).c_interval.midpoint());
      run_expected[k - 1] =
          static_cast<double>(run_exact_limit(k, alpha, 1e-6L).midpoint());
    }
    std::vector<double> dev_k[k_max], dev_run[k_max], dev_change;
    for (uint32_t seed = 1; seed <= opts.seed_count; ++seed) {
      WalkConfig cfg{alpha, opts.steps, k_max, std::nullopt, seed, 1};
      WalkStats stats = simulate(cfg);
      const double n = static_cast<double>(stats.steps_counted);
      for (uint32_t k = 1; k <= k_max; ++k) {
        dev_k[k - 1].push_back(
            std::abs(stats.consecutive_visible[k - 1] / n - c_expected[k - 1]));
        dev_run[k - 1].push_back(
            std::abs(stats.exact_run_counts[k - 1] / n - run_expected[k - 1]));
      }
      dev_change.push_back(std::abs(stats.change_count / n - change_expected));
    }
    std::ostringstream a;
    a << alpha;
    auto check_family = [&](const std::vector<double>& devs, const std::string& what) {
      c.require(median(devs) < 0.005,
                what + " median dev " + fmt(median(devs)) + " at alpha=" + a.str());
      const double worst = *std::max_element(devs.begin(), devs.end());
      c.require(worst < 0.02, what + " worst dev " + fmt(worst) + " at alpha=" + a.str());
    };
    for (uint32_t k = 1; k <= k_max; ++k) {
      check_family(dev_k[k - 1], "S_{n," + std::to_string(k) + "}");
      check_family(dev_run[k - 1], "runs of " + std::to_string(k));
    }
    check_family(dev_change, "changes");
  }
  std::ostringstream d;
  d << "3 alphas x " << opts.seed_count << " seeds x n=" << opts.steps
    << ": medians < 0.005, all seeds < 0.02";
  return {6, "Monte Carlo convergence to c_k, run and change limits", c.ok,
          c.ok ? d.str() : c.detail.str()};
}

// criterion 7: level-m statistics vs exact c_k(m; 1/2), m = 4
CriterionResult criterion7(const StatisticalOptions& opts) {
  Check c;
  WalkConfig cfg{Rational(1, 2), opts.steps, 3, uint64_t{4}, 20260823, 1};
  WalkStats stats = simulate(cfg);
  const double n = static_cast<double>(stats.steps_counted);
  std::ostringstream vals;
  for (uint32_t k = 1; k <= 3; ++k) {
    const double exact = c_level(k, 4, Rational(1, 2)).convert_to<double>();
    const double empirical = stats.level_consecutive[k - 1] / n;
    c.require(std::abs(empirical - exact) < 0.01,
              "level k=" + std::to_string(k) + " dev " + fmt(std::abs(empirical - exact)));
    vals << (k > 1 ? ", " : "") << "k=" << k << ": " << fmt(empirical) << " vs "
         << fmt(exact);
  }
  return {7, "level-4 convergence to c_k(4; 1/2)", c.ok,
          c.ok ? vals.str() : c.detail.str()};
}

// criterion 8: deterministic walk of 0.1000(0110) approaches 2/3
CriterionResult criterion8(const StatisticalOptions& opts) {
  Check c;
  EmpiricalCheck check =
      verify_empirically(parse_periodic_binary("0.1000(0110)"), opts.steps);
  c.require(check.limit == Rational(2, 3), "limit is not 2/3");
  c.require(check.deviation < 0.005, "deviation " + fmt(check.deviation));
  return {8, "deterministic cross-check of 0.1000(0110)", c.ok,
          c.ok ? "proportion " + fmt(check.empirical) + " vs 2/3" : c.detail.str()};
}

bool stats_equal(const WalkStats& a, const WalkStats& b) {
  return a.steps_counted == b.steps_counted && a.k_max == b.k_max &&
         a.level == b.level && a.consecutive_visible == b.consecutive_visible &&
         a.exact_run_counts == b.exact_run_counts &&
         a.change_count == b.change_count && a.level_consecutive == b.level_consecutive;
}

// criterion 9: bit-identical reruns; multi-stream run equals merged partition
CriterionResult criterion9(const StatisticalOptions& opts) {
  Check c;
  const uint64_t n = std::min<uint64_t>(opts.steps, 200'000);
  WalkConfig cfg{Rational(1, 2), n, 3, std::nullopt, 42, 4};
  WalkStats a = simulate(cfg);
  WalkStats b = simulate(cfg);
  c.require(stats_equal(a, b), "identical configs differ");

  std::vector<uint64_t> parts = partition_steps(cfg.steps, cfg.streams);
  WalkStats merged = WalkStats::empty(cfg.k_max, cfg.level);
  for (uint32_t j = 0; j < cfg.streams; ++j)
    merged = merge(merged, simulate_stream(cfg, j, parts[j]));
  c.require(stats_equal(a, merged), "4-stream run != merged partition");
  return {9, "seeded reproducibility and stream partition invariance", c.ok,
          c.ok ? "bit-identical reruns; merge matches" : c.detail.str()};
}

}  // namespace

std::vector<int> criteria_for_suite(const std::string& suite) {
  if (suite == "exact") return {1, 2, 3, 5};
  if (suite == "oracle") return {4};
  if (suite == "statistical") return {6, 7, 8, 9};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  throw std::invalid_argument("unknown suite: " + suite);
}

CriterionResult run_criterion(int id, const StatisticalOptions& opts) {
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6(opts);
    case 7: return criterion7(opts);
    case 8: return criterion8(opts);
    case 9: return criterion9(opts);
    default: throw std::invalid_argument("unknown criterion id");
  }
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          const StatisticalOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, opts));
  return out;
}

}  // namespace vislat::verify
