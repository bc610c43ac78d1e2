// Command-line front end: exact visibility constants, seeded walk
// simulation, rational walk densities, and the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "envelope.hpp"
#include "vislat/constants.hpp"
#include "vislat/rational_walks.hpp"
#include "vislat/simulator.hpp"
#include "vislat/verify.hpp"

namespace {

using namespace vislat;
using vislat::cli::json;

constexpr uint64_t kMaxSteps = 10'000'000'000ULL;

// Leading zeros would make cpp_int parse the string as octal.
std::string strip_leading_zeros(const std::string& s) {
  const size_t first = s.find_first_not_of('0');
  return first == std::string::npos ? "0" : s.substr(first);
}

Rational parse_alpha(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(strip_leading_zeros(text.substr(0, slash)));
    BigInt den(strip_leading_zeros(text.substr(slash + 1)));
    if (den <= 0) throw std::invalid_argument("alpha denominator must be positive");
    return Rational(num, den);
  }
  // Decimal: digits[.digits] parsed exactly.
  const size_t dot = text.find('.');
  std::string digits = text;
  size_t frac_len = 0;
  if (dot != std::string::npos) {
    frac_len = text.size() - dot - 1;
    digits = text.substr(0, dot) + text.substr(dot + 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("alpha must be \"p/q\" or a decimal");
  BigInt den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(BigInt(strip_leading_zeros(digits)), den);
}

void emit(const json& envelope, const std::string& csv,
          const std::string& format, const std::string& out_path) {
  std::string payload =
      format == "csv" ? csv : envelope.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::string full = out_path;
  if (const char* dir = std::getenv("VISLAT_OUTPUT_DIR");
      dir && !out_path.empty() && out_path[0] != '/')
    full = std::string(dir) + "/" + out_path;
  std::ofstream f(full);
  if (!f) throw std::runtime_error("cannot open output file: " + full);
  f << payload;
}

int cmd_constants(uint32_t k, const std::string& alpha_text, double tolerance,
                  std::optional<uint64_t> level, bool runs_exact, bool changes,
                  const std::string& format, const std::string& out_path) {
  const Rational alpha = parse_alpha(alpha_text);
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("alpha must be in [0,1]");
  if (k == 0 || k > kMaxPolyK) throw std::invalid_argument("k must be in 1..20");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");

  json params{{"k", k}, {"alpha", cli::rational_string(alpha)}, {"tolerance", tolerance}};
  json results;
  std::ostringstream csv;

  RationalPolynomial poly = b_poly(k);
  results["b_poly"] = cli::polynomial_json(poly);
  if (level) {
    params["level"] = *level;
    const Rational c = c_level(k, *level, alpha);
    results["c_level"] = cli::rational_string(c);
    csv << "k,level,b_poly,c_level\n"
        << k << "," << *level << "," << poly.to_string() << ","
        << cli::rational_string(c) << "\n";
  } else {
    ConstantReport rep = c_value(k, alpha, static_cast<long double>(tolerance));
    results["b_value"] = cli::rational_string(rep.b_value);
    results["c_value"] = cli::interval_json(rep.c_interval);
    results["euler_product"] = cli::interval_json(rep.euler_interval);
    results["prime_cutoff"] = rep.prime_cutoff_used;
    csv << "k,b_poly,c_value,c_half_width\n"
        << k << "," << poly.to_string() << ","
        << static_cast<double>(rep.c_interval.midpoint()) << ","
        << static_cast<double>(rep.c_interval.width() / 2.0L) << "\n";
  }
  if (runs_exact) {
    Interval run = run_exact_limit(k, alpha, static_cast<long double>(tolerance));
    results["run_exact_limit"] = cli::interval_json(run);
  }
  if (changes) {
    Interval chg = visibility_change_limit(static_cast<long double>(tolerance));
    results["visibility_change_limit"] = cli::interval_json(chg);
  }
  emit(cli::make_envelope("constants", params, results), csv.str(), format, out_path);
  return 0;
}

int cmd_simulate(const std::string& alpha_text, uint64_t steps, uint32_t k_max,
                 uint64_t seed, uint32_t streams, std::optional<uint64_t> level,
                 const std::string& format, const std::string& out_path) {
  const Rational alpha = parse_alpha(alpha_text);
  if (steps == 0 || steps > kMaxSteps)
    throw std::invalid_argument("steps must be in 1..1e10");
  if (k_max == 0 || k_max > kMaxPolyK)
    throw std::invalid_argument("kmax must be in 1..20");
  if (streams == 0) throw std::invalid_argument("streams must be positive");

  WalkConfig cfg{alpha, steps, k_max, level, seed, streams};
  WalkStats stats = simulate(cfg);

  std::vector<ConstantReport> constants;
  for (uint32_t k = 1; k <= k_max; ++k) {
    if (level) {
      // Degenerate interval at the exact finite product.
      ConstantReport rep;
      rep.k = k;
      rep.alpha = alpha;
      rep.b_value = b_poly(k).evaluate(alpha);
      rep.c_interval = Interval::around(c_level(k, *level, alpha).convert_to<long double>());
      constants.push_back(rep);
    } else {
      constants.push_back(c_value(k, alpha, 1e-6L));
    }
  }
  std::vector<EmpiricalRow> rows = empirical_report(stats, constants);

  json params{{"alpha", cli::rational_string(alpha)}, {"steps", steps},
              {"kmax", k_max}, {"seed", seed}, {"streams", streams}};
  if (level) params["level"] = *level;
  json results;
  results["change_count"] = stats.change_count;
  json per_k = json::array();
  std::ostringstream csv;
  csv << "k,count,proportion,expected,deviation,flagged\n";
  for (const EmpiricalRow& r : rows) {
    json row{{"k", r.k},
             {"count", r.count},
             {"proportion", r.proportion},
             {"expected", cli::decimal_with_error(r.expected, r.expected_half_width)},
             {"deviation", r.deviation},
             {"flagged", r.flagged},
             {"exact_runs", stats.exact_run_counts[r.k - 1]}};
    per_k.push_back(row);
    csv << r.k << "," << r.count << "," << r.proportion << "," << r.expected << ","
        << r.deviation << "," << (r.flagged ? 1 : 0) << "\n";
  }
  results["per_k"] = per_k;
  json meta{{"generator", kRngName}, {"seed", seed}};
  emit(cli::make_envelope("simulate", params, results, meta), csv.str(), format,
       out_path);
  return 0;
}

int cmd_rational(const std::string& x_text, std::optional<uint64_t> check_steps,
                 const std::string& format, const std::string& out_path) {
  PeriodicBinary pb = parse_periodic_binary(x_text);
  DensityReport rep = limit_density(pb);

  json params{{"x", x_text}};
  json results;
  results["x0y0"] = json::array({rep.x0y0.x, rep.x0y0.y});
  results["period_vector"] = json::array({rep.period_vector.first, rep.period_vector.second});
  results["limit"] = cli::rational_string(rep.limit);
  json columns = json::array();
  std::ostringstream csv;
  csv << "i,r_i,t_i,m_i,delta_i,limit\n";
  for (size_t i = 0; i < rep.deltas.size(); ++i) {
    columns.push_back(json{{"i", i + 1},
                           {"r_i", rep.column_offsets[i].first},
                           {"t_i", rep.column_offsets[i].second},
                           {"m_i", rep.m_values[i].str()},
                           {"delta_i", cli::rational_string(rep.deltas[i])}});
    csv << (i + 1) << "," << rep.column_offsets[i].first << ","
        << rep.column_offsets[i].second << "," << rep.m_values[i].str() << ","
        << cli::rational_string(rep.deltas[i]) << ","
        << cli::rational_string(rep.limit) << "\n";
  }
  results["columns"] = columns;
  if (check_steps) {
    if (*check_steps > kMaxSteps) throw std::invalid_argument("check-steps above 1e10");
    params["check_steps"] = *check_steps;
    EmpiricalCheck chk = verify_empirically(pb, *check_steps);
    results["empirical_check"] = json{{"steps", chk.steps},
                                      {"visible_count", chk.visible_count},
                                      {"empirical", chk.empirical},
                                      {"deviation", chk.deviation}};
  }
  emit(cli::make_envelope("rational", params, results), csv.str(), format, out_path);
  return 0;
}

int cmd_verify(const std::string& suite, double budget, const std::string& format,
               const std::string& out_path) {
  verify::StatisticalOptions opts;
  if (budget > 0 && budget < 60)
    opts.seed_count = 4;
  else if (budget > 0 && budget < 120)
    opts.seed_count = 8;

  const std::vector<int> ids = verify::criteria_for_suite(suite);
  std::vector<verify::CriterionResult> results = verify::run_criteria(ids, opts);

  bool all_passed = true;
  json items = json::array();
  std::ostringstream csv;
  csv << "id,name,passed,detail\n";
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": "
              << r.name << " — " << r.detail << "\n";
    items.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                         {"detail", r.detail}});
    csv << r.id << ",\"" << r.name << "\"," << (r.passed ? 1 : 0) << ",\"" << r.detail
        << "\"\n";
  }
  json params{{"suite", suite}, {"budget", budget}, {"seeds", opts.seed_count}};
  json envelope = cli::make_envelope(
      "verify", params, json{{"criteria", items}, {"all_passed", all_passed}});
  emit(envelope, csv.str(), format, out_path);
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"visible lattice points in random walks: exact constants, "
               "seeded simulation, rational walk densities"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path,
                 "output file (relative paths resolved against $VISLAT_OUTPUT_DIR)");

  // constants
  auto* c = app.add_subcommand("constants", "exact b_k and enclosures of c_k");
  uint32_t k = 1;
  std::string alpha = "1/2";
  double tolerance = 1e-9;
  std::optional<uint64_t> level;
  bool runs_exact = false, changes = false;
  c->add_option("--k", k, "string length k")->required();
  c->add_option("--alpha", alpha, "right-step probability, \"p/q\" or decimal");
  c->add_option("--tolerance", tolerance, "enclosure width bound");
  c->add_option("--level", level, "finite level m: exact c_k(m; alpha)");
  c->add_flag("--runs-exact", runs_exact, "also report c_k - 2c_{k+1} + c_{k+2}");
  c->add_flag("--changes", changes, "also report the change-of-visibility limit");

  // simulate
  auto* s = app.add_subcommand("simulate", "seeded alpha-random walk statistics");
  std::string s_alpha = "1/2";
  uint64_t steps = 1'000'000;
  uint32_t k_max = 4;
  uint64_t seed = 0;
  uint32_t streams = 1;
  std::optional<uint64_t> s_level;
  s->add_option("--alpha", s_alpha, "right-step probability");
  s->add_option("--steps", steps, "number of indices counted (n)")->required();
  s->add_option("--kmax", k_max, "track strings of up to k consecutive visible points");
  s->add_option("--seed", seed, "64-bit master seed");
  s->add_option("--streams", streams, "independent walk streams, merged");
  s->add_option("--level", s_level, "also track level-m visibility");

  // rational
  auto* r = app.add_subcommand("rational", "exact density of a periodic binary walk");
  std::string x_text;
  std::optional<uint64_t> check_steps;
  r->add_option("--x", x_text, "expansion, e.g. \"0.1000(0110)\"")->required();
  r->add_option("--check-steps", check_steps, "also walk n steps and compare");

  // verify
  auto* v = app.add_subcommand("verify", "run the acceptance suites");
  std::string suite = "all";
  double budget = 0;
  v->add_option("--suite", suite, "exact|oracle|statistical|all")
      ->check(CLI::IsMember({"exact", "oracle", "statistical", "all"}));
  v->add_option("--budget", budget, "soft time budget in seconds for statistical runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c) return cmd_constants(k, alpha, tolerance, level, runs_exact, changes,
                                 format, out_path);
    if (*s) return cmd_simulate(s_alpha, steps, k_max, seed, streams, s_level, format,
                                out_path);
    if (*r) return cmd_rational(x_text, check_steps, format, out_path);
    if (*v) return cmd_verify(suite, budget, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
