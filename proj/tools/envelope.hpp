#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "vislat/numtheory.hpp"
#include "vislat/polynomial.hpp"

// Output envelope shared by every subcommand. nlohmann::json keeps object
// keys sorted, so parse(dump(envelope)) re-serializes byte-identically.
namespace vislat::cli {

using json = nlohmann::json;

inline std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

inline json decimal_with_error(double value, double half_width) {
  return json{{"value", value}, {"half_width", half_width}};
}

inline json interval_json(const Interval& iv) {
  return decimal_with_error(static_cast<double>(iv.midpoint()),
                            static_cast<double>(iv.width() / 2.0L));
}

inline json polynomial_json(const RationalPolynomial& p) {
  json coeffs = json::array();
  for (const Rational& c : p.coefficients()) coeffs.push_back(rational_string(c));
  return json{{"coefficients", coeffs}, {"degree", p.degree()},
              {"pretty", p.to_string()}};
}

inline std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

inline json make_envelope(const std::string& command, json parameters, json results,
                          json metadata_extra = json::object()) {
  json metadata = std::move(metadata_extra);
  metadata["version"] = "0.1.0";
  metadata["timestamp"] = iso8601_now();
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"metadata", std::move(metadata)}};
}

}  // namespace vislat::cli
