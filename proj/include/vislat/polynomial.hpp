#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vislat/numtheory.hpp"

namespace vislat {

/// Polynomial over exact rationals, coefficient index = power of alpha.
/// Trailing zero coefficients are trimmed after every operation.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial constant(const Rational& c);

  /// Degree of the trimmed polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(size_t power) const;
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& alpha) const;
  Interval evaluate(const Interval& alpha) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& c) const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// e.g. "1/2 - 1/2*a + 1/2*a^2"
  std::string to_string(const std::string& var = "a") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// alpha^r * (1-alpha)^u expanded over exact rationals.
RationalPolynomial step_probability_poly(uint32_t right_count, uint32_t up_count);

}  // namespace vislat
