#include "vislat/polynomial.hpp"

#include <sstream>

namespace vislat {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& alpha) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

Interval RationalPolynomial::evaluate(const Interval& alpha) const {
  Interval acc{0.0L, 0.0L};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Interval c = Interval::around(it->convert_to<long double>());
    acc = acc * alpha + c;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  *this = *this + o;
  return *this;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = abs_c == 1 && i > 0;
    if (!unit) os << abs_c;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RationalPolynomial step_probability_poly(uint32_t right_count, uint32_t up_count) {
  RationalPolynomial alpha({Rational(0), Rational(1)});
  RationalPolynomial one_minus({Rational(1), Rational(-1)});
  RationalPolynomial out = RationalPolynomial::constant(Rational(1));
  for (uint32_t i = 0; i < right_count; ++i) out = out * alpha;
  for (uint32_t i = 0; i < up_count; ++i) out = out * one_minus;
  return out;
}

}  // namespace vislat
