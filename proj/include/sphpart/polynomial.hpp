#pragma once

#include "sphpart/numeric.hpp"

#include <string>
#include <vector>

namespace sphpart {

/// Univariate polynomial in x with rational coefficients, stored densely from
/// the constant term up. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(const Rational& constant);  // NOLINT
  RationalPolynomial(long constant) : RationalPolynomial(Rational(constant)) {}  // NOLINT

  /// c * x^degree
  static RationalPolynomial monomial(int degree, const Rational& c = 1);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(int i) const;

  Rational evaluate(const Rational& t) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const RationalPolynomial& other);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "3/2*x^2 + x - 1"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace sphpart
