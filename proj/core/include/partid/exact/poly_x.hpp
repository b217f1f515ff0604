#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partid/exact/rational.hpp"

namespace partid {

// Dense univariate polynomial in X over the rationals.  Index k of the
// coefficient list holds the coefficient of X^k.  The highest stored
// coefficient is never zero; the zero polynomial has no coefficients.
class PolyX {
 public:
  PolyX() = default;
  explicit PolyX(std::vector<Rational> coefficients);

  static PolyX constant(const Rational& c);
  static PolyX monomial(std::size_t power, const Rational& c = 1);
  // The polynomial X.
  static PolyX x();

  std::span<const Rational> coefficients() const { return coefficients_; }
  // Coefficient of X^power; zero past the degree.
  Rational coefficient(std::size_t power) const;
  // Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coefficients_.empty(); }

  Rational evaluate(const Rational& at) const;
  // p(X + shift).
  PolyX shifted(const Rational& shift) const;

  PolyX& operator+=(const PolyX& other);
  PolyX& operator-=(const PolyX& other);
  PolyX& operator*=(const PolyX& other);
  PolyX& operator*=(const Rational& scalar);
  // Throws std::domain_error when `scalar` is zero.
  PolyX& operator/=(const Rational& scalar);

  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  friend PolyX operator*(PolyX a, const Rational& b) { return a *= b; }
  friend PolyX operator*(const Rational& a, PolyX b) { return b *= a; }
  friend PolyX operator/(PolyX a, const Rational& b) { return a /= b; }
  PolyX operator-() const;

  friend bool operator==(const PolyX&, const PolyX&) = default;

  // Coefficient list, lowest degree first: "[1/1, 0/1, -3/2]".  The zero
  // polynomial renders as "[]".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const PolyX& p);

// Lowest power of X at which `a` and `b` differ, or nullopt when equal.
std::optional<std::size_t> first_difference(const PolyX& a, const PolyX& b);

// binom(X + shift, k) = (X + shift)(X + shift - 1)...(X + shift - k + 1) / k!
// as a polynomial of degree k.  k = 0 gives the constant 1.
PolyX poly_binomial(long shift, std::size_t k);

}  // namespace partid
