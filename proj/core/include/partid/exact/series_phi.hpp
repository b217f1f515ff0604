#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partid/exact/poly_x.hpp"
#include "partid/exact/rational.hpp"

namespace partid {

// Truncated power series in Phi with coefficients in Q[X].  A series of
// order N keeps exactly the terms Phi^0 .. Phi^N.  Binary operations
// produce a result whose order is the smaller of the two operand orders.
class SeriesPhi {
 public:
  // Zero series of the given order.
  explicit SeriesPhi(std::size_t order);
  // Throws std::invalid_argument unless coefficients.size() == order + 1.
  SeriesPhi(std::size_t order, std::vector<PolyX> coefficients);

  static SeriesPhi constant(std::size_t order, const PolyX& c);

  std::size_t order() const { return coefficients_.size() - 1; }
  // Throws std::out_of_range when power > order().
  const PolyX& coefficient(std::size_t power) const;
  std::span<const PolyX> coefficients() const { return coefficients_; }

  // Drops the terms above `order`.  Throws std::invalid_argument when
  // `order` exceeds the current order.
  SeriesPhi truncated(std::size_t order) const;

  SeriesPhi& operator+=(const SeriesPhi& other);
  SeriesPhi& operator-=(const SeriesPhi& other);
  SeriesPhi& operator*=(const SeriesPhi& other);
  SeriesPhi& operator*=(const PolyX& scalar);
  SeriesPhi& operator*=(const Rational& scalar);
  SeriesPhi& operator/=(const Rational& scalar);

  friend SeriesPhi operator+(SeriesPhi a, const SeriesPhi& b) { return a += b; }
  friend SeriesPhi operator-(SeriesPhi a, const SeriesPhi& b) { return a -= b; }
  friend SeriesPhi operator*(const SeriesPhi& a, const SeriesPhi& b);
  friend SeriesPhi operator*(SeriesPhi a, const PolyX& b) { return a *= b; }
  friend SeriesPhi operator*(const PolyX& a, SeriesPhi b) { return b *= a; }
  friend SeriesPhi operator*(SeriesPhi a, const Rational& b) { return a *= b; }
  friend SeriesPhi operator*(const Rational& a, SeriesPhi b) { return b *= a; }
  friend SeriesPhi operator/(SeriesPhi a, const Rational& b) { return a /= b; }
  SeriesPhi operator-() const;

  // Equal orders and equal coefficients.
  friend bool operator==(const SeriesPhi&, const SeriesPhi&) = default;

  // List of coefficient polynomials, Phi^0 first: "[[], [1/1], ...]".
  std::string to_string() const;

 private:
  std::vector<PolyX> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const SeriesPhi& f);

struct SeriesDifference {
  std::size_t phi_power;
  std::size_t x_power;
  friend bool operator==(const SeriesDifference&,
                         const SeriesDifference&) = default;
};

// First (Phi power, X power) at which the series differ through the smaller
// of the two orders, or nullopt when they agree there.
std::optional<SeriesDifference> first_difference(const SeriesPhi& a,
                                                 const SeriesPhi& b);

}  // namespace partid
