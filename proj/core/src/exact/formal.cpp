#include "partid/exact/formal.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace partid {

SeriesPhi series_log_inv(std::size_t order) {
  std::vector<PolyX> coefficients(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    coefficients[k] =
        PolyX::constant(Rational(1, static_cast<long>(k)));
  }
  return SeriesPhi(order, std::move(coefficients));
}

SeriesPhi series_exp(const SeriesPhi& f) {
  if (!f.coefficient(0).is_zero()) {
    throw std::domain_error("series_exp: constant term must vanish");
  }
  const std::size_t order = f.order();
  SeriesPhi result = SeriesPhi::constant(order, PolyX::constant(1));
  // f^m has no terms below Phi^m, so m <= order suffices.
  SeriesPhi term = SeriesPhi::constant(order, PolyX::constant(1));
  for (std::size_t m = 1; m <= order; ++m) {
    term *= f;
    term /= Rational(static_cast<long>(m));
    result += term;
  }
  return result;
}

SeriesPhi binomial_power_int(long s, std::size_t order) {
  if (s < 1) {
    throw std::invalid_argument("binomial_power_int: s must be >= 1");
  }
  std::vector<PolyX> coefficients(order + 1);
  // binom(s + k - 1, k) = binom(s + k - 2, k - 1) * (s + k - 1) / k
  BigInt binom = 1;
  coefficients[0] = PolyX::constant(1);
  for (std::size_t k = 1; k <= order; ++k) {
    binom *= s + static_cast<long>(k) - 1;
    binom /= static_cast<unsigned long>(k);
    coefficients[k] = PolyX::constant(Rational(binom));
  }
  return SeriesPhi(order, std::move(coefficients));
}

SeriesPhi binomial_power_sym(std::size_t order) {
  std::vector<PolyX> coefficients(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    coefficients[k] = poly_binomial(static_cast<long>(k) - 1, k);
  }
  return SeriesPhi(order, std::move(coefficients));
}

}  // namespace partid
