#include "partid/exact/series_phi.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace partid {

SeriesPhi::SeriesPhi(std::size_t order) : coefficients_(order + 1) {}

SeriesPhi::SeriesPhi(std::size_t order, std::vector<PolyX> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != order + 1) {
    throw std::invalid_argument(
        "SeriesPhi: coefficient count must be order + 1");
  }
}

SeriesPhi SeriesPhi::constant(std::size_t order, const PolyX& c) {
  SeriesPhi result(order);
  result.coefficients_[0] = c;
  return result;
}

const PolyX& SeriesPhi::coefficient(std::size_t power) const {
  if (power > order()) {
    throw std::out_of_range("SeriesPhi: power beyond truncation order");
  }
  return coefficients_[power];
}

SeriesPhi SeriesPhi::truncated(std::size_t new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("SeriesPhi: cannot raise truncation order");
  }
  return SeriesPhi(new_order,
                   std::vector<PolyX>(coefficients_.begin(),
                                      coefficients_.begin() + new_order + 1));
}

SeriesPhi& SeriesPhi::operator+=(const SeriesPhi& other) {
  coefficients_.resize(std::min(coefficients_.size(),
                                other.coefficients_.size()));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  return *this;
}

SeriesPhi& SeriesPhi::operator-=(const SeriesPhi& other) {
  coefficients_.resize(std::min(coefficients_.size(),
                                other.coefficients_.size()));
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  return *this;
}

SeriesPhi operator*(const SeriesPhi& a, const SeriesPhi& b) {
  const std::size_t order = std::min(a.order(), b.order());
  SeriesPhi result(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coefficients_[j].is_zero()) continue;
      result.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return result;
}

SeriesPhi& SeriesPhi::operator*=(const SeriesPhi& other) {
  *this = *this * other;
  return *this;
}

SeriesPhi& SeriesPhi::operator*=(const PolyX& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

SeriesPhi& SeriesPhi::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

SeriesPhi& SeriesPhi::operator/=(const Rational& scalar) {
  for (auto& c : coefficients_) c /= scalar;
  return *this;
}

SeriesPhi SeriesPhi::operator-() const {
  SeriesPhi result = *this;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

std::string SeriesPhi::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k > 0) out += ", ";
    out += coefficients_[k].to_string();
  }
  out += "]";
  return out;
}

std::ostream& operator<<(std::ostream& os, const SeriesPhi& f) {
  return os << f.to_string();
}

std::optional<SeriesDifference> first_difference(const SeriesPhi& a,
                                                 const SeriesPhi& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= order; ++k) {
    if (auto x_power = first_difference(a.coefficient(k), b.coefficient(k))) {
      return SeriesDifference{k, *x_power};
    }
  }
  return std::nullopt;
}

}  // namespace partid
