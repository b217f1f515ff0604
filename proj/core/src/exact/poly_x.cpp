#include "partid/exact/poly_x.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace partid {

PolyX::PolyX(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

PolyX PolyX::constant(const Rational& c) { return PolyX({c}); }

PolyX PolyX::monomial(std::size_t power, const Rational& c) {
  std::vector<Rational> coefficients(power + 1);
  coefficients[power] = c;
  return PolyX(std::move(coefficients));
}

PolyX PolyX::x() { return monomial(1); }

Rational PolyX::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational();
}

std::optional<std::size_t> PolyX::degree() const {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.size() - 1;
}

Rational PolyX::evaluate(const Rational& at) const {
  Rational result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= at;
    result += *it;
  }
  return result;
}

PolyX PolyX::shifted(const Rational& shift) const {
  // Horner in the polynomial ring: ((c_d)(X+a) + c_{d-1})(X+a) + ...
  const PolyX linear({shift, Rational(1)});
  PolyX result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= linear;
    result += constant(*it);
  }
  return result;
}

PolyX& PolyX::operator+=(const PolyX& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  trim();
  return *this;
}

PolyX& PolyX::operator-=(const PolyX& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  trim();
  return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
  if (a.is_zero() || b.is_zero()) return PolyX();
  std::vector<Rational> product(a.coefficients_.size() +
                                b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return PolyX(std::move(product));
}

PolyX& PolyX::operator*=(const PolyX& other) {
  *this = *this * other;
  return *this;
}

PolyX& PolyX::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

PolyX& PolyX::operator/=(const Rational& scalar) {
  if (scalar.is_zero()) {
    throw std::domain_error("PolyX: division by zero");
  }
  for (auto& c : coefficients_) c /= scalar;
  return *this;
}

PolyX PolyX::operator-() const {
  PolyX result = *this;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

std::string PolyX::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (k > 0) out += ", ";
    out += coefficients_[k].to_string();
  }
  out += "]";
  return out;
}

void PolyX::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

std::ostream& operator<<(std::ostream& os, const PolyX& p) {
  return os << p.to_string();
}

std::optional<std::size_t> first_difference(const PolyX& a, const PolyX& b) {
  const std::size_t n =
      std::max(a.coefficients().size(), b.coefficients().size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) return k;
  }
  return std::nullopt;
}

PolyX poly_binomial(long shift, std::size_t k) {
  PolyX result = PolyX::constant(1);
  for (std::size_t j = 0; j < k; ++j) {
    const long offset = shift - static_cast<long>(j);
    result *= PolyX({Rational(offset), Rational(1)});
    result /= Rational(static_cast<long>(j + 1));
  }
  return result;
}

}  // namespace partid
