#include "partid/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace partid {

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational result;
  result.value_ = -value_;
  return result;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace partid
