#include "partid/comb/statistics.hpp"

#include <map>
#include <stdexcept>

namespace partid {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt z_mu(const Partition& mu) {
  std::map<int, long> multiplicities;
  for (int part : mu.parts()) ++multiplicities[part];
  BigInt result = 1;
  for (const auto& [part, count] : multiplicities) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(count));
    result *= power * factorial(count);
  }
  return result;
}

BigInt composition_count(const Partition& mu) {
  std::map<int, long> multiplicities;
  for (int part : mu.parts()) ++multiplicities[part];
  BigInt result = factorial(static_cast<std::int64_t>(mu.length()));
  for (const auto& [part, count] : multiplicities) {
    result /= factorial(count);
  }
  return result;
}

Rational pochhammer(const Rational& a, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  Rational result = 1;
  for (std::int64_t j = 0; j < n; ++j) result *= a + Rational(j);
  return result;
}

BigInt gen_binomial(std::int64_t a, std::int64_t k) {
  if (k < 0) return 0;
  // After step j the accumulator is binom(a, j + 1): a product of j + 1
  // consecutive integers divided by (j + 1)!.
  BigInt result = 1;
  for (std::int64_t j = 0; j < k; ++j) {
    result *= static_cast<long>(a - j);
    const auto divisor = static_cast<unsigned long>(j + 1);
    if (!mpz_divisible_ui_p(result.get_mpz_t(), divisor)) {
      throw std::logic_error("gen_binomial: inexact partial quotient");
    }
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), divisor);
  }
  return result;
}

}  // namespace partid
