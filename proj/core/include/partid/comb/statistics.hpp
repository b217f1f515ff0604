#pragma once

#include <cstdint>

#include "partid/comb/partition.hpp"
#include "partid/exact/rational.hpp"

namespace partid {

// n!.  Throws std::invalid_argument when n < 0.
BigInt factorial(std::int64_t n);

// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle
// type mu.  z of the empty partition is 1.
BigInt z_mu(const Partition& mu);

// C(mu) = l(mu)! / prod_i m_i!, the number of distinct orderings of the parts.
BigInt composition_count(const Partition& mu);

// Rising factorial (a)_n = a (a + 1) ... (a + n - 1); (a)_0 = 1.
Rational pochhammer(const Rational& a, std::int64_t n);

// Generalized binomial binom(a, k) = a (a - 1) ... (a - k + 1) / k! for any
// integer a; zero when k < 0.  The result is always an integer; each partial
// quotient is checked for exact divisibility.
BigInt gen_binomial(std::int64_t a, std::int64_t k);

}  // namespace partid
