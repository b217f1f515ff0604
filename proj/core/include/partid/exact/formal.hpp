#pragma once

#include <cstddef>

#include "partid/exact/series_phi.hpp"

namespace partid {

// log(1 / (1 - Phi)) = sum_{k >= 1} Phi^k / k, truncated at `order`.
SeriesPhi series_log_inv(std::size_t order);

// exp(f) = sum_m f^m / m!, truncated at f.order().  Throws std::domain_error
// unless the constant term of `f` is the zero polynomial.
SeriesPhi series_exp(const SeriesPhi& f);

// (1 - Phi)^{-s} = sum_k binom(s + k - 1, k) Phi^k for an integer s >= 1.
// Throws std::invalid_argument when s < 1.
SeriesPhi binomial_power_int(long s, std::size_t order);

// (1 - Phi)^{-X} = sum_k binom(X + k - 1, k) Phi^k with polynomial
// coefficients in X.
SeriesPhi binomial_power_sym(std::size_t order);

}  // namespace partid
