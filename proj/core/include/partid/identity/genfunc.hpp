#pragma once

#include <cstddef>

#include "partid/exact/series_phi.hpp"
#include "partid/identity/check_result.hpp"

namespace partid {

// Generating function of reduced_lhs(r, s) over r, built from series
// arithmetic only:
//   sum_{l=1..order} X^{l-1}/l! * sum_{i=1..l} L^{l-1} * G
// with L = log(1/(1-Phi)) and G = ((1-Phi)^{-s} - 1)/s.
SeriesPhi genfunc_chain_lhs(int s, std::size_t order);

// ((1-Phi)^{-X} (1-Phi)^{-s} - (1-Phi)^{-X}) / s.
SeriesPhi genfunc_chain_rhs(int s, std::size_t order);

// genfunc_chain_lhs == genfunc_chain_rhs through Phi^order, and for every
// 1 <= r <= order the Phi^r coefficients equal reduced_lhs(r, s) and
// reduced_rhs(r, s) respectively.  Throws std::invalid_argument when s < 1.
CheckResult verify_genfunc_chain(int s, std::size_t order);

// sum_{k=1..order} binom(k+s-1, s)/k Phi^k == ((1-Phi)^{-s} - 1)/s.
CheckResult verify_single_row_genfunc(int s, std::size_t order);

// exp(X log(1/(1-Phi))) == (1-Phi)^{-X}, and exp(log(1/(1-Phi))) ==
// (1-Phi)^{-1}, through Phi^order.
CheckResult verify_exp_log(std::size_t order);

}  // namespace partid
