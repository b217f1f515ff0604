#pragma once

#include "partid/comb/partition.hpp"
#include "partid/exact/poly_x.hpp"
#include "partid/identity/check_result.hpp"

namespace partid {

// Pointwise binomial transformation, with generalized binomials:
//   binom(m+s-1, m-1) binom(m-1, k-1)
//     == (-1)^{k-1} binom(-s-1, k-1) binom(m+s-1, k+s-1).
// Throws std::invalid_argument unless m, k, s >= 1.
CheckResult verify_binomial_transform(int m, int k, int s);

// Collapsed l-fold Chu-Vandermonde sum, with l = length(rcomp) and
// r = total(rcomp).  The left side is enumerated over every composition
// (mu_1..mu_l) of n:
//   sum_mu prod_j binom(mu_j-1, r_j-1) * binom(mu_i+s-1, s)
//     == (-1)^{r_i-1} binom(-s-1, r_i-1) binom(n+s-1, r+s-1).
// `row` is 1-based.  Throws std::invalid_argument unless rcomp is nonempty,
// 1 <= row <= l, n >= l and s >= 1.
CheckResult verify_chu_vandermonde(int n, const Composition& rcomp, int row,
                                   int s);

// sum_{l=1..r} X^{l-1}/l! * sum over compositions (r_1..r_l) of r of
//   1/(r_1...r_l) * sum_i (-1)^{r_i-1} binom(-s-1, r_i-1).
// Compositions of r have at most r parts, so l stops at r.
PolyX reduced_lhs(int r, int s);

// (1/s) [binom(X+r+s-1, r) - binom(X+r-1, r)], of degree exactly r - 1.
PolyX reduced_rhs(int r, int s);

// reduced_lhs(r, s) == reduced_rhs(r, s).
CheckResult verify_reduced(int r, int s);

}  // namespace partid
