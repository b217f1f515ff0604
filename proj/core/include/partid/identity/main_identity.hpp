#pragma once

#include <functional>

#include "partid/exact/poly_x.hpp"
#include "partid/identity/check_result.hpp"

namespace partid {

// Sum over partitions mu of n of
//   pbin(mu, r) * X^{l(mu) - 1} / z_mu * sum_i (mu_i)_s,
// a polynomial of degree at most n - 1.
PolyX lhs_main(const MainParams& p);

// (s - 1)! * binom(n + s - 1, n - r)
//   * [binom(X + r + s - 1, r) - binom(X + r - 1, r)],
// a polynomial of degree at most r - 1 (the X^r terms cancel).
PolyX rhs_main(const MainParams& p);

using MainSide = std::function<PolyX(const MainParams&)>;

// Compares lhs_main and rhs_main coefficient-wise.  Also fails when either
// side exceeds its degree bound, even if the two sides agree.
CheckResult verify_main(const MainParams& p);

// Same check against a substitute right-hand side; used for negative
// controls that must be caught by the comparison.
CheckResult verify_main(const MainParams& p, const MainSide& rhs);

// The left-hand side rewritten as a sum over compositions (mu_1..mu_l) of n:
//   s! * sum_l sum_mu X^{l-1} / (l! mu_1...mu_l) * pbin(mu, r)
//        * sum_i binom(mu_i + s - 1, s),
// with pbin taken in its composition-expanded form.  Shares no code path
// with lhs_main beyond the exact arithmetic.
PolyX lhs_composition_form(const MainParams& p);

// lhs_composition_form(p) == lhs_main(p).
CheckResult verify_rewrite(const MainParams& p);

}  // namespace partid
