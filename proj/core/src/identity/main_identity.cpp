#include "partid/identity/main_identity.hpp"

#include <vector>

#include "compare.hpp"
#include "partid/comb/partition.hpp"
#include "partid/comb/pbin.hpp"
#include "partid/comb/statistics.hpp"

namespace partid {
namespace {

ParamList main_params(const MainParams& p) {
  return {{"n", long{p.n}}, {"r", long{p.r}}, {"s", long{p.s}}};
}

}  // namespace

PolyX lhs_main(const MainParams& p) {
  std::vector<Rational> coefficients(static_cast<std::size_t>(p.n));
  for (const Partition& mu : partitions_of(p.n)) {
    const BigInt selections = pbin(mu, p.r);
    if (selections == 0) continue;
    Rational rising_sum;
    for (int part : mu.parts()) rising_sum += pochhammer(Rational(part), p.s);
    coefficients[mu.length() - 1] +=
        Rational(selections, z_mu(mu)) * rising_sum;
  }
  return PolyX(std::move(coefficients));
}

PolyX rhs_main(const MainParams& p) {
  const Rational scale =
      Rational(factorial(p.s - 1) * gen_binomial(p.n + p.s - 1, p.n - p.r));
  const auto r = static_cast<std::size_t>(p.r);
  return scale *
         (poly_binomial(p.r + p.s - 1, r) - poly_binomial(p.r - 1, r));
}

CheckResult verify_main(const MainParams& p) { return verify_main(p, rhs_main); }

CheckResult verify_main(const MainParams& p, const MainSide& rhs) {
  const PolyX left = lhs_main(p);
  const PolyX right = rhs(p);
  CheckResult result = detail::compare_exact("main", main_params(p), left, right);
  if (left.degree().value_or(0) > static_cast<std::size_t>(p.n - 1)) {
    detail::fail_with(result, "degree bound: lhs degree " +
                                  std::to_string(*left.degree()) +
                                  " exceeds n-1 = " + std::to_string(p.n - 1));
  }
  if (right.degree().value_or(0) > static_cast<std::size_t>(p.r - 1)) {
    detail::fail_with(result, "degree bound: rhs degree " +
                                  std::to_string(*right.degree()) +
                                  " exceeds r-1 = " + std::to_string(p.r - 1));
  }
  return result;
}

PolyX lhs_composition_form(const MainParams& p) {
  std::vector<Rational> coefficients(static_cast<std::size_t>(p.n));
  for (int l = 1; l <= p.n; ++l) {
    Rational sum_over_l;
    for_each_composition(p.n, l, [&](std::span<const int> mu) {
      const BigInt selections = pbin_expanded(mu, p.r);
      if (selections == 0) return;
      BigInt row_sum = 0;
      BigInt row_product = 1;
      for (int part : mu) {
        row_sum += gen_binomial(part + p.s - 1, p.s);
        row_product *= part;
      }
      sum_over_l += Rational(selections * row_sum, row_product);
    });
    coefficients[static_cast<std::size_t>(l - 1)] =
        sum_over_l / Rational(factorial(l));
  }
  return Rational(factorial(p.s)) * PolyX(std::move(coefficients));
}

CheckResult verify_rewrite(const MainParams& p) {
  return detail::compare_exact("rewrite", main_params(p),
                               lhs_composition_form(p), lhs_main(p));
}

}  // namespace partid
