#include "partid/identity/genfunc.hpp"

#include <stdexcept>
#include <vector>

#include "compare.hpp"
#include "partid/comb/statistics.hpp"
#include "partid/exact/formal.hpp"
#include "partid/identity/proof_steps.hpp"

namespace partid {
namespace {

void require_s(int s) {
  if (s < 1) throw std::invalid_argument("generating-function checks need s >= 1");
}

ParamList series_params(int s, std::size_t order) {
  return {{"s", long{s}}, {"order", static_cast<long>(order)}};
}

// ((1-Phi)^{-s} - 1) / s
SeriesPhi single_row_closed_form(int s, std::size_t order) {
  return (binomial_power_int(s, order) -
          SeriesPhi::constant(order, PolyX::constant(1))) /
         Rational(s);
}

}  // namespace

SeriesPhi genfunc_chain_lhs(int s, std::size_t order) {
  require_s(s);
  const SeriesPhi log_inv = series_log_inv(order);
  const SeriesPhi row = single_row_closed_form(s, order);

  SeriesPhi total(order);
  SeriesPhi log_power = SeriesPhi::constant(order, PolyX::constant(1));
  // L^{l-1} G starts at Phi^l, so terms with l > order vanish.
  for (std::size_t l = 1; l <= order; ++l) {
    const SeriesPhi term = log_power * row;
    SeriesPhi row_sum(order);
    for (std::size_t i = 1; i <= l; ++i) row_sum += term;
    total += row_sum *
             PolyX::monomial(l - 1, Rational(1) /
                                        Rational(factorial(static_cast<long>(l))));
    log_power *= log_inv;
  }
  return total;
}

SeriesPhi genfunc_chain_rhs(int s, std::size_t order) {
  require_s(s);
  const SeriesPhi symbolic = binomial_power_sym(order);
  return (symbolic * binomial_power_int(s, order) - symbolic) / Rational(s);
}

CheckResult verify_genfunc_chain(int s, std::size_t order) {
  const SeriesPhi lhs = genfunc_chain_lhs(s, order);
  const SeriesPhi rhs = genfunc_chain_rhs(s, order);
  CheckResult result = detail::compare_exact("genfunc-chain",
                                             series_params(s, order), lhs, rhs);
  for (std::size_t r = 1; r <= order && result.passed(); ++r) {
    const int ri = static_cast<int>(r);
    if (lhs.coefficient(r) != reduced_lhs(ri, s)) {
      detail::fail_with(result, "Phi^" + std::to_string(r) +
                                    ": lhs coefficient != reduced_lhs");
    } else if (rhs.coefficient(r) != reduced_rhs(ri, s)) {
      detail::fail_with(result, "Phi^" + std::to_string(r) +
                                    ": rhs coefficient != reduced_rhs");
    }
  }
  return result;
}

CheckResult verify_single_row_genfunc(int s, std::size_t order) {
  require_s(s);
  std::vector<PolyX> coefficients(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    const long ki = static_cast<long>(k);
    coefficients[k] =
        PolyX::constant(Rational(gen_binomial(ki + s - 1, s), BigInt(ki)));
  }
  return detail::compare_exact("genfunc-single-row", series_params(s, order),
                               SeriesPhi(order, std::move(coefficients)),
                               single_row_closed_form(s, order));
}

CheckResult verify_exp_log(std::size_t order) {
  const SeriesPhi log_inv = series_log_inv(order);
  CheckResult result = detail::compare_exact(
      "genfunc-exp", {{"order", static_cast<long>(order)}},
      series_exp(PolyX::x() * log_inv), binomial_power_sym(order));
  if (auto at = first_difference(series_exp(log_inv),
                                 binomial_power_int(1, order))) {
    detail::fail_with(result, "exp(log(1/(1-Phi))) differs from "
                              "(1-Phi)^{-1} at Phi^" +
                                  std::to_string(at->phi_power));
  }
  return result;
}

}  // namespace partid
