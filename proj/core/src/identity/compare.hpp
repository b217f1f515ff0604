#pragma once

#include <string>
#include <utility>

#include "partid/exact/poly_x.hpp"
#include "partid/exact/rational.hpp"
#include "partid/exact/series_phi.hpp"
#include "partid/identity/check_result.hpp"

namespace partid::detail {

inline CheckResult compare_exact(std::string check, ParamList params,
                                 const PolyX& lhs, const PolyX& rhs) {
  CheckResult result{std::move(check), std::move(params), CheckStatus::kPass,
                     lhs.to_string(), rhs.to_string(), std::nullopt};
  if (auto k = first_difference(lhs, rhs)) {
    result.status = CheckStatus::kFail;
    result.witness = "X^" + std::to_string(*k) + ": lhs " +
                     lhs.coefficient(*k).to_string() + " != rhs " +
                     rhs.coefficient(*k).to_string();
  }
  return result;
}

inline CheckResult compare_exact(std::string check, ParamList params,
                                 const Rational& lhs, const Rational& rhs) {
  CheckResult result{std::move(check), std::move(params), CheckStatus::kPass,
                     lhs.to_string(), rhs.to_string(), std::nullopt};
  if (lhs != rhs) {
    result.status = CheckStatus::kFail;
    result.witness = "value: lhs " + lhs.to_string() + " != rhs " +
                     rhs.to_string();
  }
  return result;
}

inline CheckResult compare_exact(std::string check, ParamList params,
                                 const SeriesPhi& lhs, const SeriesPhi& rhs) {
  CheckResult result{std::move(check), std::move(params), CheckStatus::kPass,
                     lhs.to_string(), rhs.to_string(), std::nullopt};
  if (lhs.order() != rhs.order()) {
    result.status = CheckStatus::kFail;
    result.witness = "order: lhs " + std::to_string(lhs.order()) +
                     " != rhs " + std::to_string(rhs.order());
  } else if (auto at = first_difference(lhs, rhs)) {
    result.status = CheckStatus::kFail;
    result.witness =
        "Phi^" + std::to_string(at->phi_power) + " X^" +
        std::to_string(at->x_power) + ": lhs " +
        lhs.coefficient(at->phi_power).coefficient(at->x_power).to_string() +
        " != rhs " +
        rhs.coefficient(at->phi_power).coefficient(at->x_power).to_string();
  }
  return result;
}

inline void fail_with(CheckResult& result, std::string witness) {
  if (result.passed()) {
    result.status = CheckStatus::kFail;
    result.witness = std::move(witness);
  }
}

}  // namespace partid::detail
