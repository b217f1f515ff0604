#include "partid/identity/check_result.hpp"

#include <algorithm>
#include <stdexcept>

namespace partid {

MainParams::MainParams(int n, int r, int s) : n(n), r(r), s(s) {
  if (n < 1 || r < 1 || s < 1) {
    throw std::invalid_argument("MainParams: n, r and s must all be >= 1");
  }
}

std::string_view to_string(CheckStatus status) {
  return status == CheckStatus::kPass ? "pass" : "fail";
}

bool canonical_less(const CheckResult& a, const CheckResult& b) {
  if (a.check != b.check) return a.check < b.check;
  return std::lexicographical_compare(
      a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
      [](const auto& x, const auto& y) { return x.second < y.second; });
}

std::string render_param(const ParamValue& value) {
  if (const auto* scalar = std::get_if<long>(&value)) {
    return std::to_string(*scalar);
  }
  const auto& sequence = std::get<std::vector<long>>(value);
  std::string out = "[";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(sequence[i]);
  }
  out += "]";
  return out;
}

}  // namespace partid
