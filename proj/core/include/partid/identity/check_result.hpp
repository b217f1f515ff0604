#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace partid {

// (n, r, s) of the main identity.  All three are >= 1.
struct MainParams {
  int n;
  int r;
  int s;

  // Throws std::invalid_argument when any field is < 1.
  MainParams(int n, int r, int s);

  friend bool operator==(const MainParams&, const MainParams&) = default;
};

// A parameter value in a report: a scalar or an integer sequence (a
// composition or partition).
using ParamValue = std::variant<long, std::vector<long>>;

// Parameters in the order they were recorded; the order is part of the
// canonical report layout.
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

enum class CheckStatus { kPass, kFail };

std::string_view to_string(CheckStatus status);

// Outcome of one verification at one parameter point.  `lhs` and `rhs` hold
// exact renderings of the two compared objects; status is pass iff the two
// objects are identical.  `witness` locates the first disagreement.
struct CheckResult {
  std::string check;
  ParamList params;
  CheckStatus status = CheckStatus::kPass;
  std::string lhs;
  std::string rhs;
  std::optional<std::string> witness;

  bool passed() const { return status == CheckStatus::kPass; }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Canonical report order: check name, then parameter tuple compared
// lexicographically (sequences compare element-wise).
bool canonical_less(const CheckResult& a, const CheckResult& b);

std::string render_param(const ParamValue& value);

}  // namespace partid
