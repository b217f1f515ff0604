#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partid {

// Families of checks a sweep can run.  Declaration order is the order used
// when echoing a configuration.
enum class CheckKind {
  kMain,
  kRewrite,
  kTransform,
  kChu,
  kReduced,
  kGenfunc,
  kPbinOracle,
};

std::string_view to_string(CheckKind kind);
std::optional<CheckKind> parse_check_kind(std::string_view name);
std::vector<CheckKind> all_check_kinds();

enum class ReportFormat { kText, kJson };

std::string_view to_string(ReportFormat format);
std::optional<ReportFormat> parse_report_format(std::string_view name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
  int max_n = 12;
  int s_lo = 1;
  int s_hi = 6;
  std::vector<CheckKind> checks = all_check_kinds();
  int series_order = 16;
  int oracle_cap = 16;
  ReportFormat format = ReportFormat::kText;
  // Worker threads; 0 selects the hardware concurrency.
  int jobs = 0;

  // Throws ConfigError describing the first violated constraint.
  void validate() const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

// "lo..hi" (inclusive) or a single integer.  Throws ConfigError.
std::pair<int, int> parse_s_range(std::string_view text);

// Comma-separated check names; duplicates are dropped and the result is in
// CheckKind order.  "all" selects every check.  Throws ConfigError.
std::vector<CheckKind> parse_checks(std::string_view text);

// A positive integer or "auto" (returned as 0).  Throws ConfigError.
int parse_jobs(std::string_view text);

}  // namespace partid
