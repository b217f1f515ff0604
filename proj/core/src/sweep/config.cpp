#include "partid/sweep/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace partid {
namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 7> kCheckNames{{
    {CheckKind::kMain, "main"},
    {CheckKind::kRewrite, "rewrite"},
    {CheckKind::kTransform, "transform"},
    {CheckKind::kChu, "chu"},
    {CheckKind::kReduced, "reduced"},
    {CheckKind::kGenfunc, "genfunc"},
    {CheckKind::kPbinOracle, "pbin-oracle"},
}};

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("invalid " + std::string(what) + ": '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(CheckKind kind) {
  for (const auto& [k, name] : kCheckNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check_kind(std::string_view name) {
  for (const auto& [k, n] : kCheckNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<CheckKind> all_check_kinds() {
  std::vector<CheckKind> kinds;
  for (const auto& entry : kCheckNames) kinds.push_back(entry.first);
  return kinds;
}

std::string_view to_string(ReportFormat format) {
  return format == ReportFormat::kJson ? "json" : "text";
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (max_n < 1) throw ConfigError("max_n must be >= 1");
  if (s_lo < 1) throw ConfigError("s range must start at >= 1");
  if (s_hi < s_lo) throw ConfigError("s range is empty");
  if (checks.empty()) throw ConfigError("no checks selected");
  if (series_order < 0) throw ConfigError("series_order must be >= 0");
  if (oracle_cap < 1 || oracle_cap > 62) {
    throw ConfigError("oracle_cap must lie in 1..62");
  }
  if (jobs < 0) throw ConfigError("jobs must be >= 0");
}

std::pair<int, int> parse_s_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int s = parse_int(text, "s value");
    return {s, s};
  }
  return {parse_int(text.substr(0, dots), "s range start"),
          parse_int(text.substr(dots + 2), "s range end")};
}

std::vector<CheckKind> parse_checks(std::string_view text) {
  std::vector<CheckKind> kinds;
  while (true) {
    const auto comma = text.find(',');
    const auto name = text.substr(0, comma);
    if (name == "all") {
      return all_check_kinds();
    }
    const auto kind = parse_check_kind(name);
    if (!kind) throw ConfigError("unknown check: '" + std::string(name) + "'");
    kinds.push_back(*kind);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  return kinds;
}

int parse_jobs(std::string_view text) {
  if (text == "auto") return 0;
  const int jobs = parse_int(text, "job count");
  if (jobs < 1) throw ConfigError("job count must be >= 1 or 'auto'");
  return jobs;
}

}  // namespace partid
