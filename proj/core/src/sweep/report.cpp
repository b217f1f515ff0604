#include "partid/sweep/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace partid {
namespace {

using Json = nlohmann::ordered_json;

std::string join_checks(const std::vector<CheckKind>& checks) {
  std::string out;
  for (CheckKind kind : checks) {
    if (!out.empty()) out += ",";
    out += to_string(kind);
  }
  return out;
}

std::string render_params(const ParamList& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += " ";
    out += name + "=" + render_param(value);
  }
  return out;
}

Json config_to_json(const SweepConfig& config) {
  Json checks = Json::array();
  for (CheckKind kind : config.checks) checks.push_back(to_string(kind));
  return Json{{"max_n", config.max_n},
              {"s_range", Json::array({config.s_lo, config.s_hi})},
              {"checks", std::move(checks)},
              {"series_order", config.series_order},
              {"oracle_cap", config.oracle_cap},
              {"format", to_string(config.format)}};
}

Json result_to_json(const CheckResult& result) {
  Json params = Json::object();
  for (const auto& [name, value] : result.params) {
    if (const auto* scalar = std::get_if<long>(&value)) {
      params[name] = *scalar;
    } else {
      params[name] = std::get<std::vector<long>>(value);
    }
  }
  return Json{{"check", result.check},
              {"params", std::move(params)},
              {"status", to_string(result.status)},
              {"lhs", result.lhs},
              {"rhs", result.rhs},
              {"witness", result.witness ? Json(*result.witness) : Json()}};
}

std::string render_json(const RunReport& report) {
  Json results = Json::array();
  for (const auto& result : report.results) {
    results.push_back(result_to_json(result));
  }
  const Json document{
      {"config", config_to_json(report.config)},
      {"results", std::move(results)},
      {"totals", {{"pass", report.passed}, {"fail", report.failed}}}};
  return document.dump(2) + "\n";
}

void render_table(std::ostringstream& out,
                  const std::vector<std::array<std::string, 6>>& rows) {
  std::array<std::size_t, 6> widths{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
}

std::string render_text(const RunReport& report) {
  const SweepConfig& c = report.config;
  std::ostringstream out;
  out << "partid verify report\n"
      << "config: max_n=" << c.max_n << " s=" << c.s_lo << ".." << c.s_hi
      << " checks=" << join_checks(c.checks)
      << " series_order=" << c.series_order << " oracle_cap=" << c.oracle_cap
      << "\n";

  const auto& results = report.results;
  for (auto begin = results.begin(); begin != results.end();) {
    const auto end = std::find_if(begin, results.end(), [&](const auto& r) {
      return r.check != begin->check;
    });
    std::vector<std::array<std::string, 6>> rows{
        {"check", "params", "status", "lhs", "rhs", "witness"}};
    for (auto it = begin; it != end; ++it) {
      rows.push_back({it->check, render_params(it->params),
                      std::string(to_string(it->status)), it->lhs, it->rhs,
                      it->witness.value_or("-")});
    }
    out << "\n";
    render_table(out, rows);
    begin = end;
  }
  out << "\ntotals: pass=" << report.passed << " fail=" << report.failed
      << "\n";
  return out.str();
}

SweepConfig config_from_json(const Json& j) {
  SweepConfig config;
  config.max_n = j.at("max_n").get<int>();
  config.s_lo = j.at("s_range").at(0).get<int>();
  config.s_hi = j.at("s_range").at(1).get<int>();
  config.checks.clear();
  for (const auto& name : j.at("checks")) {
    const auto kind = parse_check_kind(name.get<std::string>());
    if (!kind) throw std::invalid_argument("report: unknown check name");
    config.checks.push_back(*kind);
  }
  config.series_order = j.at("series_order").get<int>();
  config.oracle_cap = j.at("oracle_cap").get<int>();
  const auto format = parse_report_format(j.at("format").get<std::string>());
  if (!format) throw std::invalid_argument("report: unknown format");
  config.format = *format;
  return config;
}

CheckResult result_from_json(const Json& j) {
  CheckResult result;
  result.check = j.at("check").get<std::string>();
  for (const auto& [name, value] : j.at("params").items()) {
    if (value.is_array()) {
      result.params.emplace_back(name, value.get<std::vector<long>>());
    } else {
      result.params.emplace_back(name, value.get<long>());
    }
  }
  const auto status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") {
    throw std::invalid_argument("report: unknown status '" + status + "'");
  }
  result.status = status == "pass" ? CheckStatus::kPass : CheckStatus::kFail;
  result.lhs = j.at("lhs").get<std::string>();
  result.rhs = j.at("rhs").get<std::string>();
  if (!j.at("witness").is_null()) {
    result.witness = j.at("witness").get<std::string>();
  }
  return result;
}

}  // namespace

std::string render_report(const RunReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? render_json(report)
                                       : render_text(report);
}

std::string render_trailer(const RunReport& report) {
  std::ostringstream out;
  out << "--- non-canonical trailer ---\n"
      << "duration_ms: " << report.duration.count() << "\n"
      << "workers: " << report.workers << "\n";
  return out.str();
}

RunReport parse_report_json(std::string_view json) {
  try {
    const Json document = Json::parse(json);
    RunReport report;
    report.config = config_from_json(document.at("config"));
    for (const auto& entry : document.at("results")) {
      report.results.push_back(result_from_json(entry));
    }
    report.passed = document.at("totals").at("pass").get<std::size_t>();
    report.failed = document.at("totals").at("fail").get<std::size_t>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

}  // namespace partid
