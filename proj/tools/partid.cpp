// partid: runs parameter sweeps over the partition-identity verifiers.
//
//   partid verify [--max-n N] [--s LO..HI] [--checks a,b,...]
//                 [--series-order N] [--oracle-cap N] [--format text|json]
//                 [--jobs N|auto] [--output PATH]
//
// Exit codes: 0 every check passed, 1 at least one failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "partid/sweep/config.hpp"
#include "partid/sweep/report.hpp"
#include "partid/sweep/sweep.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of a partition identity and its proof steps"};
  app.require_subcommand(1);

  partid::SweepConfig config;
  std::string s_range = "1..6";
  std::string checks = "all";
  std::string format = "text";
  std::string jobs = "auto";
  std::string output;

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("--max-n", config.max_n, "Largest n (and r, m, k) swept")
      ->capture_default_str();
  verify->add_option("--s", s_range, "Inclusive s range, LO..HI or a single value")
      ->capture_default_str();
  verify
      ->add_option("--checks", checks,
                   "Comma list of main,rewrite,transform,chu,reduced,genfunc,"
                   "pbin-oracle, or all")
      ->capture_default_str();
  verify->add_option("--series-order", config.series_order,
                     "Truncation order for generating-function checks")
      ->capture_default_str();
  verify->add_option("--oracle-cap", config.oracle_cap,
                     "Largest diagram the brute-force pbin oracle accepts")
      ->capture_default_str();
  verify->add_option("--format", format, "text or json")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads, or auto")
      ->capture_default_str();
  verify->add_option("--output", output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  partid::RunReport report;
  try {
    std::tie(config.s_lo, config.s_hi) = partid::parse_s_range(s_range);
    config.checks = partid::parse_checks(checks);
    config.jobs = partid::parse_jobs(jobs);
    const auto parsed_format = partid::parse_report_format(format);
    if (!parsed_format) {
      throw partid::ConfigError("unknown format '" + format + "'");
    }
    config.format = *parsed_format;
    config.validate();
    report = partid::run_sweep(config);
  } catch (const partid::ConfigError& e) {
    std::cerr << "partid: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string body = partid::render_report(report, config.format);
  const std::string trailer = partid::render_trailer(report);
  std::ostream* sink = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      std::cerr << "partid: cannot open " << output << "\n";
      return kUsageError;
    }
    sink = &file;
  }
  *sink << body;
  // JSON documents stay pure; the trailer goes to stderr instead.
  if (config.format == partid::ReportFormat::kText) {
    *sink << trailer;
  } else {
    std::cerr << trailer;
  }
  sink->flush();
  if (!*sink) {
    std::cerr << "partid: failed writing report\n";
    return kUsageError;
  }
  return partid::exit_code(report);
}
