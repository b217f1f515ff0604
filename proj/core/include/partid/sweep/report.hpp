#pragma once

#include <string>
#include <string_view>

#include "partid/sweep/config.hpp"
#include "partid/sweep/sweep.hpp"

namespace partid {

// Canonical report section.  Byte-identical for identical configs: no
// timing or worker information appears here.
//
// text: a config line, then one aligned table per check name with one row
//       per cell, then a totals line.
// json: { "config": {...}, "results": [ { "check", "params", "status",
//       "lhs", "rhs", "witness" } ], "totals": { "pass", "fail" } }
//       pretty-printed with two-space indentation and a trailing newline.
std::string render_report(const RunReport& report, ReportFormat format);

// Non-canonical trailer (wall-clock duration, worker count), marked as such.
std::string render_trailer(const RunReport& report);

// Inverse of render_report(..., kJson) for the canonical section.  Duration,
// worker count and config.jobs are not recoverable and come back as zero,
// one and zero (auto).  Throws
// std::invalid_argument on malformed input.
RunReport parse_report_json(std::string_view json);

}  // namespace partid
