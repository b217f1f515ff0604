#pragma once

#include <chrono>
#include <vector>

#include "partid/identity/check_result.hpp"
#include "partid/identity/main_identity.hpp"
#include "partid/sweep/config.hpp"

namespace partid {

struct RunReport {
  SweepConfig config;
  // Canonical order (see canonical_less), independent of worker scheduling.
  std::vector<CheckResult> results;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Not part of the canonical report.
  std::chrono::milliseconds duration{0};
  int workers = 1;

  bool all_passed() const { return failed == 0; }
};

// Substitutions for negative-control runs.  Empty members mean the normal
// evaluator.
struct SweepHooks {
  MainSide main_rhs;
};

// One parameter point of one check family.  `values` holds the scalar
// parameters in check order (main: n, r, s; transform: m, k, s; chu: n, i, s;
// reduced: r, s; genfunc: s, or nothing for the exp/log cell; pbin-oracle: r)
// and `sequence` holds rcomp for chu and mu for pbin-oracle.
struct SweepCell {
  CheckKind kind;
  std::vector<int> values;
  std::vector<int> sequence;
};

// Every cell the config selects, grouped by check kind:
//   main, rewrite: 1 <= n <= max_n, 1 <= r <= n, s in the s range
//   transform:     1 <= m, k <= max_n, s in the s range
//   chu:           1 <= n <= min(max_n, 10), every composition rcomp with
//                  at most 4 parts and total <= n, every row i, s in range
//   reduced:       1 <= r <= max_n, s in the s range
//   genfunc:       s in the s range at series_order, plus one exp/log cell
//   pbin-oracle:   every partition with |mu| <= min(oracle_cap, 8), every
//                  0 <= r <= |mu|
// Throws ConfigError when the config is invalid.
std::vector<SweepCell> plan_sweep(const SweepConfig& config);

// Evaluates one cell.  A genfunc cell yields both the chain and the
// single-row check; every other cell yields exactly one result.
std::vector<CheckResult> run_cell(const SweepCell& cell, const SweepConfig& config,
                     const SweepHooks& hooks = {});

// Runs every planned cell on a worker pool and assembles the report.  Throws
// ConfigError when the config is invalid.
RunReport run_sweep(const SweepConfig& config, const SweepHooks& hooks = {});

// 0 when every check passed, 1 otherwise.
int exit_code(const RunReport& report);

}  // namespace partid
