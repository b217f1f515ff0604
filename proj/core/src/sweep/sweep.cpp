#include "partid/sweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "partid/comb/partition.hpp"
#include "partid/comb/pbin.hpp"
#include "partid/exact/rational.hpp"
#include "partid/identity/genfunc.hpp"
#include "partid/identity/proof_steps.hpp"

namespace partid {
namespace {

constexpr int kChuMaxN = 10;
constexpr int kChuMaxParts = 4;
constexpr int kPbinOracleMaxWeight = 8;

void plan_kind(CheckKind kind, const SweepConfig& config,
               std::vector<SweepCell>& cells) {
  const auto each_s = [&](auto&& body) {
    for (int s = config.s_lo; s <= config.s_hi; ++s) body(s);
  };
  switch (kind) {
    case CheckKind::kMain:
    case CheckKind::kRewrite:
      for (int n = 1; n <= config.max_n; ++n) {
        for (int r = 1; r <= n; ++r) {
          each_s([&](int s) { cells.push_back({kind, {n, r, s}, {}}); });
        }
      }
      break;
    case CheckKind::kTransform:
      for (int m = 1; m <= config.max_n; ++m) {
        for (int k = 1; k <= config.max_n; ++k) {
          each_s([&](int s) { cells.push_back({kind, {m, k, s}, {}}); });
        }
      }
      break;
    case CheckKind::kChu:
      for (int n = 1; n <= std::min(config.max_n, kChuMaxN); ++n) {
        for (int l = 1; l <= std::min(n, kChuMaxParts); ++l) {
          for (int r = l; r <= n; ++r) {
            for (const Composition& rcomp : compositions_of(r, l)) {
              std::vector<int> parts(rcomp.parts().begin(), rcomp.parts().end());
              for (int i = 1; i <= l; ++i) {
                each_s([&](int s) { cells.push_back({kind, {n, i, s}, parts}); });
              }
            }
          }
        }
      }
      break;
    case CheckKind::kReduced:
      for (int r = 1; r <= config.max_n; ++r) {
        each_s([&](int s) { cells.push_back({kind, {r, s}, {}}); });
      }
      break;
    case CheckKind::kGenfunc:
      cells.push_back({kind, {}, {}});
      each_s([&](int s) { cells.push_back({kind, {s}, {}}); });
      break;
    case CheckKind::kPbinOracle:
      for (int w = 0; w <= std::min(config.oracle_cap, kPbinOracleMaxWeight); ++w) {
        for (const Partition& mu : partitions_of(w)) {
          std::vector<int> parts(mu.parts().begin(), mu.parts().end());
          for (int r = 0; r <= w; ++r) cells.push_back({kind, {r}, parts});
        }
      }
      break;
  }
}

CheckResult pbin_oracle_check(const std::vector<int>& parts, int r, int cap) {
  const Partition mu(parts);
  const BigInt fast = pbin(mu, r);
  const BigInt brute = pbin_oracle(mu, r, cap);
  CheckResult result{"pbin-oracle",
                     {{"mu", std::vector<long>(parts.begin(), parts.end())},
                      {"r", long{r}}},
                     CheckStatus::kPass,
                     Rational(fast).to_string(),
                     Rational(brute).to_string(),
                     std::nullopt};
  if (fast != brute) {
    result.status = CheckStatus::kFail;
    result.witness = "value: pbin " + to_string(fast) + " != oracle " +
                     to_string(brute);
  }
  return result;
}

}  // namespace

std::vector<SweepCell> plan_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<SweepCell> cells;
  for (CheckKind kind : config.checks) plan_kind(kind, config, cells);
  return cells;
}

std::vector<CheckResult> run_cell(const SweepCell& cell,
                                  const SweepConfig& config,
                                  const SweepHooks& hooks) {
  const auto& v = cell.values;
  const auto order = static_cast<std::size_t>(config.series_order);
  switch (cell.kind) {
    case CheckKind::kMain: {
      const MainParams p(v[0], v[1], v[2]);
      return {hooks.main_rhs ? verify_main(p, hooks.main_rhs) : verify_main(p)};
    }
    case CheckKind::kRewrite:
      return {verify_rewrite(MainParams(v[0], v[1], v[2]))};
    case CheckKind::kTransform:
      return {verify_binomial_transform(v[0], v[1], v[2])};
    case CheckKind::kChu:
      return {verify_chu_vandermonde(v[0], Composition(cell.sequence), v[1],
                                     v[2])};
    case CheckKind::kReduced:
      return {verify_reduced(v[0], v[1])};
    case CheckKind::kGenfunc:
      if (v.empty()) return {verify_exp_log(order)};
      return {verify_genfunc_chain(v[0], order),
              verify_single_row_genfunc(v[0], order)};
    case CheckKind::kPbinOracle:
      return {pbin_oracle_check(cell.sequence, v[0], config.oracle_cap)};
  }
  return {};
}

RunReport run_sweep(const SweepConfig& config, const SweepHooks& hooks) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepCell> cells = plan_sweep(config);

  int workers = config.jobs > 0
                    ? config.jobs
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));

  std::vector<std::vector<CheckResult>> per_cell(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto work = [&] {
    for (std::size_t index = next++; index < cells.size(); index = next++) {
      try {
        per_cell[index] = run_cell(cells[index], config, hooks);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  RunReport report;
  report.config = config;
  report.workers = workers;
  for (auto& results : per_cell) {
    for (auto& result : results) {
      (result.passed() ? report.passed : report.failed) += 1;
      report.results.push_back(std::move(result));
    }
  }
  std::sort(report.results.begin(), report.results.end(), canonical_less);
  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

int exit_code(const RunReport& report) { return report.all_passed() ? 0 : 1; }

}  // namespace partid
