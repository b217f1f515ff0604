#include "partid/comb/pbin.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace partid {
namespace {

void check_rows(std::span<const int> rows, int r) {
  if (r < 0) throw std::invalid_argument("pbin: r must be >= 0");
  if (std::any_of(rows.begin(), rows.end(), [](int row) { return row < 1; })) {
    throw std::invalid_argument("pbin: row lengths must be >= 1");
  }
}

BigInt binomial(int n, int k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace

BigInt pbin_rows(std::span<const int> rows, int r) {
  check_rows(rows, r);
  const int cells = std::accumulate(rows.begin(), rows.end(), 0);
  if (r < static_cast<int>(rows.size()) || r > cells) return 0;

  // product[k] = coefficient of t^k in the running product.
  std::vector<BigInt> product{1};
  for (int row : rows) {
    std::vector<BigInt> next(product.size() + static_cast<std::size_t>(row));
    for (std::size_t j = 0; j < product.size(); ++j) {
      if (product[j] == 0) continue;
      for (int k = 1; k <= row; ++k) {
        next[j + static_cast<std::size_t>(k)] += product[j] * binomial(row, k);
      }
    }
    product = std::move(next);
  }
  return product[static_cast<std::size_t>(r)];
}

BigInt pbin_expanded(std::span<const int> rows, int r) {
  check_rows(rows, r);
  if (rows.empty()) return r == 0 ? 1 : 0;

  // Row binomials tabulated once; the composition walk only multiplies.
  std::vector<std::vector<BigInt>> row_binomials;
  row_binomials.reserve(rows.size());
  for (int row : rows) {
    std::vector<BigInt> table(static_cast<std::size_t>(row) + 1);
    for (int k = 0; k <= row; ++k) table[static_cast<std::size_t>(k)] = binomial(row, k);
    row_binomials.push_back(std::move(table));
  }

  BigInt total = 0;
  BigInt term;
  for_each_composition(
      r, static_cast<int>(rows.size()), [&](std::span<const int> picks) {
        term = 1;
        for (std::size_t i = 0; i < picks.size(); ++i) {
          if (picks[i] > rows[i]) return;
          term *= row_binomials[i][static_cast<std::size_t>(picks[i])];
        }
        total += term;
      });
  return total;
}

BigInt pbin_oracle(const Partition& mu, int r, int cap) {
  if (r < 0) throw std::invalid_argument("pbin_oracle: r must be >= 0");
  if (cap > 62) {
    throw OracleScopeError("pbin_oracle: cap may not exceed 62 cells");
  }
  const int cells = mu.weight();
  if (cells > cap) {
    throw OracleScopeError("pbin_oracle: |mu| = " + std::to_string(cells) +
                           " exceeds oracle cap " + std::to_string(cap));
  }
  if (r > cells) return 0;

  // Cells are numbered row by row; row_masks[i] selects row i's cells.
  std::vector<std::uint64_t> row_masks;
  int offset = 0;
  for (int row : mu.parts()) {
    row_masks.push_back(((std::uint64_t{1} << row) - 1) << offset);
    offset += row;
  }

  const auto covers_every_row = [&](std::uint64_t subset) {
    return std::all_of(row_masks.begin(), row_masks.end(),
                       [subset](std::uint64_t m) { return (subset & m) != 0; });
  };

  if (r == 0) return covers_every_row(0) ? 1 : 0;

  // Gosper's hack: successive integers with exactly r bits set.
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << cells;
  for (std::uint64_t subset = (std::uint64_t{1} << r) - 1; subset < limit;) {
    if (covers_every_row(subset)) ++count;
    const std::uint64_t lowest = subset & (~subset + 1);
    const std::uint64_t ripple = subset + lowest;
    subset = (((ripple ^ subset) >> 2) / lowest) | ripple;
  }
  return BigInt(static_cast<unsigned long>(count));
}

}  // namespace partid
