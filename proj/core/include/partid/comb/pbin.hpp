#pragma once

#include <span>
#include <stdexcept>

#include "partid/comb/partition.hpp"
#include "partid/exact/rational.hpp"

namespace partid {

// Number of ways to choose r cells of a left-justified diagram with the given
// row lengths so that every row contributes at least one cell.  Rows need not
// be sorted, so compositions are accepted as well as partitions.
//
// Computed as the coefficient of t^r in prod_i sum_{k >= 1} binom(row_i, k)
// t^k.  Zero when r < number of rows or r > total cells; the empty diagram
// gives 1 at r = 0.  Throws std::invalid_argument when r < 0 or a row is < 1.
BigInt pbin_rows(std::span<const int> rows, int r);

inline BigInt pbin(const Partition& mu, int r) {
  return pbin_rows(mu.parts(), r);
}

// The same count written as a sum over compositions r = r_1 + ... + r_l with
// every r_i >= 1 of prod_i binom(row_i, r_i).
BigInt pbin_expanded(std::span<const int> rows, int r);

inline constexpr int kDefaultOracleCap = 16;

// Raised when a brute-force oracle is asked for an instance beyond its cap.
class OracleScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute force: walks every r-subset of the |mu| cells and counts the ones
// that meet every row.  Throws OracleScopeError when |mu| > cap (cap itself
// may not exceed 62) and std::invalid_argument when r < 0.
BigInt pbin_oracle(const Partition& mu, int r, int cap = kDefaultOracleCap);

}  // namespace partid
