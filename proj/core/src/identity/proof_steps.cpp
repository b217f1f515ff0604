#include "partid/identity/proof_steps.hpp"

#include <stdexcept>
#include <vector>

#include "compare.hpp"
#include "partid/comb/statistics.hpp"

namespace partid {
namespace {

// (-1)^{k-1} binom(-s-1, k-1), the per-row weight after the binomial
// transformation.
BigInt row_weight(int k, int s) {
  BigInt value = gen_binomial(-s - 1, k - 1);
  if ((k - 1) % 2 != 0) value = -value;
  return value;
}

void require_positive(int r, int s, const char* what) {
  if (r < 1 || s < 1) {
    throw std::invalid_argument(std::string(what) + ": r and s must be >= 1");
  }
}

}  // namespace

CheckResult verify_binomial_transform(int m, int k, int s) {
  if (m < 1 || k < 1 || s < 1) {
    throw std::invalid_argument(
        "verify_binomial_transform: m, k and s must be >= 1");
  }
  const BigInt lhs = gen_binomial(m + s - 1, m - 1) * gen_binomial(m - 1, k - 1);
  const BigInt rhs = row_weight(k, s) * gen_binomial(m + s - 1, k + s - 1);
  return detail::compare_exact("transform",
                               {{"m", long{m}}, {"k", long{k}}, {"s", long{s}}},
                               Rational(lhs), Rational(rhs));
}

CheckResult verify_chu_vandermonde(int n, const Composition& rcomp, int row,
                                   int s) {
  const int l = static_cast<int>(rcomp.length());
  if (l < 1 || row < 1 || row > l || n < l || s < 1) {
    throw std::invalid_argument(
        "verify_chu_vandermonde: need 1 <= row <= l <= n and s >= 1");
  }
  const auto r = rcomp.parts();
  const auto i = static_cast<std::size_t>(row - 1);

  BigInt lhs = 0;
  for_each_composition(n, l, [&](std::span<const int> mu) {
    BigInt term = gen_binomial(mu[i] + s - 1, s);
    for (std::size_t j = 0; j < mu.size() && term != 0; ++j) {
      term *= gen_binomial(mu[j] - 1, r[j] - 1);
    }
    lhs += term;
  });
  const BigInt rhs =
      row_weight(r[i], s) * gen_binomial(n + s - 1, rcomp.total() + s - 1);

  std::vector<long> rcomp_param(r.begin(), r.end());
  return detail::compare_exact("chu",
                               {{"n", long{n}},
                                {"rcomp", std::move(rcomp_param)},
                                {"i", long{row}},
                                {"s", long{s}}},
                               Rational(lhs), Rational(rhs));
}

PolyX reduced_lhs(int r, int s) {
  require_positive(r, s, "reduced_lhs");
  std::vector<BigInt> weights(static_cast<std::size_t>(r) + 1);
  for (int k = 1; k <= r; ++k) weights[static_cast<std::size_t>(k)] = row_weight(k, s);

  std::vector<Rational> coefficients(static_cast<std::size_t>(r));
  for (int l = 1; l <= r; ++l) {
    Rational sum_over_l;
    for_each_composition(r, l, [&](std::span<const int> parts) {
      BigInt weight_sum = 0;
      BigInt part_product = 1;
      for (int part : parts) {
        weight_sum += weights[static_cast<std::size_t>(part)];
        part_product *= part;
      }
      sum_over_l += Rational(weight_sum, part_product);
    });
    coefficients[static_cast<std::size_t>(l - 1)] =
        sum_over_l / Rational(factorial(l));
  }
  return PolyX(std::move(coefficients));
}

PolyX reduced_rhs(int r, int s) {
  require_positive(r, s, "reduced_rhs");
  const auto k = static_cast<std::size_t>(r);
  return (poly_binomial(r + s - 1, k) - poly_binomial(r - 1, k)) / Rational(s);
}

CheckResult verify_reduced(int r, int s) {
  return detail::compare_exact("reduced", {{"r", long{r}}, {"s", long{s}}},
                               reduced_lhs(r, s), reduced_rhs(r, s));
}

}  // namespace partid
