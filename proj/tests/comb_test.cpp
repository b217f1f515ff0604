#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "partid/comb/partition.hpp"
#include "partid/comb/pbin.hpp"
#include "partid/comb/statistics.hpp"
#include "support/oracles.hpp"

namespace partid {
namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

TEST(PartitionTest, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Composition({1, -1}), std::invalid_argument);
  const Partition mu({3, 1, 1});
  EXPECT_EQ(mu.weight(), 5);
  EXPECT_EQ(mu.length(), 3u);
  EXPECT_EQ(mu.multiplicity(1), 2);
  EXPECT_EQ(mu.multiplicity(2), 0);
  EXPECT_EQ(mu.to_string(), "(3,1,1)");
  EXPECT_EQ(Partition().to_string(), "()");
}

TEST(PartitionsOfTest, SmallCases) {
  const auto zero = partitions_of(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].length(), 0u);

  const std::vector<std::vector<int>> four{
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(parts_of(partitions_of(4)), four);
  EXPECT_EQ(partitions_of(12).size(), 77u);
  EXPECT_THROW(partitions_of(-1), std::invalid_argument);
}

TEST(PartitionsOfTest, CountsMatchPentagonalRecurrence) {
  const auto expected = testing::partition_counts(30);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(partitions_of(n).size())),
              expected[static_cast<std::size_t>(n)])
        << "n=" << n;
  }
}

TEST(PartitionsOfTest, ReverseLexicographicAndDistinct) {
  for (int n = 1; n <= 14; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 1; i < ps.size(); ++i) {
      EXPECT_GT(ps[i - 1], ps[i]) << "n=" << n << " at " << i;
    }
    for (const auto& p : ps) EXPECT_EQ(p.weight(), n);
  }
}

TEST(CompositionsOfTest, Examples) {
  const auto two = compositions_of(3, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], Composition({1, 2}));
  EXPECT_EQ(two[1], Composition({2, 1}));
  EXPECT_EQ(compositions_of(7, 1), std::vector<Composition>{Composition({7})});
  EXPECT_TRUE(compositions_of(2, 3).empty());
  EXPECT_THROW(compositions_of(0, 1), std::invalid_argument);
  EXPECT_THROW(compositions_of(3, 0), std::invalid_argument);
}

TEST(CompositionsOfTest, MatchesOdometerEnumeration) {
  for (int total = 1; total <= 9; ++total) {
    for (int parts = 1; parts <= 5; ++parts) {
      std::vector<std::vector<int>> got;
      for (const auto& c : compositions_of(total, parts)) {
        got.emplace_back(c.parts().begin(), c.parts().end());
      }
      EXPECT_EQ(got, testing::odometer_compositions(total, parts))
          << total << " into " << parts;
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(got.size())),
                testing::pascal_binomial(total - 1, parts - 1));
    }
  }
}

TEST(StatisticsTest, ZMu) {
  EXPECT_EQ(z_mu(Partition()), 1);
  EXPECT_EQ(z_mu(Partition({3})), 3);
  EXPECT_EQ(z_mu(Partition({1, 1})), 2);
  EXPECT_EQ(z_mu(Partition({2, 2, 1})), 8);
}

TEST(StatisticsTest, CompositionCount) {
  EXPECT_EQ(composition_count(Partition({5})), 1);
  EXPECT_EQ(composition_count(Partition({2, 1})), 2);
  EXPECT_EQ(composition_count(Partition({2, 2, 1})), 3);
  for (int n = 1; n <= 9; ++n) {
    for (const auto& mu : partitions_of(n)) {
      EXPECT_EQ(composition_count(mu),
                testing::distinct_permutations({mu.parts().begin(), mu.parts().end()}))
          << mu;
    }
  }
}

TEST(StatisticsTest, PartitionIdentities) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& mu : partitions_of(n)) {
      BigInt by_multiplicity = 1;
      for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < mu.multiplicity(i); ++j) by_multiplicity *= i;
      }
      BigInt by_parts = 1;
      for (int part : mu.parts()) by_parts *= part;
      EXPECT_EQ(by_multiplicity, by_parts) << mu;
      EXPECT_EQ(z_mu(mu) * composition_count(mu),
                factorial(static_cast<long>(mu.length())) * by_parts)
          << mu;
    }
  }
}

TEST(StatisticsTest, Pochhammer) {
  EXPECT_EQ(pochhammer(Rational(BigInt(7), BigInt(3)), 0), Rational(1));
  EXPECT_EQ(pochhammer(1, 3), Rational(6));
  EXPECT_EQ(pochhammer(2, 3), Rational(24));
  for (long s = 0; s <= 8; ++s) EXPECT_EQ(pochhammer(1, s), Rational(factorial(s)));
  EXPECT_EQ(pochhammer(Rational(BigInt(1), BigInt(2)), 2),
            Rational(BigInt(3), BigInt(4)));
  EXPECT_THROW(pochhammer(1, -1), std::invalid_argument);
}

TEST(StatisticsTest, GeneralizedBinomial) {
  EXPECT_EQ(gen_binomial(5, 2), 10);
  EXPECT_EQ(gen_binomial(-3, 2), 6);
  EXPECT_EQ(gen_binomial(4, -1), 0);
  EXPECT_EQ(gen_binomial(-4, -1), 0);
  EXPECT_EQ(gen_binomial(3, 5), 0);
  for (long a = -12; a <= 14; ++a) {
    for (long k = -2; k <= 10; ++k) {
      EXPECT_EQ(gen_binomial(a, k), testing::pascal_binomial(a, k))
          << "a=" << a << " k=" << k;
    }
  }
}

TEST(PbinTest, Examples) {
  EXPECT_EQ(pbin(Partition({2, 1}), 2), 2);
  EXPECT_EQ(pbin(Partition({2, 1}), 3), 1);
  EXPECT_EQ(pbin(Partition({2, 2}), 2), 4);
  EXPECT_EQ(pbin(Partition({1, 1}), 1), 0);
  EXPECT_EQ(pbin(Partition(), 0), 1);
  EXPECT_EQ(pbin(Partition(), 1), 0);
  EXPECT_EQ(pbin(Partition({3}), 4), 0);
  const std::vector<int> expected{0, 0, 0, 6, 9, 5, 1};
  for (int r = 0; r <= 6; ++r) {
    EXPECT_EQ(pbin(Partition({3, 2, 1}), r), expected[static_cast<std::size_t>(r)]);
  }
  EXPECT_THROW(pbin(Partition({2}), -1), std::invalid_argument);
  const std::vector<int> bad_rows{2, 0};
  EXPECT_THROW(pbin_rows(bad_rows, 1), std::invalid_argument);
}

TEST(PbinOracleTest, Examples) {
  EXPECT_EQ(pbin_oracle(Partition({3}), 2), 3);
  EXPECT_EQ(pbin_oracle(Partition({1}), 1), 1);
  EXPECT_EQ(pbin_oracle(Partition({2, 2}), 3), 4);
  EXPECT_EQ(pbin_oracle(Partition(), 0), 1);
}

TEST(PbinOracleTest, RefusesBeyondCap) {
  const Partition big({9, 8});
  EXPECT_THROW(pbin_oracle(big, 3), OracleScopeError);
  EXPECT_NO_THROW(pbin_oracle(big, 3, 17));
  EXPECT_THROW(pbin_oracle(Partition({2}), 1, 63), OracleScopeError);
}

TEST(PbinTest, AgreesWithOracleExhaustively) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int r = 0; r <= n; ++r) {
        EXPECT_EQ(pbin(mu, r), pbin_oracle(mu, r)) << mu << " r=" << r;
      }
    }
  }
}

TEST(PbinTest, CompositionExpansion) {
  for (int n = 1; n <= 9; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (const auto& c : compositions_of(n, l)) {
        for (int r = 0; r <= n + 1; ++r) {
          EXPECT_EQ(pbin_expanded(c.parts(), r), pbin_rows(c.parts(), r))
              << c << " r=" << r;
        }
      }
    }
  }
  EXPECT_EQ(pbin_expanded({}, 0), 1);
  EXPECT_EQ(pbin_expanded({}, 2), 0);
}

TEST(PbinTest, RowSumIsProductOfNonemptySubsets) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& mu : partitions_of(n)) {
      BigInt total = 0;
      for (int r = 0; r <= n; ++r) total += pbin(mu, r);
      BigInt expected = 1;
      for (int part : mu.parts()) expected *= (BigInt(1) << part) - 1;
      EXPECT_EQ(total, expected) << mu;
    }
  }
}

TEST(PbinTest, IndependentOfRowOrder) {
  const std::vector<int> rows{1, 3, 2};
  for (int r = 0; r <= 6; ++r) {
    EXPECT_EQ(pbin_rows(rows, r), pbin(Partition({3, 2, 1}), r));
  }
}

}  // namespace
}  // namespace partid
