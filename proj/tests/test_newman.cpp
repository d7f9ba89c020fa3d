#include <gtest/gtest.h>

#include <numeric>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/newman.hpp"

using namespace qseries;

namespace {

PartitionStore& shared_store() {
  static PartitionStore store;
  return store;
}

}  // namespace

TEST(Newman, ThirteenIsGood) {
  auto& store = shared_store();
  auto c = good_prime_search(13, default_t_max(13), store);
  ASSERT_TRUE(c.complete);
  EXPECT_TRUE(c.missing.empty());
  ASSERT_EQ(c.witnesses.size(), 13u);
  const auto& w11 = c.witnesses[11];
  EXPECT_EQ(w11.r, 11);
  EXPECT_EQ(w11.n_r, 11u);
  EXPECT_EQ(w11.partition_argument, 6u);
  std::uint64_t largest = 0;
  for (const auto& w : c.witnesses) {
    EXPECT_EQ((13 * w.n_r + 1) % 24, 0u);
    EXPECT_EQ(w.partition_argument, (13 * w.n_r + 1) / 24);
    largest = std::max(largest, w.partition_argument);
  }
  PartitionTable fresh(13, largest + 1);
  for (const auto& w : c.witnesses) EXPECT_EQ(fresh[w.partition_argument], w.r);
  EXPECT_TRUE(reverify_certificate(c));
  auto forged = c;
  forged.witnesses[3].n_r = c.witnesses[4].n_r;
  forged.witnesses[3].partition_argument = c.witnesses[4].partition_argument;
  EXPECT_FALSE(reverify_certificate(forged));
}

TEST(Newman, FiveCoversOnlyZero) {
  auto& store = shared_store();
  auto c = good_prime_search(5, 20000, store);
  EXPECT_FALSE(c.complete);
  ASSERT_EQ(c.witnesses.size(), 1u);
  EXPECT_EQ(c.witnesses[0].r, 0);
  EXPECT_EQ(c.missing, (std::vector<Residue>{1, 2, 3, 4}));
  EXPECT_EQ(c.search_bound, 19u + 24 * 20000);
}

TEST(Newman, GoodPrimesUpToThirtyOne) {
  auto& store = shared_store();
  for (std::uint32_t m : {13u, 17u, 19u, 23u, 29u, 31u}) {
    auto c = good_prime_search(m, default_t_max(m, store.budget()), store);
    EXPECT_TRUE(c.complete) << m;
    EXPECT_TRUE(reverify_certificate(c)) << m;
  }
  EXPECT_THROW(good_prime_search(13, default_t_max(13) + 1000, store), BudgetError);
}

TEST(Newman, Census) {
  auto& store = shared_store();
  auto five = residue_census(5, 10000, store);
  ASSERT_TRUE(five.progression_count);
  EXPECT_EQ(*five.progression_count, 2000u);
  EXPECT_GE(five.counts[0], 2000u);
  EXPECT_TRUE(*five.progression_bound_holds);
  EXPECT_EQ(std::accumulate(five.counts.begin(), five.counts.end(), std::uint64_t{0}), 10001u);

  auto thirteen = residue_census(13, 100000, store);
  for (auto c : thirteen.counts) EXPECT_GT(c, 0u);
  EXPECT_FALSE(thirteen.progression_count);
  EXPECT_EQ(std::accumulate(thirteen.counts.begin(), thirteen.counts.end(), std::uint64_t{0}), 100001u);

  auto zero = residue_census(7, 0, store);
  std::vector<std::uint64_t> only_one(7, 0);
  only_one[1] = 1;
  EXPECT_EQ(zero.counts, only_one);
}
