#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "qseries/arith.hpp"
#include "qseries/cycles.hpp"
#include "qseries/error.hpp"
#include "qseries/forms.hpp"
#include "qseries/partition.hpp"

using namespace qseries;

TEST(Partition, MatchesEnumerationToSixty) {
  auto exact = oracle::partitions_by_parts(61);
  for (unsigned n = 0; n <= 30; ++n) ASSERT_EQ(exact[n], oracle::count_partitions(n, n)) << n;
  for (std::uint32_t m : oracle::kSmallPrimes) {
    PartitionTable t(m, 61);
    for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(t[n], exact[n] % m) << m << " " << n;
  }
}

TEST(Partition, MatchesEulerInversionToTenThousand) {
  for (std::uint32_t m : oracle::kSmallPrimes) {
    PartitionTable t(m, 10001);
    EXPECT_EQ(t.as_series(), partition_series_by_inversion(m, 10001)) << m;
    EXPECT_EQ(partition_series(m, 10001), t.as_series());
  }
}

TEST(Partition, SeriesExamples) {
  auto p = partition_series(13, 10);
  std::vector<Residue> head(p.coeffs().begin(), p.coeffs().begin() + 7);
  EXPECT_EQ(head, (std::vector<Residue>{1, 1, 2, 3, 5, 7, 11}));
  EXPECT_EQ(partition_series(5, 10)[4], 0);
  EXPECT_EQ(p[6], 11);
}

TEST(Partition, TableGrowth) {
  PartitionTable t(17, 100);
  t.extend(5000);
  EXPECT_EQ(t.as_series(), partition_table_serial(17, 5000).as_series());
  EXPECT_THROW(t.at(5000), PrecisionError);
}

TEST(Forms, EulerProductRoutesAgree) {
  for (std::uint32_t m : {5u, 13u, 23u}) {
    auto pent = oracle::pentagonal_signs(2000);
    auto e = euler_product(m, 2000);
    EXPECT_EQ(e, euler_product_by_factors(m, 2000));
    for (std::size_t n = 0; n < 2000; ++n) EXPECT_EQ(e[n], reduce(pent[n], m)) << n;
  }
}

TEST(Forms, EtaPowers) {
  auto e11 = eta_pow_24z(11, 200, 13);
  EXPECT_EQ(e11.first_nonzero(), 11u);
  EXPECT_EQ(e11[11], 1);
  EXPECT_EQ(e11[35], reduce(-11, 13));
  EXPECT_EQ(e11[35], 2);
  for (std::size_t n = 0; n < 200; ++n)
    if (n % 24 != 11) {
      EXPECT_EQ(e11[n], 0) << n;
    }

  auto e1 = eta_pow_24z(1, 5000, 7);
  auto pent = oracle::pentagonal_signs(5000 / 24 + 1);
  for (std::size_t n = 0; n < 5000; ++n) {
    int expected = 0;
    if (n % 24 == 1 && (n - 1) / 24 < pent.size()) expected = pent[(n - 1) / 24];
    EXPECT_EQ(e1[n], reduce(expected, 7)) << n;
  }

  for (std::size_t N : {24u, 25u, 1000u}) {
    auto lhs = eta_pow_24z(24, N, 13);
    auto rhs = v_op(delta_series((N + 23) / 24, 13), 24, N);
    EXPECT_EQ(lhs, rhs) << N;
  }

  for (unsigned r = 1; r <= 24; ++r) EXPECT_EQ(pow(eta_pow_24z(1, 600, 17), r), eta_pow_24z(r, 600, 17)) << r;
  EXPECT_EQ(eta_eisenstein_24z(7, 1, 0, 500, 17), eta_pow_24z(7, 500, 17) * v_op(eisenstein(4, 21, 17), 24, 500));
}

TEST(Forms, DeltaExamples) {
  auto d = delta_series(50, 5);
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], reduce(-24, 5));
  auto big = delta_series(12, 65521);
  const std::vector<std::int64_t> tau{0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612};
  for (std::size_t n = 0; n < tau.size(); ++n) EXPECT_EQ(big[n], reduce(tau[n], 65521)) << n;
}

TEST(Forms, Eisenstein) {
  auto e4 = eisenstein(4, 10, 17);
  EXPECT_EQ(e4[0], 1);
  EXPECT_EQ(e4[1], 2);
  EXPECT_EQ(e4[2], 1);
  auto e6 = eisenstein(6, 10, 23);
  EXPECT_EQ(e6[0], 1);
  EXPECT_EQ(e6[1], reduce(-504, 23));
  EXPECT_THROW(eisenstein(8, 10, 17), DomainError);
  // E4^3 - E6^2 = 1728 Delta
  auto lhs = pow(eisenstein(4, 300, 65521), 3) - pow(eisenstein(6, 300, 65521), 2);
  EXPECT_EQ(lhs, scale(delta_series(300, 65521), 1728));
}

TEST(Forms, DeltaConstants) {
  auto c = delta_constants(13, 1);
  EXPECT_EQ(c.delta, 7u);
  EXPECT_EQ(c.beta, 6u);
  c = delta_constants(5, 1);
  EXPECT_EQ(c.delta, 1u);
  EXPECT_EQ(c.beta, 4u);
  c = delta_constants(13, 2);
  EXPECT_EQ(c.delta, 1190u);
  EXPECT_EQ(c.m_pow_k, 169u);
  EXPECT_EQ(24 * c.beta % 169, 1u);
  EXPECT_THROW(delta_constants(3, 1), DomainError);
  EXPECT_THROW(delta_constants(13, 0), DomainError);
}

TEST(Forms, ASeriesExamples) {
  auto a = a_series(13, 1, 100);
  EXPECT_EQ(a.first_nonzero(), 11u);
  EXPECT_EQ(a[11], 11);
  EXPECT_EQ(a[35], 9);
  EXPECT_TRUE(a_series(5, 1, 2000).is_zero());
  EXPECT_TRUE(a_series(7, 1, 2000).is_zero());
  EXPECT_TRUE(a_series(5, 2, 300).is_zero());
}

TEST(Forms, ASeriesMatchesDefinition) {
  PartitionStore store;
  for (std::uint32_t m : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    for (unsigned k : {1u, 2u}) {
      const std::size_t N = 1000;
      auto a = a_series(m, k, N);
      auto f = f_series(m, k, N, Route::Definition, store);
      EXPECT_EQ(a, f) << m << " " << k;
      const std::uint64_t mk = checked_pow(m, k);
      for (std::size_t n = 0; n < N; ++n)
        if ((mk * n + 1) % 24 != 0) {
          ASSERT_EQ(a[n], 0) << m << " " << k << " " << n;
        }
    }
  }
}
