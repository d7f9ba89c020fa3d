#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "oracles.hpp"
#include "qseries/arith.hpp"
#include "qseries/error.hpp"

using namespace qseries;

TEST(Arith, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool expected = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) expected = false;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
  EXPECT_TRUE(is_prime(2305843009213693951ull));
  EXPECT_FALSE(is_prime(2305843009213693953ull));
}

TEST(Arith, PrimesInRange) {
  auto ps = primes_in(50, 70);
  std::vector<std::uint64_t> expected{53, 59, 61, 67};
  EXPECT_EQ(ps, expected);
  EXPECT_TRUE(primes_in(24, 28).empty());
}

TEST(Arith, KroneckerExamples) {
  EXPECT_EQ(kronecker(12, 59), 1);
  EXPECT_EQ(kronecker(3, 5), -1);
  for (std::int64_t n = 1; n < 200; ++n) EXPECT_EQ(kronecker(1, n), 1);
  EXPECT_EQ(kronecker(2, 13), -1);
  EXPECT_EQ(kronecker(13, 13), 0);
}

TEST(Arith, LegendreMatchesSquares) {
  for (std::uint64_t p : primes_in(3, 100))
    for (std::int64_t a = -30; a < 120; ++a)
      EXPECT_EQ(kronecker(a, static_cast<std::int64_t>(p)), oracle::legendre_by_squares(a, p)) << a << " " << p;
}

TEST(Arith, KroneckerIsMultiplicative) {
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b)
      for (std::int64_t n : {3, 5, 8, 12, 13, 24, 52, 59})
        EXPECT_EQ(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
  for (std::int64_t a : {12, 13, 52, -3})
    for (std::int64_t x = 1; x <= 30; ++x)
      for (std::int64_t y = 1; y <= 30; ++y) EXPECT_EQ(kronecker(a, x * y), kronecker(a, x) * kronecker(a, y));
}

TEST(Arith, InverseCrtOrder) {
  EXPECT_EQ(inv_mod(24, 13), 6u);
  EXPECT_EQ(inv_mod(-1, 7), 6u);
  EXPECT_THROW(inv_mod(6, 9), DomainError);
  for (std::uint64_t a = 1; a < 169; ++a)
    if (a % 13 != 0) {
      EXPECT_EQ(mul_mod(a, inv_mod(a, 169), 169), 1u);
    }

  auto x = crt(23, 24, 5, 59);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x % 24, 23u);
  EXPECT_EQ(*x % 59, 5u);
  EXPECT_LT(*x, 24u * 59u);

  EXPECT_EQ(multiplicative_order(6, 13), 12u);
  EXPECT_EQ(multiplicative_order(5, 23), 22u);
  EXPECT_EQ(multiplicative_order(1, 7), 1u);
}

TEST(Arith, PowAndReduce) {
  EXPECT_EQ(pow_mod(3, 0, 7), 1u);
  EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
  EXPECT_EQ(reduce(-1, 13), 12u);
  EXPECT_EQ(reduce(-26, 13), 0u);
  EXPECT_EQ(pow_mod_signed(2, -1, 13), 7u);
}

TEST(Arith, SigmaByDivisors) {
  for (std::uint64_t n = 1; n < 300; ++n) {
    std::uint64_t s3 = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) s3 += d * d * d;
    EXPECT_EQ(sigma_mod(n, 3, 1000003), s3 % 1000003) << n;
  }
  EXPECT_EQ(sigma_mod(2, 3, 1'000'000), 9u);
}

TEST(Arith, OverflowIsReported) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  EXPECT_THROW(checked_mul(max / 2, 3), OverflowError);
  EXPECT_THROW(checked_add(max, 1), OverflowError);
  EXPECT_THROW(checked_pow(13, 20), OverflowError);
  EXPECT_EQ(checked_pow(13, 5), 371293u);
  EXPECT_EQ(checked_mul(59 * 59 * 59, 13), 2669927u);
}

TEST(Arith, PrimeDivisors) {
  std::vector<std::uint64_t> e{2, 3, 13};
  EXPECT_EQ(prime_divisors(576 * 13), e);
  EXPECT_TRUE(prime_divisors(1).empty());
}
