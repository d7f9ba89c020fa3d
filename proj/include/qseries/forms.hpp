#pragma once

#include <cstdint>

#include "qseries/fpseries.hpp"

// Constructors for the specific q-expansions used throughout: the partition
// generating function, eta powers at 24z, Delta, E4 and E6, and the series
// obtained from Delta^delta by U(m^k), V(24) and division by eta^{m^k}(24z).
namespace qseries {

// prod_{n>=1} (1 - q^n) mod q^N via the pentagonal number theorem.
FpSeries euler_product(std::uint32_t m, std::size_t N);
// Same product expanded one factor at a time; O(N^2), kept as an oracle.
FpSeries euler_product_by_factors(std::uint32_t m, std::size_t N);

// sum_{n<N} p(n) q^n. For N <= 10^4 the recurrence result is also checked
// against the inverse of the factor-by-factor Euler product.
FpSeries partition_series(std::uint32_t m, std::size_t N);
FpSeries partition_series_by_inversion(std::uint32_t m, std::size_t N);

// eta^r(24z) = q^r prod (1 - q^{24n})^r.
FpSeries eta_pow_24z(unsigned r, std::size_t N, std::uint32_t m);
// eta^r(24z) E4(24z)^e4 E6(24z)^e6.
FpSeries eta_eisenstein_24z(unsigned r, unsigned e4, unsigned e6, std::size_t N, std::uint32_t m);

// Delta = q prod (1 - q^n)^24.
FpSeries delta_series(std::size_t N, std::uint32_t m);

// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
FpSeries eisenstein(int which, std::size_t N, std::uint32_t m);

struct DeltaConstants {
  std::uint32_t m;
  unsigned k;
  std::uint64_t m_pow_k;
  std::uint64_t delta;  // (m^{2k} - 1) / 24
  std::uint64_t beta;   // 24 beta = 1 (mod m^k), 1 <= beta < m^k
};
// Requires a prime m >= 5.
DeltaConstants delta_constants(std::uint32_t m, unsigned k);

// Precision of Delta^delta needed for a_series(m, k, N).
std::size_t a_series_upstream_precision(std::uint32_t m, unsigned k, std::size_t N);

// sum a(m,k,n) q^n = ((Delta^delta | U(m^k)) | V(24)) / eta^{m^k}(24z) mod m.
// Throws DivisibilityError if the numerator is not divisible by q^{m^k}.
FpSeries a_series(std::uint32_t m, unsigned k, std::size_t N);

}  // namespace qseries
