#include "qseries/forms.hpp"

#include <string>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/partition.hpp"

namespace qseries {
namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Product E^r E4^e4 E6^e6 in q, precision P >= 1.
FpSeries eta_core(unsigned r, unsigned e4, unsigned e6, std::size_t P, std::uint32_t m) {
  FpSeries core = pow(euler_product(m, P), r);
  if (e4 > 0) core = mul(core, pow(eisenstein(4, P, m), e4));
  if (e6 > 0) core = mul(core, pow(eisenstein(6, P, m), e6));
  return core;
}

}  // namespace

FpSeries euler_product(std::uint32_t m, std::size_t N) {
  std::vector<std::int64_t> c(N, 0);
  if (N > 0) c[0] = 1;
  // sum_k (-1)^k q^{k(3k-1)/2} over all integers k
  for (std::size_t k = 1;; ++k) {
    const std::size_t g1 = k * (3 * k - 1) / 2;
    if (g1 >= N) break;
    const std::int64_t s = (k & 1) ? -1 : 1;
    c[g1] += s;
    if (g1 + k < N) c[g1 + k] += s;
  }
  return FpSeries::from_integers(m, c);
}

FpSeries euler_product_by_factors(std::uint32_t m, std::size_t N) {
  check_modulus(m);
  std::vector<std::int64_t> c(N, 0);
  if (N > 0) c[0] = 1;
  for (std::size_t n = 1; n < N; ++n) {
    for (std::size_t i = N - 1; i >= n; --i) {
      c[i] = (c[i] - c[i - n]) % static_cast<std::int64_t>(m);
      if (i == n) break;
    }
  }
  return FpSeries::from_integers(m, c);
}

FpSeries partition_series_by_inversion(std::uint32_t m, std::size_t N) {
  return invert_unit(euler_product_by_factors(m, N));
}

FpSeries partition_series(std::uint32_t m, std::size_t N) {
  FpSeries p = PartitionTable(m, N).as_series();
  constexpr std::size_t kCrossCheckLimit = 10'000;
  if (N <= kCrossCheckLimit && p != partition_series_by_inversion(m, N)) {
    throw Error("partition_series: recurrence and Euler-product inversion disagree mod " +
                std::to_string(m));
  }
  return p;
}

FpSeries eta_pow_24z(unsigned r, std::size_t N, std::uint32_t m) {
  return eta_eisenstein_24z(r, 0, 0, N, m);
}

FpSeries eta_eisenstein_24z(unsigned r, unsigned e4, unsigned e6, std::size_t N, std::uint32_t m) {
  if (r >= N) return FpSeries(m, N);
  const std::size_t inner = N - r;
  const FpSeries core = eta_core(r, e4, e6, ceil_div(inner, 24), m);
  return shift(v_op(core, 24, inner), r);
}

FpSeries delta_series(std::size_t N, std::uint32_t m) {
  if (N <= 1) return FpSeries(m, N);
  return shift(pow(euler_product(m, N - 1), 24), 1);
}

FpSeries eisenstein(int which, std::size_t N, std::uint32_t m) {
  if (which != 4 && which != 6) throw DomainError("eisenstein: weight must be 4 or 6");
  check_modulus(m);
  const std::int64_t scale_factor = which == 4 ? 240 : -504;
  const unsigned k = which == 4 ? 3 : 5;
  const std::uint64_t c = reduce(scale_factor, m);
  std::vector<Residue> coeffs(N, 0);
  if (N > 0) coeffs[0] = static_cast<Residue>(1 % m);
  for (std::size_t n = 1; n < N; ++n) {
    coeffs[n] = static_cast<Residue>(c * sigma_mod(n, k, m) % m);
  }
  return FpSeries(m, std::move(coeffs));
}

DeltaConstants delta_constants(std::uint32_t m, unsigned k) {
  if (m < 5 || !is_prime(m)) {
    throw DomainError("delta_constants: need a prime m >= 5 (24 must be invertible), got " +
                      std::to_string(m));
  }
  if (k == 0) throw DomainError("delta_constants: k must be positive");
  DeltaConstants dc{};
  dc.m = m;
  dc.k = k;
  dc.m_pow_k = checked_pow(m, k);
  const std::uint64_t m2k = checked_mul(dc.m_pow_k, dc.m_pow_k);
  dc.delta = (m2k - 1) / 24;
  dc.beta = inv_mod(24, dc.m_pow_k);
  return dc;
}

std::size_t a_series_upstream_precision(std::uint32_t m, unsigned k, std::size_t N) {
  const auto dc = delta_constants(m, k);
  return checked_mul(dc.m_pow_k, ceil_div(checked_add(N, dc.m_pow_k), 24));
}

FpSeries a_series(std::uint32_t m, unsigned k, std::size_t N) {
  const auto dc = delta_constants(m, k);
  const std::size_t M = dc.m_pow_k;
  const std::size_t numer_precision = N + M;
  const std::size_t after_u = ceil_div(numer_precision, 24);
  const std::size_t upstream = a_series_upstream_precision(m, k, N);

  const FpSeries delta_pow = pow(delta_series(upstream, m), dc.delta);
  const FpSeries reduced = u_op(delta_pow, M).truncated(after_u);
  const FpSeries numerator = v_op(reduced, 24, numer_precision);
  const FpSeries quotient = shift(numerator, -static_cast<std::int64_t>(M));

  const FpSeries unit = v_op(pow(euler_product(m, ceil_div(N, 24)), M), 24, N);
  return mul(quotient, invert_unit(unit));
}

}  // namespace qseries
