#include "qseries/fingerprint.hpp"

#include <random>

#include "qseries/arith.hpp"

namespace qseries {

std::vector<std::uint64_t> fingerprint_points(std::size_t count) {
  std::mt19937_64 gen(20260101);
  std::vector<std::uint64_t> pts(count);
  for (auto& p : pts) p = 2 + gen() % (kFingerprintPrime - 3);
  return pts;
}

std::uint64_t fingerprint(const FpSeries& s, std::uint64_t point) {
  std::uint64_t acc = 0;
  const auto c = s.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = (mul_mod(acc, point, kFingerprintPrime) + c[i]) % kFingerprintPrime;
  }
  return acc;
}

}  // namespace qseries
