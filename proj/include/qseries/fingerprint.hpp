#pragma once

#include <cstdint>
#include <vector>

#include "qseries/fpseries.hpp"

namespace qseries {

// 2^61 - 1
inline constexpr std::uint64_t kFingerprintPrime = (std::uint64_t{1} << 61) - 1;

// Evaluation points drawn once from a fixed-seed mt19937_64 and reported
// alongside every digest so a digest can be recomputed independently.
std::vector<std::uint64_t> fingerprint_points(std::size_t count = 1);

// sum_n c_n x^n mod 2^61 - 1, coefficients read as integers in [0, m).
std::uint64_t fingerprint(const FpSeries& s, std::uint64_t point);

}  // namespace qseries
