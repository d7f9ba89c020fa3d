#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qseries {

using Residue = std::uint16_t;

// Largest admissible modulus (exclusive); residues fit in 16 bits.
inline constexpr std::uint32_t kModulusLimit = 1u << 16;

// Truncated power series sum_{n < N} c_n q^n with coefficients in Z/mZ, m prime.
//
// The series is known modulo q^N: every coefficient below the precision is
// exact and nothing above it is known. Operations that would need an unknown
// coefficient throw PrecisionError instead of zero-filling. Values are
// immutable after construction.
class FpSeries {
 public:
  // Zero series of the given precision.
  FpSeries(std::uint32_t modulus, std::size_t precision);
  // Takes residues already in [0, modulus); precision is coeffs.size().
  FpSeries(std::uint32_t modulus, std::vector<Residue> coeffs);

  static FpSeries from_integers(std::uint32_t modulus, std::span<const std::int64_t> values);
  static FpSeries constant(std::uint32_t modulus, std::size_t precision, std::int64_t c);
  static FpSeries monomial(std::uint32_t modulus, std::size_t precision, std::size_t degree,
                           std::int64_t c);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  Residue operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  Residue at(std::size_t n) const;
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  std::optional<std::size_t> first_nonzero() const noexcept;
  // Same series known to a smaller precision.
  FpSeries truncated(std::size_t precision) const;

  bool operator==(const FpSeries&) const = default;

 private:
  std::uint32_t modulus_;
  std::vector<Residue> coeffs_;
};

// Throws ModulusError unless m is a prime below kModulusLimit.
void check_modulus(std::uint32_t m);

FpSeries add(const FpSeries& a, const FpSeries& b);
FpSeries sub(const FpSeries& a, const FpSeries& b);
FpSeries negate(const FpSeries& a);
FpSeries scale(const FpSeries& a, std::int64_t c);
FpSeries mul(const FpSeries& a, const FpSeries& b);

// Multiplicative inverse modulo q^N; the constant term must be a unit.
FpSeries invert_unit(const FpSeries& a);
FpSeries pow(const FpSeries& a, std::uint64_t e);

// sum a(Mn) q^n. Coefficient n is known iff Mn < N, so the result has
// precision ceil(N / M).
FpSeries u_op(const FpSeries& a, std::uint64_t M);
// sum a(n) q^{jn} at the input's precision.
FpSeries v_op(const FpSeries& a, std::uint64_t j);
// Same with an explicit output precision, at most j * N.
FpSeries v_op(const FpSeries& a, std::uint64_t j, std::size_t out_precision);

// Multiplication by q^t. The result has precision N + t: a positive shift
// prepends t zeros, a negative shift drops |t| coefficients that must vanish.
FpSeries shift(const FpSeries& a, std::int64_t t);

// Coefficientwise agreement at degrees 0..bound. Both precisions must exceed
// bound.
bool eq_upto(const FpSeries& a, const FpSeries& b, std::uint64_t bound);
// First degree <= bound where a and b differ, if any.
std::optional<std::size_t> first_difference(const FpSeries& a, const FpSeries& b,
                                            std::uint64_t bound);

inline FpSeries operator+(const FpSeries& a, const FpSeries& b) { return add(a, b); }
inline FpSeries operator-(const FpSeries& a, const FpSeries& b) { return sub(a, b); }
inline FpSeries operator*(const FpSeries& a, const FpSeries& b) { return mul(a, b); }
inline FpSeries operator*(std::int64_t c, const FpSeries& a) { return scale(a, c); }

}  // namespace qseries
