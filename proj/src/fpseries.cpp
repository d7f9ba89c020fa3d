#include "qseries/fpseries.hpp"

#include <algorithm>
#include <string>

#include "qseries/arith.hpp"
#include "qseries/error.hpp"
#include "qseries/kernels.hpp"

namespace qseries {
namespace {

void require_same_modulus(const FpSeries& a, const FpSeries& b, const char* op) {
  if (a.modulus() != b.modulus()) {
    throw ModulusError(std::string(op) + ": modulus mismatch (" + std::to_string(a.modulus()) +
                       " vs " + std::to_string(b.modulus()) + ")");
  }
}

void require_positive(std::size_t precision, const char* op) {
  if (precision == 0) throw PrecisionError(std::string(op) + ": result would have no known coefficients");
}

// Newton iteration b <- b (2 - a b) doubling the known precision each step.
std::vector<Residue> inverse_newton(std::span<const Residue> a, std::uint32_t m) {
  const std::size_t n = a.size();
  std::vector<Residue> b(1, static_cast<Residue>(inv_mod(a[0], m)));
  std::size_t known = 1;
  while (known < n) {
    const std::size_t next = std::min(2 * known, n);
    std::vector<Residue> ab(next);
    kernels::convolve(a.first(next), b, ab, m);
    // e = 2 - ab
    for (auto& x : ab) x = static_cast<Residue>((m - x) % m);
    ab[0] = static_cast<Residue>((ab[0] + 2) % m);
    std::vector<Residue> nb(next);
    kernels::convolve(b, ab, nb, m);
    b = std::move(nb);
    known = next;
  }
  return b;
}

std::vector<Residue> inverse_recurrence(std::span<const Residue> a, std::uint32_t m) {
  const std::size_t n = a.size();
  const std::uint64_t inv0 = inv_mod(a[0], m);
  std::vector<Residue> b(n);
  b[0] = static_cast<Residue>(inv0);
  for (std::size_t k = 1; k < n; ++k) {
    std::uint64_t s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += std::uint64_t{a[j]} * b[k - j];
    s %= m;
    b[k] = static_cast<Residue>((m - s) % m * inv0 % m);
  }
  return b;
}

}  // namespace

void check_modulus(std::uint32_t m) {
  if (m < 2 || m >= kModulusLimit || !is_prime(m)) {
    throw ModulusError("modulus must be a prime below 65536, got " + std::to_string(m));
  }
}

FpSeries::FpSeries(std::uint32_t modulus, std::size_t precision)
    : modulus_(modulus), coeffs_(precision, 0) {
  check_modulus(modulus);
}

FpSeries::FpSeries(std::uint32_t modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  check_modulus(modulus);
  if (!coeffs_.empty() && *std::max_element(coeffs_.begin(), coeffs_.end()) >= modulus) {
    throw DomainError("coefficient outside [0, m)");
  }
}

FpSeries FpSeries::from_integers(std::uint32_t modulus, std::span<const std::int64_t> values) {
  check_modulus(modulus);
  std::vector<Residue> c(values.size());
  std::transform(values.begin(), values.end(), c.begin(),
                 [modulus](std::int64_t v) { return static_cast<Residue>(reduce(v, modulus)); });
  return FpSeries(modulus, std::move(c));
}

FpSeries FpSeries::constant(std::uint32_t modulus, std::size_t precision, std::int64_t c) {
  return monomial(modulus, precision, 0, c);
}

FpSeries FpSeries::monomial(std::uint32_t modulus, std::size_t precision, std::size_t degree,
                            std::int64_t c) {
  FpSeries s(modulus, precision);
  if (degree < precision) s.coeffs_[degree] = static_cast<Residue>(reduce(c, modulus));
  return s;
}

Residue FpSeries::at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw PrecisionError("coefficient " + std::to_string(n) + " beyond precision " +
                         std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

bool FpSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue r) { return r == 0; });
}

std::optional<std::size_t> FpSeries::first_nonzero() const noexcept {
  const auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](Residue r) { return r != 0; });
  if (it == coeffs_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coeffs_.begin());
}

FpSeries FpSeries::truncated(std::size_t precision) const {
  if (precision > coeffs_.size()) {
    throw PrecisionError("cannot raise precision " + std::to_string(coeffs_.size()) + " to " +
                         std::to_string(precision));
  }
  return FpSeries(modulus_, std::vector<Residue>(coeffs_.begin(),
                                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(precision)));
}

FpSeries add(const FpSeries& a, const FpSeries& b) {
  require_same_modulus(a, b, "add");
  const std::uint32_t m = a.modulus();
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Residue> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = std::uint32_t{a[i]} + b[i];
    c[i] = static_cast<Residue>(s >= m ? s - m : s);
  }
  return FpSeries(m, std::move(c));
}

FpSeries sub(const FpSeries& a, const FpSeries& b) { return add(a, negate(b)); }

FpSeries negate(const FpSeries& a) {
  const std::uint32_t m = a.modulus();
  std::vector<Residue> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = static_cast<Residue>(x == 0 ? 0 : m - x);
  return FpSeries(m, std::move(c));
}

FpSeries scale(const FpSeries& a, std::int64_t c) {
  const std::uint32_t m = a.modulus();
  const std::uint64_t k = reduce(c, m);
  std::vector<Residue> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x = static_cast<Residue>(x * k % m);
  return FpSeries(m, std::move(out));
}

FpSeries mul(const FpSeries& a, const FpSeries& b) {
  require_same_modulus(a, b, "mul");
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<Residue> c(n);
  kernels::convolve(a.coeffs(), b.coeffs(), c, a.modulus());
  return FpSeries(a.modulus(), std::move(c));
}

FpSeries invert_unit(const FpSeries& a) {
  if (a.precision() == 0) throw PrecisionError("invert_unit: empty series");
  if (a[0] == 0) throw NonUnitError("invert_unit: constant term is 0 mod " + std::to_string(a.modulus()));
  constexpr std::size_t kRecurrenceLimit = 1024;
  auto b = a.precision() <= kRecurrenceLimit ? inverse_recurrence(a.coeffs(), a.modulus())
                                             : inverse_newton(a.coeffs(), a.modulus());
  return FpSeries(a.modulus(), std::move(b));
}

FpSeries pow(const FpSeries& a, std::uint64_t e) {
  FpSeries result = FpSeries::constant(a.modulus(), a.precision(), 1);
  if (e == 0) return result;
  FpSeries base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

FpSeries u_op(const FpSeries& a, std::uint64_t M) {
  if (M == 0) throw DomainError("u_op: M must be positive");
  const std::size_t n = a.precision() == 0 ? 0 : (a.precision() - 1) / M + 1;
  require_positive(n, "u_op");
  std::vector<Residue> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i * M];
  return FpSeries(a.modulus(), std::move(c));
}

FpSeries v_op(const FpSeries& a, std::uint64_t j) { return v_op(a, j, a.precision()); }

FpSeries v_op(const FpSeries& a, std::uint64_t j, std::size_t out_precision) {
  if (j == 0) throw DomainError("v_op: j must be positive");
  if (out_precision > checked_mul(j, a.precision())) {
    throw PrecisionError("v_op: output precision " + std::to_string(out_precision) +
                         " exceeds j * N = " + std::to_string(j * a.precision()));
  }
  require_positive(out_precision, "v_op");
  std::vector<Residue> c(out_precision, 0);
  for (std::size_t i = 0; i * j < out_precision; ++i) c[i * j] = a[i];
  return FpSeries(a.modulus(), std::move(c));
}

FpSeries shift(const FpSeries& a, std::int64_t t) {
  const std::size_t n = a.precision();
  if (t >= 0) {
    const auto s = static_cast<std::size_t>(t);
    std::vector<Residue> c(n + s, 0);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(s));
    return FpSeries(a.modulus(), std::move(c));
  }
  const auto s = static_cast<std::size_t>(-t);
  if (s >= n) throw PrecisionError("shift: dropping " + std::to_string(s) + " of " + std::to_string(n) + " known coefficients");
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] != 0) {
      throw DivisibilityError("shift by " + std::to_string(t) + ": coefficient of q^" +
                              std::to_string(i) + " is nonzero");
    }
  }
  return FpSeries(a.modulus(), std::vector<Residue>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(s),
                                                    a.coeffs().end()));
}

std::optional<std::size_t> first_difference(const FpSeries& a, const FpSeries& b,
                                            std::uint64_t bound) {
  require_same_modulus(a, b, "eq_upto");
  if (a.precision() <= bound || b.precision() <= bound) {
    throw PrecisionError("eq_upto: bound " + std::to_string(bound) + " needs precision " +
                         std::to_string(bound + 1) + ", have " +
                         std::to_string(std::min(a.precision(), b.precision())));
  }
  for (std::size_t i = 0; i <= bound; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

bool eq_upto(const FpSeries& a, const FpSeries& b, std::uint64_t bound) {
  return !first_difference(a, b, bound).has_value();
}

}  // namespace qseries
