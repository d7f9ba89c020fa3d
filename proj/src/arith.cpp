#include "qseries/arith.hpp"

#include <numeric>
#include <string>

#include "qseries/error.hpp"

namespace qseries {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t mod) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % mod;
  const std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % mod;
  return mod - 1 - r;
}

std::uint64_t inv_mod(std::int64_t a, std::uint64_t mod) {
  if (mod == 0) throw DomainError("inv_mod: zero modulus");
  __int128 old_r = static_cast<__int128>(reduce(a, mod)), r = mod;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw DomainError("inv_mod: " + std::to_string(a) + " is not invertible modulo " +
                      std::to_string(mod));
  }
  __int128 x = old_s % static_cast<__int128>(mod);
  if (x < 0) x += mod;
  return static_cast<std::uint64_t>(x);
}

std::uint64_t pow_mod_signed(std::uint64_t base, std::int64_t exp, std::uint64_t mod) {
  if (exp >= 0) return pow_mod(base, static_cast<std::uint64_t>(exp), mod);
  return pow_mod(inv_mod(static_cast<std::int64_t>(base % mod), mod),
                 static_cast<std::uint64_t>(-exp), mod);
}

int kronecker(std::int64_t a, std::int64_t b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;

  int result = 1;
  // strip powers of two from b using the (a|2) rule
  while (b % 2 == 0) {
    b /= 2;
    const std::int64_t r8 = ((a % 8) + 8) % 8;
    if (r8 == 3 || r8 == 5) result = -result;
  }
  if (b < 0) {
    b = -b;
    if (a < 0) result = -result;
  }
  // b is now odd and positive: Jacobi symbol with a reduced into [0, b)
  std::int64_t aa = static_cast<std::int64_t>(reduce(a, static_cast<std::uint64_t>(b)));
  std::int64_t bb = b;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      const std::int64_t r8 = bb % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(aa, bb);
    if (aa % 4 == 3 && bb % 4 == 3) result = -result;
    aa %= bb;
  }
  return bb == 1 ? result : 0;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod) {
  if (std::gcd(a % mod, mod) != 1) throw DomainError("multiplicative_order: not a unit");
  if (mod == 1) return 1;
  std::uint64_t x = a % mod;
  for (std::uint64_t e = 1;; ++e) {
    if (x == 1) return e;
    x = mul_mod(x, a, mod);
  }
}

std::optional<std::uint64_t> crt(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2,
                                 std::uint64_t m2) {
  if (std::gcd(m1, m2) != 1) return std::nullopt;
  const std::uint64_t m = checked_mul(m1, m2);
  r1 %= m1;
  r2 %= m2;
  // x = r1 + m1 * t, t = (r2 - r1) / m1 (mod m2)
  const std::uint64_t diff = (r2 + m2 - r1 % m2) % m2;
  const std::uint64_t t = mul_mod(diff, inv_mod(static_cast<std::int64_t>(m1 % m2), m2), m2);
  return (r1 + static_cast<std::uint64_t>(static_cast<unsigned __int128>(m1) * t % m)) % m;
}

std::uint64_t sigma_mod(std::uint64_t n, unsigned k, std::uint64_t mod) {
  if (n == 0) return 0;
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total = (total + pow_mod(d, k, mod)) % mod;
    const std::uint64_t e = n / d;
    if (e != d) total = (total + pow_mod(e, k, mod)) % mod;
  }
  return total;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace qseries
