#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Integer helpers shared by every module: primality, modular powers and
// inverses, the Kronecker symbol, divisor sums and overflow-checked products.
namespace qseries {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Least nonnegative residue of a modulo mod, for signed a.
std::uint64_t reduce(std::int64_t a, std::uint64_t mod);

// Inverse of a modulo mod; throws DomainError when gcd(a, mod) != 1.
std::uint64_t inv_mod(std::int64_t a, std::uint64_t mod);

// base^exp mod a prime, with negative exponents taken through the inverse.
std::uint64_t pow_mod_signed(std::uint64_t base, std::int64_t exp,
                             std::uint64_t mod);

// Kronecker symbol (a|b), including the (a|2), (a|-1) and (a|0) conventions.
int kronecker(std::int64_t a, std::int64_t b);

// Smallest e >= 1 with a^e = 1 (mod mod); requires gcd(a, mod) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t mod);

// x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2; least nonnegative x.
std::optional<std::uint64_t> crt(std::uint64_t r1, std::uint64_t m1,
                                 std::uint64_t r2, std::uint64_t m2);

// sigma_k(n) reduced modulo mod, by trial division.
std::uint64_t sigma_mod(std::uint64_t n, unsigned k, std::uint64_t mod);

// Overflow-checked arithmetic; throw OverflowError.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace qseries
