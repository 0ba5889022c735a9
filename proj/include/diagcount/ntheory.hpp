#pragma once

// Word-size number theory helpers shared by the field builder, the
// partition solver and the extension combinators.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace diagcount {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// 2-adic valuation; nu2(0) is undefined and returns 0.
unsigned nu2(std::uint64_t n);
unsigned nu2(const BigInt& n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

BigInt ipow(std::uint64_t base, unsigned long exp);

/// p^s as a 64-bit value, or 0 when it overflows.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace diagcount
