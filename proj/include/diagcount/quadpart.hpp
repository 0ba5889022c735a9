#pragma once

#include <cstdint>
#include <utility>

#include "diagcount/ntheory.hpp"

namespace diagcount {

/// p^k = A^2 + 2 B^2 with A = -1 (mod 4) and p not dividing A.
struct TwoBSquarePartition {
  std::uint64_t p = 0;
  unsigned k = 0;
  BigInt A;
  BigInt absB;
};

/// p^k = C^2 + D^2 with C = -1 (mod 4) and p not dividing C.
struct TwoSquarePartition {
  std::uint64_t p = 0;
  unsigned k = 0;
  BigInt C;
  BigInt absD;
};

/// Tonelli-Shanks. Errors: NonResidue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Square root of a modulo p^k by Hensel lifting a root mod p.  a must be a
/// unit modulo p.  Errors: NonResidue.
BigInt sqrt_mod_prime_power(const BigInt& a, std::uint64_t p, unsigned k);

/// Primitive solution of x^2 + d y^2 = M (d in {1, 2}) from a root r0 of
/// r0^2 = -d (mod M), by Euclidean descent.  Returns (x, y) with x, y >= 0.
/// Errors: NoRepresentation, InvalidArgument.
std::pair<BigInt, BigInt> cornacchia(unsigned d, const BigInt& M, const BigInt& r0);

/// Requires p = 3 (mod 8).  Errors: InvalidArgument.
TwoBSquarePartition partition_2B(std::uint64_t p, unsigned k);
/// Requires p = 5 (mod 8).  Errors: InvalidArgument.
TwoSquarePartition partition_D(std::uint64_t p, unsigned k);

}  // namespace diagcount
