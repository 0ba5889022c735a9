#include "diagcount/quadpart.hpp"

#include "diagcount/errors.hpp"

namespace diagcount {

std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) {
    throw Error(Errc::NonResidue, std::to_string(a) + " is not a square modulo " + std::to_string(p));
  }
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned e = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++e;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t x = powmod(a, (q + 1) / 2, p);
  std::uint64_t t = powmod(a, q, p);
  unsigned m = e;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

BigInt sqrt_mod_prime_power(const BigInt& a, std::uint64_t p, unsigned k) {
  const BigInt bp(std::to_string(p));
  BigInt a_mod_p = a % bp;
  if (a_mod_p < 0) a_mod_p += bp;
  if (a_mod_p == 0) throw Error(Errc::InvalidArgument, "Hensel lifting needs a unit");
  BigInt r(std::to_string(sqrt_mod(a_mod_p.get_ui(), p)));
  BigInt modulus = bp;
  for (unsigned j = 1; j < k; ++j) {
    modulus *= bp;
    // r <- r - (r^2 - a) / (2r) mod p^{j+1}
    BigInt f = (r * r - a) % modulus;
    BigInt two_r = (2 * r) % modulus;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), modulus.get_mpz_t());
    r = (r - f * inv) % modulus;
    if (r < 0) r += modulus;
  }
  return r;
}

std::pair<BigInt, BigInt> cornacchia(unsigned d, const BigInt& M, const BigInt& r0) {
  if (d != 1 && d != 2) throw Error(Errc::InvalidArgument, "cornacchia supports d = 1 or 2");
  if (M <= 1) throw Error(Errc::InvalidArgument, "modulus must exceed 1");
  BigInt r = r0 % M;
  if (r < 0) r += M;
  if ((r * r + d) % M != 0) throw Error(Errc::InvalidArgument, "r0 is not a root of x^2 + d modulo M");
  if (2 * r > M) r = M - r;
  BigInt a = M;
  BigInt b = r;
  while (b * b >= M) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  BigInt rest = M - b * b;
  if (rest % d != 0) throw Error(Errc::NoRepresentation, "no primitive representation");
  rest /= d;
  BigInt y;
  if (!mpz_perfect_square_p(rest.get_mpz_t())) throw Error(Errc::NoRepresentation, "no primitive representation");
  mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
  return {b, y};
}

namespace {

// The unique sign of an odd x with sign * x = 3 (mod 4).
BigInt normalize_minus_one_mod_4(BigInt x) {
  BigInt r = x % 4;
  if (r < 0) r += 4;
  if (r == 1) x = -x;
  return x;
}

}  // namespace

TwoBSquarePartition partition_2B(std::uint64_t p, unsigned k) {
  if (p % 8 != 3 || !is_prime_u64(p)) throw Error(Errc::InvalidArgument, "partition_2B needs a prime p = 3 mod 8");
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  const BigInt M = ipow(p, k);
  const BigInt root = sqrt_mod_prime_power(BigInt(-2), p, k);
  auto [x, y] = cornacchia(2, M, root);
  TwoBSquarePartition out{p, k, normalize_minus_one_mod_4(x), y};
  return out;
}

TwoSquarePartition partition_D(std::uint64_t p, unsigned k) {
  if (p % 8 != 5 || !is_prime_u64(p)) throw Error(Errc::InvalidArgument, "partition_D needs a prime p = 5 mod 8");
  if (k == 0) throw Error(Errc::InvalidArgument, "k must be positive");
  const BigInt M = ipow(p, k);
  const BigInt root = sqrt_mod_prime_power(BigInt(-1), p, k);
  auto [x, y] = cornacchia(1, M, root);
  // Exactly one of x, y is odd; that one is C.
  if (mpz_even_p(x.get_mpz_t())) std::swap(x, y);
  return TwoSquarePartition{p, k, normalize_minus_one_mod_4(x), y};
}

}  // namespace diagcount
