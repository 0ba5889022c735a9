#include "diagcount/closed_form.hpp"
#include "diagcount/errors.hpp"
#include "diagcount/quadpart.hpp"
#include "doctest.h"
#include "support/naive.hpp"

using namespace diagcount;

TEST_CASE("Tonelli-Shanks finds a root of every residue") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 41ULL, 97ULL, 113ULL, 193ULL, 257ULL, 65537ULL}) {
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 400); ++a) {
      const bool residue = powmod(a, (p - 1) / 2, p) == 1;
      if (residue) {
        const std::uint64_t r = sqrt_mod(a, p);
        CHECK(mulmod(r, r, p) == a);
      } else {
        CHECK_THROWS_AS(sqrt_mod(a, p), Error);
      }
    }
  }
}

TEST_CASE("Hensel lifting to prime powers") {
  for (std::uint64_t p : {3ULL, 5ULL, 11ULL, 13ULL}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const BigInt M = ipow(p, k);
      const BigInt a = M - 2;  // -2
      if (powmod(p - 2, (p - 1) / 2, p) != 1) continue;
      const BigInt r = sqrt_mod_prime_power(a, p, k);
      CHECK((r * r - a) % M == 0);
    }
  }
  CHECK_THROWS_AS(sqrt_mod_prime_power(BigInt(9), 3, 2), Error);
}

TEST_CASE("Cornacchia descent") {
  // 3^5 = 243 = 13^2 + 2 * 6^2 ... the root of -2 mod 243 drives the descent.
  const BigInt M = 243;
  const BigInt r0 = sqrt_mod_prime_power(M - 2, 3, 5);
  const auto [x, y] = cornacchia(2, M, r0);
  CHECK(x * x + 2 * y * y == M);
  CHECK_THROWS_AS(cornacchia(3, M, r0), Error);
  CHECK_THROWS_AS(cornacchia(2, M, r0 + 1), Error);
}

TEST_CASE("normalized partitions equal the exhaustive search") {
  for (std::uint64_t p : {3ULL, 11ULL, 19ULL}) {
    for (unsigned k = 1; naive::ipow(p, k) <= 200000; ++k) {
      const auto reps = naive::representations(naive::ipow(p, k), 2, p);
      REQUIRE(reps.size() == 1);
      const auto part = partition_2B(p, k);
      CHECK(part.A == naive::normalize_first(reps[0].first));
      CHECK(part.absB == reps[0].second);
    }
  }
  for (std::uint64_t p : {5ULL, 13ULL, 29ULL}) {
    for (unsigned k = 1; naive::ipow(p, k) <= 200000; ++k) {
      // x^2 + y^2 lists both (C, D) and (D, C); keep the odd first component.
      std::vector<std::pair<naive::u64, naive::u64>> odd;
      for (auto r : naive::representations(naive::ipow(p, k), 1, p)) {
        if (r.first % 2 == 1 && r.second % p != 0) odd.push_back(r);
      }
      REQUIRE(odd.size() == 1);
      const auto part = partition_D(p, k);
      CHECK(part.C == naive::normalize_first(odd[0].first));
      CHECK(part.absD == odd[0].second);
    }
  }
}

TEST_CASE("squaring coherence of partitions") {
  for (std::uint64_t p : {3ULL, 11ULL, 19ULL}) {
    for (unsigned k = 1; k <= 5; k += 2) {
      const auto a = partition_2B(p, k);
      CHECK(partition_2B(p, 2 * k).A == a.A * a.A - 2 * a.absB * a.absB);
    }
  }
  for (std::uint64_t p : {5ULL, 13ULL, 29ULL}) {
    for (unsigned k = 1; k <= 5; k += 2) {
      const auto c = partition_D(p, k);
      CHECK(partition_D(p, 2 * k).C == c.absD * c.absD - c.C * c.C);
    }
  }
}

TEST_CASE("partition preconditions and caching") {
  CHECK_THROWS_AS(partition_2B(5, 1), Error);
  CHECK_THROWS_AS(partition_D(3, 1), Error);
  CHECK_THROWS_AS(partition_2B(3, 0), Error);
  const auto a = cached_partition_2B(3, 4);
  const auto b = cached_partition_2B(3, 4);
  CHECK(a.A == b.A);
  CHECK(a.A == 7);
  CHECK(a.absB == 4);
}
