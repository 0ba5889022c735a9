#include <random>

#include "diagcount/errors.hpp"
#include "diagcount/extensions.hpp"
#include "diagcount/oracle.hpp"
#include "doctest.h"
#include "support/naive.hpp"

using namespace diagcount;

namespace {

Errc error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Internal;
}

std::vector<Term> pure(unsigned n, std::uint64_t d) { return std::vector<Term>(n, Term{Field::one(), d}); }

}  // namespace

TEST_CASE("exponent reduction") {
  CHECK(reduce_exponents({4, 6}, 13) == std::vector<std::uint64_t>{2, 2});
  CHECK(reduce_exponents({8, 8, 8}, 81) == std::vector<std::uint64_t>{8, 8, 8});
  CHECK(reduce_exponents({40, 8, 8}, 81) == std::vector<std::uint64_t>{8, 8, 8});
  CHECK(reduce_exponents({7}, 81) == std::vector<std::uint64_t>{1});
  CHECK(reduce_exponents({16, 16}, 81) == std::vector<std::uint64_t>{16, 16});
  CHECK(reduce_exponents({32, 16}, 81) == std::vector<std::uint64_t>{16, 16});
  CHECK_THROWS_AS(reduce_exponents({}, 81), Error);
}

TEST_CASE("reduced exponents give the same count") {
  std::mt19937_64 rng(17);
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {5, 2}, {3, 4}, {13, 1}, {7, 2}, {5, 3}}) {
    const FieldPtr F = build_field(p, s);
    for (int trial = 0; trial < 8; ++trial) {
      const unsigned vars = 2 + rng() % 3;
      std::vector<std::uint64_t> d;
      for (unsigned j = 0; j < vars; ++j) d.push_back(1 + rng() % 48);
      const auto w = reduce_exponents(d, F->q());
      std::vector<Term> td, tw;
      for (unsigned j = 0; j < vars; ++j) {
        td.push_back(Term{Field::one(), d[j]});
        tw.push_back(Term{Field::one(), w[j]});
      }
      CHECK(dp_count_terms(F, td) == dp_count_terms(F, tw));
    }
  }
}

TEST_CASE("coprime scaled exponents") {
  const ProblemSpec base = classify(3, 4, 3, 3);
  const FieldPtr F = build_field(3, 4);
  CHECK(count_coprime_scaled(base, {5, 1, 1}) == 7041);
  CHECK(count_coprime_scaled(base, {1, 1, 1}) == count(base).N);
  CHECK(dp_count_terms(F, {{Field::one(), 40}, {Field::one(), 8}, {Field::one(), 8}}) == 7041);
  CHECK(count_coprime_scaled(base, {2, 1, 1}) == dp_count_terms(F, {{Field::one(), 16}, {Field::one(), 8}, {Field::one(), 8}}));
  CHECK(error_code([&] { count_coprime_scaled(base, {5, 5, 1}); }) == Errc::CoprimalityViolation);
  CHECK(error_code([&] { count_coprime_scaled(base, {3, 1, 1}); }) == Errc::DivisibilityViolation);
  CHECK(error_code([&] { count_coprime_scaled(base, {1, 1}); }) == Errc::InvalidArgument);

  const ProblemSpec b5 = classify(5, 4, 2, 3);
  const FieldPtr F5 = build_field(5, 4);
  CHECK(count_coprime_scaled(b5, {3, 13, 1}) ==
        dp_count_terms(F5, {{Field::one(), 12}, {Field::one(), 52}, {Field::one(), 4}}));
}

TEST_CASE("semiprimitive levels") {
  CHECK(semiprimitive_level(3, 4, 5) == 2);
  CHECK(semiprimitive_level(5, 2, 3) == 1);
  CHECK(semiprimitive_level(3, 6, 7) == 3);
  CHECK(error_code([] { semiprimitive_level(3, 4, 11); }) == Errc::NotSemiprimitive);
  CHECK(error_code([] { semiprimitive_level(5, 2, 13); }) == Errc::NotSemiprimitive);
}

TEST_CASE("odd semiprimitive mixing matches the per-variable count") {
  struct Case {
    std::uint64_t p;
    unsigned s, m;
    std::vector<OddPart> parts;
  };
  const std::vector<Case> cases = {
      {3, 4, 3, {{5, 1}}}, {3, 4, 3, {{5, 2}}}, {3, 4, 3, {{5, 3}}}, {3, 4, 4, {{5, 2}}},  {5, 2, 2, {{3, 3}}},
      {5, 4, 2, {{3, 3}}}, {5, 4, 3, {{3, 1}, {13, 1}}},            {13, 2, 2, {{7, 2}}}, {29, 2, 3, {{3, 3}}},
      {11, 2, 3, {{3, 2}}}, {19, 2, 3, {{5, 1}}}, {3, 6, 3, {{7, 3}}}, {3, 6, 3, {{7, 2}}}};
  for (const auto& c : cases) {
    const FieldPtr F = build_field(c.p, c.s);
    for (unsigned n = 1; n <= 3; ++n) {
      std::vector<Term> terms = pure(n, std::uint64_t{1} << c.m);
      for (const auto& part : c.parts) {
        for (unsigned i = 0; i < part.n; ++i) terms.push_back(Term{Field::one(), part.u});
      }
      const ProblemSpec base = classify(c.p, c.s, c.m, n);
      CHECK_MESSAGE(count_with_odd_semiprimitive(base, c.parts) == dp_count_terms(F, terms),
                    "p=" << c.p << " s=" << c.s << " m=" << c.m << " n=" << n);
    }
  }
}

TEST_CASE("literal sign disagrees exactly when s/(2l) and n_j are odd") {
  const FieldPtr F = build_field(3, 4);  // u = 5, l = 2, s/(2l) = 1
  const ProblemSpec base = classify(3, 4, 3, 2);
  SemiprimitiveOptions literal;
  literal.literal_sign = true;
  std::vector<Term> terms = pure(2, 8);
  for (int i = 0; i < 3; ++i) terms.push_back(Term{Field::one(), 5});
  const BigInt dp = dp_count_terms(F, terms);
  CHECK(count_with_odd_semiprimitive(base, {{5, 3}}) == dp);
  CHECK(count_with_odd_semiprimitive(base, {{5, 3}}, literal) == BigInt("38147841"));
  CHECK(dp == BigInt("47945601"));
  // Even n_j: the two signs coincide.
  CHECK(count_with_odd_semiprimitive(base, {{5, 2}}, literal) == count_with_odd_semiprimitive(base, {{5, 2}}));
  // s/(2l) = 2: the two signs coincide.
  const ProblemSpec b5 = classify(5, 4, 2, 1);
  CHECK(count_with_odd_semiprimitive(b5, {{3, 3}}, literal) == count_with_odd_semiprimitive(b5, {{3, 3}}));
}

TEST_CASE("odd semiprimitive formula arithmetic") {
  // n_1 = 1 kills the correction term: N = q^n.
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(count_with_odd_semiprimitive(classify(3, 4, 3, n), {{5, 1}}) == ipow(81, n));
  }
  const ProblemSpec base = classify(3, 4, 3, 3);
  CHECK(error_code([&] { count_with_odd_semiprimitive(base, {{4, 1}}); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { count_with_odd_semiprimitive(base, {{1, 1}}); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { count_with_odd_semiprimitive(base, {{5, 0}}); }) == Errc::InvalidArgument);
  CHECK(error_code([&] { count_with_odd_semiprimitive(base, {{5, 1}, {15, 1}}); }) == Errc::CoprimalityViolation);
  CHECK(error_code([&] { count_with_odd_semiprimitive(base, {{11, 1}}); }) == Errc::NotSemiprimitive);
  // 5 | 3^2 + 1, but 4 does not divide 6.
  CHECK(error_code([] { count_with_odd_semiprimitive(classify(3, 6, 3, 2), {{5, 1}}); }) ==
        Errc::DivisibilityViolation);
}

TEST_CASE("quadratic form formula matches the per-variable count") {
  for (auto [p, s, m] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {3, 2, 3}, {3, 4, 3}, {5, 1, 2}, {5, 2, 2}, {5, 2, 3}, {13, 1, 2}, {13, 2, 2}}) {
    const FieldPtr F = build_field(p, s);
    for (unsigned n = 1; n <= 3; ++n) {
      for (std::vector<std::uint32_t> bs : std::vector<std::vector<std::uint32_t>>{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1, 2}}) {
        std::vector<Element> coeffs;
        std::vector<Term> terms = pure(n, std::uint64_t{1} << m);
        for (auto b : bs) {
          const Element e{b % static_cast<std::uint32_t>(p)};
          coeffs.push_back(e);
          terms.push_back(Term{e, 2});
        }
        const ProblemSpec base = classify(p, s, m, n);
        CHECK(count_with_quadratic_form(base, coeffs, *F) == dp_count_terms(F, terms));
      }
    }
  }
}

TEST_CASE("quadratic form count depends only on the square class of the determinant") {
  const FieldPtr F = build_field(5, 2);
  const ProblemSpec base = classify(5, 2, 3, 2);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Element> b(4);
    for (auto& x : b) x = Element{static_cast<std::uint32_t>(1 + rng() % 24)};
    const BigInt ref = count_with_quadratic_form(base, b, *F);
    // Rescale one coefficient by a nonzero square and permute.
    std::vector<Element> c = b;
    const Element t{static_cast<std::uint32_t>(1 + rng() % 24)};
    c[0] = F->mul(c[0], F->mul(t, t));
    std::swap(c[1], c[3]);
    CHECK(count_with_quadratic_form(base, c, *F) == ref);
    std::vector<Term> terms = pure(2, 8);
    for (auto x : c) terms.push_back(Term{x, 2});
    CHECK(dp_count_terms(F, terms) == ref);
  }
}

TEST_CASE("quadratic form special cases and errors") {
  const FieldPtr F = build_field(3, 4);
  // q = 81 = 1 mod 4, so eta(-1) = 1; over F_9 too.  Over F_27, eta(-1) = -1.
  const ProblemSpec base = classify(3, 4, 3, 2);
  const BigInt N = count(base).N;
  CHECK(count_with_quadratic_form(base, {Field::one(), Field::one()}, *F) == ipow(81, 3) + 81 * (N - 81));
  const FieldPtr F27 = build_field(3, 3);
  const ProblemSpec b27 = classify(3, 3, 1, 2);
  const BigInt N27 = count(b27).N;
  CHECK(count_with_quadratic_form(b27, {Field::one(), Field::one()}, *F27) == ipow(27, 3) - 27 * (N27 - 27));
  CHECK(error_code([&] { count_with_quadratic_form(base, 3, Field::one(), *F); }) == Errc::OddK);
  CHECK(error_code([&] { count_with_quadratic_form(base, 2, Field::zero(), *F); }) == Errc::DegenerateForm);
  CHECK(error_code([&] { count_with_quadratic_form(base, {Field::one(), Field::zero()}, *F); }) ==
        Errc::DegenerateForm);
  CHECK(error_code([&] { count_with_quadratic_form(base, 2, Field::one(), *F27); }) == Errc::SubfieldMismatch);
}

TEST_CASE("two-variable quadratic form count") {
  // N for two 2^m-th powers plus a form in k variables, from the pair count.
  for (auto [p, s, m] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{3, 4, 3}, {3, 4, 4}, {5, 2, 2}, {13, 2, 3}}) {
    const FieldPtr F = build_field(p, s);
    const ProblemSpec base = classify(p, s, m, 2);
    const BigInt q = base.q;
    const BigInt bracket = m + 1 <= base.v2 ? BigInt((BigInt(1) << m) - 1) : BigInt(-1);
    for (unsigned k : {2u, 4u}) {
      std::vector<Element> b(k, Field::one());
      const int eta = quadratic_character_value(*F, k % 4 == 2 ? F->neg(Field::one()) : Field::one());
      BigInt qk2;
      mpz_pow_ui(qk2.get_mpz_t(), q.get_mpz_t(), k / 2);
      BigInt qk1;
      mpz_pow_ui(qk1.get_mpz_t(), q.get_mpz_t(), k + 1);
      CHECK(count_with_quadratic_form(base, b, *F) == qk1 + eta * qk2 * (q - 1) * bracket);
    }
  }
}
