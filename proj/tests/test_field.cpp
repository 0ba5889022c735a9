#include <random>
#include <set>

#include "diagcount/errors.hpp"
#include "diagcount/field.hpp"
#include "doctest.h"
#include "support/naive.hpp"

using namespace diagcount;

namespace {

const std::vector<std::pair<std::uint64_t, unsigned>> kFields = {{3, 1}, {5, 1}, {3, 2}, {5, 2}, {3, 4},
                                                                  {7, 2}, {13, 2}, {3, 5}, {11, 2}, {5, 4}};

}  // namespace

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (auto [p, s] : kFields) {
    const FieldPtr F = build_field(p, s);
    const auto q = static_cast<std::uint32_t>(F->q());
    for (int i = 0; i < 300; ++i) {
      const Element a{static_cast<std::uint32_t>(rng() % q)}, b{static_cast<std::uint32_t>(rng() % q)},
          c{static_cast<std::uint32_t>(rng() % q)};
      CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->add(a, F->neg(a)) == Field::zero());
      if (a.index != 0) CHECK(F->mul(a, F->inv(a)) == Field::one());
    }
  }
}

TEST_CASE("exp and dlog are inverse and the generator is primitive") {
  for (auto [p, s] : kFields) {
    const FieldPtr F = build_field(p, s);
    std::set<std::uint32_t> seen;
    for (std::uint64_t k = 0; k < F->group_order(); ++k) {
      const Element x = F->exp(k);
      seen.insert(x.index);
      CHECK(F->dlog(x) == k);
    }
    CHECK(seen.size() == F->group_order());
    CHECK_THROWS_AS(F->dlog(Field::zero()), Error);
  }
}

TEST_CASE("trace is additive, lands in F_p, and matches the Frobenius sum") {
  for (auto [p, s] : kFields) {
    const FieldPtr F = build_field(p, s);
    for (std::uint32_t x = 0; x < F->q(); ++x) {
      Element acc = Field::zero(), y{x};
      for (unsigned i = 0; i < s; ++i) {
        acc = F->add(acc, y);
        y = F->pow(y, p);
      }
      CHECK(acc.index == F->trace(Element{x}));
      CHECK(F->trace(Element{x}) < p);
      CHECK(F->pow(Element{x}, F->q()) == Element{x});
    }
  }
}

TEST_CASE("norm lands in the subfield") {
  const FieldPtr F = build_field(3, 4);
  for (std::uint32_t x = 1; x < F->q(); ++x) {
    CHECK(F->in_subfield(F->norm(Element{x}, 2), 2));
    CHECK(F->in_subfield(F->norm(Element{x}, 1), 1));
  }
  CHECK_THROWS_AS(F->norm(Element{1}, 3), Error);
}

TEST_CASE("power value counts agree with an independently built field") {
  for (auto [p, s] : kFields) {
    if (naive::ipow(p, s) > 400) continue;
    const FieldPtr F = build_field(p, s);
    const naive::Gf G(p, s);
    for (std::uint64_t d : {2ULL, 4ULL, 8ULL}) {
      std::set<std::uint32_t> ours;
      std::set<std::uint64_t> theirs;
      for (std::uint32_t x = 0; x < F->q(); ++x) {
        ours.insert(F->pow(Element{x}, d).index);
        theirs.insert(G.pow(x, d));
      }
      CHECK(ours.size() == theirs.size());
    }
  }
}

TEST_CASE("for_each_translate visits x and x + v") {
  const FieldPtr F = build_field(5, 2);
  for (std::uint32_t v = 0; v < F->q(); ++v) {
    std::uint32_t expected_x = 0;
    F->for_each_translate(Element{v}, [&](Element x, Element y) {
      CHECK(x.index == expected_x++);
      CHECK(y == F->add(x, Element{v}));
    });
    CHECK(expected_x == F->q());
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_field(4, 2), Error);
  CHECK_THROWS_AS(build_field(2, 3), Error);
  try {
    build_field(3, 12, 1000);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("modulus is irreducible and fields are deterministic") {
  for (auto [p, s] : kFields) {
    const FieldPtr F = build_field(p, s);
    CHECK(poly::is_irreducible(F->modulus(), p));
    CHECK(build_field(p, s)->modulus() == F->modulus());
    CHECK(build_field(p, s)->generator() == F->generator());
  }
}
