#include <cmath>

#include "diagcount/charsum.hpp"
#include "diagcount/errors.hpp"
#include "doctest.h"
#include "support/naive.hpp"

using namespace diagcount;
using cld = std::complex<long double>;

namespace {

struct Case {
  std::uint64_t p;
  unsigned s;
  std::uint64_t d;
};

const std::vector<Case> kCases = {{3, 2, 8}, {5, 1, 4}, {5, 2, 8}, {3, 4, 16}, {13, 1, 4}, {13, 2, 8},
                                  {7, 2, 16}, {11, 2, 8}, {29, 1, 4}, {3, 4, 5}, {19, 2, 8}};

}  // namespace

TEST_CASE("Gauss sums match an independent field as a multiset") {
  for (const auto& c : kCases) {
    const FieldPtr F = build_field(c.p, c.s);
    const MultChar chi = character(F, c.d);
    const auto theirs = naive::gauss_sums(c.p, c.s, c.d);
    std::vector<bool> used(theirs.size(), false);
    for (std::uint64_t j = 1; j < c.d; ++j) {
      const ComplexVal g = gauss_sum(chi.pow(static_cast<std::int64_t>(j)));
      bool found = false;
      for (std::size_t k = 0; k < theirs.size() && !found; ++k) {
        if (!used[k] && std::abs(g.value() - theirs[k]) < 1e-9L * c.d) {
          used[k] = true;
          found = true;
        }
      }
      CHECK_MESSAGE(found, "p=" << c.p << " s=" << c.s << " j=" << j);
    }
  }
}

TEST_CASE("Gauss sum magnitude and the reflection identity") {
  for (const auto& c : kCases) {
    const FieldPtr F = build_field(c.p, c.s);
    const MultChar chi = character(F, c.d);
    const long double q = static_cast<long double>(F->q());
    for (std::uint64_t j = 1; j < c.d; ++j) {
      const MultChar psi = chi.pow(static_cast<std::int64_t>(j));
      const cld g = gauss_sum(psi).value();
      CHECK(std::abs(std::abs(g) - std::sqrt(q)) < 1e-9L);
      const cld gbar = gauss_sum(psi.conj()).value();
      CHECK(std::abs(g * gbar - psi.value(F->neg(Field::one())) * q) < 1e-8L * q);
    }
  }
}

TEST_CASE("Gauss and Jacobi sums are linked by G(psi)^2 = G(psi^2) J(psi)") {
  for (const auto& c : kCases) {
    const FieldPtr F = build_field(c.p, c.s);
    const MultChar chi = character(F, c.d);
    for (std::uint64_t j = 1; j < c.d; ++j) {
      const MultChar psi = chi.pow(static_cast<std::int64_t>(j));
      if (psi.pow(2).is_trivial()) continue;
      const cld lhs = std::pow(gauss_sum(psi).value(), 2);
      const cld rhs = gauss_sum(psi.pow(2)).value() * jacobi_sum(psi).value();
      CHECK(std::abs(lhs - rhs) < 1e-8L * F->q());
    }
  }
}

TEST_CASE("precisions agree within their error bounds") {
  const FieldPtr F = build_field(3, 4);
  const MultChar chi = character(F, 16);
  for (std::int64_t j = 1; j < 16; ++j) {
    const ComplexVal d = gauss_sum(chi.pow(j), Precision::Double);
    const ComplexVal e = gauss_sum(chi.pow(j), Precision::Extended);
    const ComplexVal q = gauss_sum(chi.pow(j), Precision::Quad);
    CHECK(q.err < e.err);
    CHECK(e.err < d.err);
    CHECK(std::abs(d.value() - q.value()) <= d.err + q.err);
    CHECK(std::abs(e.value() - q.value()) <= e.err + q.err);
  }
}

TEST_CASE("Davenport-Hasse for the lift to F_{q^r}") {
  for (auto [p, s, d, r] : std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t, unsigned>>{
           {3, 2, 8, 2}, {5, 1, 4, 2}, {5, 1, 4, 3}, {13, 1, 4, 2}, {3, 1, 2, 5}, {7, 1, 3, 3}}) {
    const FieldPtr F = build_field(p, s);
    const MultChar chi = character(F, d);
    for (std::uint64_t j = 1; j < d; ++j) {
      const MultChar psi = chi.pow(static_cast<std::int64_t>(j));
      const MultChar lifted = lift_character(psi, r);
      CHECK(lifted.order() == psi.order());
      const cld lhs = -gauss_sum(lifted).value();
      const cld rhs = std::pow(-gauss_sum(psi).value(), static_cast<int>(r));
      CHECK(std::abs(lhs - rhs) < 1e-7L * std::pow(static_cast<long double>(F->q()), r / 2.0L));
    }
  }
}

TEST_CASE("lifted characters agree with the original on the subfield") {
  const FieldPtr small = build_field(5, 2);
  const FieldPtr large = build_field(5, 4);
  const MultChar chi = character(small, 8);
  const MultChar lifted = lift_character(chi, large);
  // chi'(x) = chi(N(x)); on the subfield N(x) = x^2, so chi'(y) = chi(y)^2.
  const std::uint64_t k = embedding_multiplier(*small, *large);
  CHECK(gcd_u64(k, small->group_order()) == 1);
  for (std::uint64_t t = 0; t < small->group_order(); ++t) {
    const Element y = large->exp(t * (large->group_order() / small->group_order()) * k % large->group_order());
    CHECK(large->in_subfield(y, 2));
    const auto lhs = lifted.phase(y);
    const auto rhs = chi.pow(2).phase(small->exp(t));
    REQUIRE(lhs.has_value());
    REQUIRE(rhs.has_value());
    CHECK(*lhs * (chi.order() / lifted.order()) % chi.order() ==
          *rhs * (chi.order() / chi.pow(2).order()) % chi.order());
  }
}

TEST_CASE("character construction errors") {
  const FieldPtr F = build_field(3, 2);
  CHECK_THROWS_AS(character(F, 3), Error);
  CHECK_THROWS_AS(gauss_sum(character(F, 1)), Error);
  CHECK(character(F, 8).order() == 8);
  CHECK(quadratic_character(F).order() == 2);
}

TEST_CASE("identity audits pass on a spread of fields") {
  for (auto [p, s, m] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{
           {3, 2, 3}, {3, 4, 3}, {3, 4, 4}, {5, 1, 2}, {5, 2, 2}, {5, 2, 3}, {5, 4, 4}, {13, 2, 3},
           {11, 2, 3}, {19, 2, 3}, {29, 1, 2}, {3, 6, 3}}) {
    const FieldPtr F = build_field(p, s);
    const AuditReport r = audit_lemmas(F, m);
    int applicable = 0;
    for (const auto& e : r.entries) {
      applicable += e.applicable;
      CHECK_MESSAGE(e.passed, "p=" << p << " s=" << s << " m=" << m << " " << e.id << " residual " << e.residual);
    }
    CHECK(applicable >= 5);
  }
  CHECK_THROWS_AS(audit_lemmas(build_field(3, 2), 4), Error);
}
