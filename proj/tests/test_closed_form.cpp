#include "diagcount/closed_form.hpp"
#include "diagcount/errors.hpp"
#include "diagcount/oracle.hpp"
#include "diagcount/table1.hpp"
#include "doctest.h"
#include "support/grid.hpp"
#include "support/naive.hpp"

using namespace diagcount;

namespace {

Errc error_of(std::uint64_t p, unsigned s, unsigned m, unsigned n) {
  try {
    classify(p, s, m, n);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("classify rejects invalid specifications") {
  CHECK(error_of(2, 3, 1, 2) == Errc::NotPrime);
  CHECK(error_of(9, 1, 1, 2) == Errc::NotPrime);
  CHECK(error_of(3, 0, 1, 2) == Errc::InvalidArgument);
  CHECK(error_of(3, 2, 1, 0) == Errc::InvalidArgument);
  CHECK(error_of(7, 1, 3, 2) == Errc::UnsupportedResidue);
  CHECK(error_of(17, 1, 2, 2) == Errc::UnsupportedResidue);
  CHECK(error_of(3, 1, 2, 2) == Errc::BelowThreshold);
  CHECK(error_of(3, 2, 4, 2) == Errc::OrderNotDividing);
  CHECK(error_of(5, 1, 3, 2) == Errc::OrderNotDividing);
}

TEST_CASE("classify assigns case tags") {
  CHECK(classify(7, 1, 1, 3).tag == CaseTag::Squares);
  CHECK(classify(7, 2, 2, 3).tag == CaseTag::QuarticW);
  CHECK(classify(3, 4, 3, 3).tag == CaseTag::T1);
  CHECK(classify(3, 2, 3, 3).tag == CaseTag::T2);
  CHECK(classify(5, 2, 2, 3).tag == CaseTag::T3);
  CHECK(classify(5, 1, 2, 3).tag == CaseTag::T4);
  const ProblemSpec s = classify(3, 8, 5, 3);
  CHECK(s.q == 6561);
  CHECK(s.v2 == 5);
  CHECK(parse_case_tag("T3") == CaseTag::T3);
  CHECK_THROWS_AS(parse_case_tag("T9"), Error);
}

TEST_CASE("reference table rows") {
  for (const GoldenRow& g : kTable1) {
    const CountResult r = count(classify(g.p, g.s, g.m, g.n));
    CHECK_MESSAGE(r.N == BigInt(g.N), "(" << g.p << "," << g.s << "," << g.m << "," << g.n << ")");
  }
}

TEST_CASE("closed forms agree with the convolution count on small grid fields") {
  for (const auto& c : grid::cases(729)) {
    const auto dp = dp_count_series(build_field(c.p, c.s), std::uint64_t{1} << c.m, 6);
    for (unsigned n = 1; n <= 6; ++n) {
      const ProblemSpec spec = classify(c.p, c.s, c.m, n);
      CHECK_MESSAGE(count(spec).N == dp[n - 1], "p=" << c.p << " s=" << c.s << " m=" << c.m << " n=" << n);
    }
  }
}

TEST_CASE("closed forms agree with enumeration over an independent field") {
  for (const auto& c : grid::cases(169)) {
    for (unsigned n = 1; naive::ipow(c.q, n) <= 300000; ++n) {
      const ProblemSpec spec = classify(c.p, c.s, c.m, n);
      CHECK(count(spec).N == naive::count_diagonal(c.p, c.s, std::uint64_t{1} << c.m, n));
    }
  }
}

TEST_CASE("squares and quartic cases against the convolution count") {
  for (auto [p, s] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {11, 2}, {13, 1}, {17, 2}, {19, 2}}) {
    const auto sq = dp_count_series(build_field(p, s), 2, 6);
    for (unsigned n = 1; n <= 6; ++n) CHECK(count(classify(p, s, 1, n)).N == sq[n - 1]);
    if (p % 4 == 3 && s % 2 == 0) {
      const auto qu = dp_count_series(build_field(p, s), 4, 6);
      for (unsigned n = 1; n <= 6; ++n) {
        const ProblemSpec spec = classify(p, s, 2, n);
        CHECK(spec.tag == CaseTag::QuarticW);
        CHECK(count(spec).N == qu[n - 1]);
      }
    }
  }
}

TEST_CASE("one and two variables reduce to the elementary counts") {
  for (const auto& c : grid::cases()) {
    CHECK(count(classify(c.p, c.s, c.m, 1)).N == 1);
    const ProblemSpec two = classify(c.p, c.s, c.m, 2);
    CHECK(count(two).N == count_pair(two).N);
    CHECK(count_pair(two).N == count_pair(classify(c.p, c.s, c.m, 5)).N);
  }
}

TEST_CASE("paired expansion and direct expansion agree") {
  EvalOptions direct;
  direct.direct_pairs = true;
  for (const auto& c : grid::cases()) {
    for (unsigned n : {3u, 4u, 7u, 10u}) {
      const ProblemSpec spec = classify(c.p, c.s, c.m, n);
      CHECK(count(spec).N == count(spec, direct).N);
    }
  }
}

TEST_CASE("the counts depend on |B| and |D| only through even functions") {
  EvalOptions flipped;
  flipped.flip_signs = true;
  for (const auto& c : grid::cases()) {
    for (unsigned n : {3u, 5u, 8u}) {
      const ProblemSpec spec = classify(c.p, c.s, c.m, n);
      CHECK(count(spec).N == count(spec, flipped).N);
    }
  }
}

TEST_CASE("theorem entry points check their case") {
  CHECK_THROWS_AS(count_theorem1(classify(5, 2, 2, 3)), Error);
  CHECK_THROWS_AS(count_theorem3(classify(3, 4, 3, 3)), Error);
  const CountResult r = count(classify(3, 8, 5, 3));
  CHECK(r.method == "theorem2");
  CHECK(r.partitions.size() == 3);
  for (const auto& u : r.partitions) {
    CHECK(u.kind == "B");
    CHECK(u.first * u.first + 2 * u.second * u.second == ipow(3, u.k));
  }
}

TEST_CASE("large parameters stay exact") {
  const ProblemSpec spec = classify(3, 64, 5, 40);
  const CountResult r = count(spec);
  CHECK(r.N > 0);
  // F_q^* acts freely on the nonzero solutions, so q - 1 divides N - 1 and N - q^(n-1).
  CHECK((r.N - ipow(3, 64ul * 39)) % (spec.q - 1) == 0);
}
