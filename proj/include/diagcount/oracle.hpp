#pragma once

// Independent counters used to check the closed forms: full enumeration,
// additive convolution of power histograms, and the character-sum
// expression evaluated numerically.

#include <cstdint>
#include <vector>

#include "diagcount/charsum.hpp"
#include "diagcount/closed_form.hpp"
#include "diagcount/field.hpp"

namespace diagcount {

inline constexpr std::uint64_t kDefaultBruteCap = 10'000'000;
inline constexpr std::uint64_t kDefaultDpBudget = std::uint64_t{1} << 14;

/// counts[x] = #{y : y^d = x}, indexed by element index.
struct PowerHistogram {
  FieldPtr field;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> counts;

  /// Indices with a nonzero count, increasing.
  std::vector<std::uint32_t> support() const;
};

PowerHistogram power_histogram(const FieldPtr& field, std::uint64_t d);

/// Enumerates all q^n tuples.  Errors: TooLarge when q^n > cap.
BigInt brute_force(const ProblemSpec& spec, std::uint64_t cap = kDefaultBruteCap);
BigInt brute_force(const FieldPtr& field, std::uint64_t d, unsigned n, std::uint64_t cap = kDefaultBruteCap);

/// n-fold convolution of the 2^m-th power histogram, read at 0.
/// Errors: TooLarge when q exceeds the budget.
BigInt dp_count(const ProblemSpec& spec, std::uint64_t q_budget = kDefaultDpBudget);

/// N for n = 1 .. n_max in one pass: result[n - 1].
std::vector<BigInt> dp_count_series(const FieldPtr& field, std::uint64_t d, unsigned n_max);

/// One summand coeff * x^exponent of a diagonal form.
struct Term {
  Element coeff;
  std::uint64_t exponent = 1;
};

/// Number of solutions of sum_j coeff_j x_j^exponent_j = 0.
BigInt dp_count_terms(const FieldPtr& field, const std::vector<Term>& terms);

struct GaussCount {
  BigInt N;
  /// Distance of the evaluated value to the nearest integer.
  double residual = 0;
  /// A priori bound on the floating error of the evaluated value.
  double error_bound = 0;
  Precision precision = Precision::Double;
  bool escalated = false;

  friend bool operator==(const GaussCount&, const GaussCount&) = default;
};

/// N from the Gauss-sum expression, rounded.  Retries once at quad precision
/// if the first attempt cannot certify the rounding.
/// Errors: ResidualTooLarge, BudgetExceeded.
GaussCount gauss_count(const ProblemSpec& spec, Precision start = Precision::Double,
                       std::uint64_t table_budget = kDefaultTableBudget);
GaussCount gauss_count(const FieldPtr& field, unsigned m, unsigned n, Precision start = Precision::Double);

/// W_{r,t}(c0) = sum over 1 <= j < 2^m with 2^(m-r) || j of
/// G(lambda^j) zeta_{2^(m-t)}^(c0 j).
/// Errors: InvalidArgument on r, t or c0 out of range.
ComplexVal w_values(const FieldPtr& field, unsigned m, unsigned r, unsigned t, std::uint64_t c0,
                    Precision precision = Precision::Double);

struct Lemma14Options {
  AuditOptions audit;
  /// The decompositions of the count are checked for n = 1 .. recombine_n.
  unsigned recombine_n = 4;
  /// The recombined count is compared with dp_count_series when q fits.
  std::uint64_t dp_budget = kDefaultDpBudget;
};

/// Checks the case table for W_{r,t}(c0), the block decomposition of
/// S_t, its regrouping by t, and the recombined count.
AuditReport audit_lemma14(const FieldPtr& field, unsigned m, const Lemma14Options& options = {});

}  // namespace diagcount
