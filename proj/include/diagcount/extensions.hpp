#pragma once

// Counts for diagonal equations obtained from the pure 2^m-th power case:
// exponents scaled by pairwise coprime factors, extra variables with odd
// semiprimitive exponents, and an added nondegenerate quadratic form.

#include <cstdint>
#include <vector>

#include "diagcount/closed_form.hpp"
#include "diagcount/field.hpp"

namespace diagcount {

/// d_j <- gcd(d_j, q - 1), then w_j = gcd(d_j, lcm of the other d_i).
/// Errors: InvalidArgument on an empty list or a zero exponent.
std::vector<std::uint64_t> reduce_exponents(const std::vector<std::uint64_t>& d, const BigInt& q);

/// N for sum x_j^(2^m h_j) = 0, which equals count(base).N.
/// Errors: InvalidArgument (h.size() != n or h_j = 0), CoprimalityViolation,
/// DivisibilityViolation (2^m prod h_j does not divide q - 1).
BigInt count_coprime_scaled(const ProblemSpec& base, const std::vector<std::uint64_t>& h);

/// n_j further variables with exponent u_j.
struct OddPart {
  std::uint64_t u = 0;
  unsigned n = 0;
};

/// Least l in 1..s/2 with u | p^l + 1.  Errors: NotSemiprimitive.
unsigned semiprimitive_level(std::uint64_t p, unsigned s, std::uint64_t u);

struct SemiprimitiveOptions {
  /// Sign (-1)^(sum (s/l_j - 1) n_j) instead of (-1)^(sum (s/(2 l_j) - 1) n_j).
  /// The two differ when some s/(2 l_j) and n_j are both odd; only the
  /// default agrees with direct counts there.
  bool literal_sign = false;
};

/// N for sum x_j^(2^m) + sum_j sum_{i <= n_j} y_{j,i}^(u_j) = 0.
/// Errors: InvalidArgument (u_j even or < 3, n_j = 0, empty list),
/// CoprimalityViolation, NotSemiprimitive, DivisibilityViolation (2 l_j does not divide s).
BigInt count_with_odd_semiprimitive(const ProblemSpec& base, const std::vector<OddPart>& parts,
                                    const SemiprimitiveOptions& options = {});

/// N for sum x_j^(2^m) + Q(y_1..y_k) = 0, Q nondegenerate with determinant delta.
/// Elements live in `field`, which must be F_{p^s} for the base spec.
/// Errors: OddK, DegenerateForm, SubfieldMismatch.
BigInt count_with_quadratic_form(const ProblemSpec& base, unsigned k, Element delta, const Field& field);
/// Q = b_1 y_1^2 + ... + b_k y_k^2, k = coefficients.size().
BigInt count_with_quadratic_form(const ProblemSpec& base, const std::vector<Element>& coefficients,
                                 const Field& field);

/// Quadratic character by Euler's criterion: 1, -1, or 0 at zero.
int quadratic_character_value(const Field& field, Element x);

}  // namespace diagcount
