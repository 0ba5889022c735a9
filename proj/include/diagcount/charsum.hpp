#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagcount/field.hpp"
#include "diagcount/numeric.hpp"

namespace diagcount {

/// Multiplicative character chi(g^k) = zeta_{q-1}^{exponent * k}, extended
/// by chi(0) = 0.
class MultChar {
 public:
  MultChar(FieldPtr field, std::uint64_t exponent);

  const FieldPtr& field() const noexcept { return field_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return exponent_ == 0; }

  MultChar pow(std::int64_t j) const;
  MultChar conj() const { return pow(-1); }
  MultChar operator*(const MultChar& other) const;

  /// chi(x) = exp(2 pi i * phase / order()); nullopt for x = 0.
  std::optional<std::uint64_t> phase(Element x) const;
  std::complex<long double> value(Element x) const;

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.field_ == b.field_ && a.exponent_ == b.exponent_;
  }

 private:
  FieldPtr field_;
  std::uint64_t exponent_;
  std::uint64_t order_;
};

/// A numerically evaluated complex sum with an absolute error bound.
struct ComplexVal {
  long double re = 0;
  long double im = 0;
  long double err = 0;
  Precision precision = Precision::Double;

  std::complex<long double> value() const { return {re, im}; }
  long double abs() const { return std::abs(value()); }
  /// |this - target| <= err + tolerance.
  bool matches(std::complex<long double> target, long double tolerance) const {
    return std::abs(value() - target) <= err + tolerance;
  }
};

/// The character with chi(g) = zeta_d.  Errors: OrderDoesNotDivide.
MultChar character(const FieldPtr& field, std::uint64_t d);
MultChar quadratic_character(const FieldPtr& field);

ComplexVal gauss_sum(const MultChar& chi, Precision precision = Precision::Double);
ComplexVal jacobi_sum(const MultChar& chi, Precision precision = Precision::Double);

/// Lift chi from F_q to an extension field containing it: chi'(x) = chi(N(x)).
/// The identification of F_q inside the extension is the embedding sending
/// the generator of the modulus of F_q to its smallest-index root.
MultChar lift_character(const MultChar& chi, const FieldPtr& extension);
/// Lift to a freshly built F_{q^r}.  Errors: BudgetExceeded.
MultChar lift_character(const MultChar& chi, unsigned r, std::uint64_t table_budget = kDefaultTableBudget);

/// log_L of the image of small's generator under the chosen embedding, divided
/// by (|L|-1)/(|small|-1).  Always coprime to |small|-1.
std::uint64_t embedding_multiplier(const Field& small, const Field& large);

struct AuditEntry {
  std::string id;
  bool applicable = false;
  double residual = 0;
  double tolerance = 0;
  bool passed = true;
  std::string note;

  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

struct AuditReport {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;
  unsigned m = 0;
  Precision precision = Precision::Double;
  std::vector<AuditEntry> entries;

  bool all_passed() const;
  const AuditEntry* find(const std::string& id) const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct AuditOptions {
  Precision precision = Precision::Double;
  /// Largest extension field built for the lift check.
  std::uint64_t lift_budget = 100000;
  /// Tolerance is tolerance_factor * sqrt(q).
  double tolerance_factor = 1e-6;
};

/// Numeric check of the Gauss/Jacobi sum identities on F_q for characters in
/// the group generated by a character of order 2^m.  Identities whose
/// hypotheses fail are reported with applicable = false.
AuditReport audit_lemmas(const FieldPtr& field, unsigned m, const AuditOptions& options = {});

namespace detail {

template <class Real>
Cplx<Real> gauss_sum_raw(const MultChar& chi);

template <class Real>
Cplx<Real> jacobi_sum_raw(const MultChar& chi);

/// Error bound for a table-driven sum of `terms` unit-modulus terms.
template <class Real>
Real sum_error_bound(std::uint64_t terms);

}  // namespace detail

}  // namespace diagcount
