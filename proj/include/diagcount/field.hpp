#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "diagcount/errors.hpp"
#include "diagcount/ntheory.hpp"

namespace diagcount {

inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 24;

struct FieldParams {
  std::uint64_t p = 0;
  unsigned s = 0;
  std::uint64_t q = 0;
};

/// An element of F_q in canonical polynomial encoding: the residue
/// c_0 + c_1 x + ... + c_{s-1} x^{s-1} is stored as the integer
/// c_0 + c_1 p + ... + c_{s-1} p^{s-1}.  The prime subfield is therefore the
/// index range [0, p).
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// F_{p^s} with full exp/dlog/trace tables.
///
/// Construction is deterministic: the modulus is the monic irreducible of
/// degree s whose tail coefficients (c_0 + c_1 p + ...) form the smallest
/// index, and the generator is the smallest-index primitive element.  The
/// object is immutable after construction.
class Field {
 public:
  Field(std::uint64_t p, unsigned s, std::uint64_t table_budget = kDefaultTableBudget);

  const FieldParams& params() const noexcept { return params_; }
  std::uint64_t p() const noexcept { return params_.p; }
  unsigned s() const noexcept { return params_.s; }
  std::uint64_t q() const noexcept { return params_.q; }
  /// Order of the multiplicative group, q - 1.
  std::uint64_t group_order() const noexcept { return params_.q - 1; }

  /// Monic modulus, coefficients low degree first (size s + 1).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  Element generator() const noexcept { return Element{exp_[1 % exp_.size()]}; }
  /// Prime factors of q - 1.
  const std::vector<std::uint64_t>& group_order_factors() const noexcept { return order_factors_; }

  static constexpr Element zero() noexcept { return Element{0}; }
  static constexpr Element one() noexcept { return Element{1}; }

  /// g^k, k taken modulo q - 1.
  Element exp(std::uint64_t k) const noexcept { return Element{exp_[k % exp_.size()]}; }
  /// Discrete log base g; throws ZeroHasNoDlog on 0.
  std::uint64_t dlog(Element x) const;
  /// Unchecked log for nonzero x (hot loops).
  std::uint32_t log_unchecked(Element x) const noexcept { return log_[x.index]; }
  /// Absolute trace to F_p, as a residue in [0, p).
  std::uint32_t trace(Element x) const noexcept { return trace_[x.index]; }

  Element add(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element pow(Element a, const BigInt& e) const;

  /// Norm to the subfield with p^sub_degree elements: x^((q-1)/(q0-1)).
  Element norm(Element x, unsigned sub_degree) const;
  /// True when x lies in the subfield with p^sub_degree elements.
  bool in_subfield(Element x, unsigned sub_degree) const;

  /// Residue r mod p as an element of the prime subfield.
  Element from_int(std::int64_t r) const noexcept;
  Element from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Element x) const;
  /// Field element as a low-degree-first polynomial string, e.g. "2+x^2".
  std::string to_string(Element x) const;

  /// Calls fn(x, x + v) for every x, in increasing x order.  Runs in O(q)
  /// total by carrying the digit-wise sum along an odometer.
  template <class Fn>
  void for_each_translate(Element v, Fn&& fn) const;

 private:
  void choose_modulus();
  void choose_generator_and_tables();
  void build_trace_table();

  FieldParams params_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> order_factors_;
  std::vector<std::uint32_t> powers_of_p_;  // p^i, i < s
  std::vector<std::uint32_t> exp_;          // k -> g^k, size q - 1
  std::vector<std::uint32_t> log_;          // x -> k, size q, log_[0] unused
  std::vector<std::uint32_t> trace_;        // x -> Tr(x)
};

using FieldPtr = std::shared_ptr<const Field>;

/// Construct F_{p^s}. Errors: NotPrime (p not an odd prime), BudgetExceeded.
FieldPtr build_field(std::uint64_t p, unsigned s, std::uint64_t table_budget = kDefaultTableBudget);

/// Field-independent polynomial arithmetic over F_p, exposed for tests.
namespace poly {
using Poly = std::vector<std::uint64_t>;  // low degree first, trimmed
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Rabin's irreducibility test for a monic f of degree >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);
}  // namespace poly

template <class Fn>
void Field::for_each_translate(Element v, Fn&& fn) const {
  const unsigned s = params_.s;
  const std::uint32_t p = static_cast<std::uint32_t>(params_.p);
  std::vector<std::uint32_t> xd(s, 0);
  std::vector<std::uint32_t> yd = coeffs(v);
  std::uint32_t y = v.index;
  const std::uint32_t q = static_cast<std::uint32_t>(params_.q);
  for (std::uint32_t x = 0; x < q; ++x) {
    fn(Element{x}, Element{y});
    for (unsigned i = 0; i < s; ++i) {
      ++xd[i];
      if (++yd[i] == p) {
        yd[i] = 0;
        y -= (p - 1) * powers_of_p_[i];
      } else {
        y += powers_of_p_[i];
      }
      if (xd[i] < p) break;
      xd[i] = 0;
    }
  }
}

}  // namespace diagcount
