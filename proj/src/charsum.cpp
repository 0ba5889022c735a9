#include "diagcount/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "diagcount/quadpart.hpp"

namespace diagcount {

MultChar::MultChar(FieldPtr field, std::uint64_t exponent) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::InvalidArgument, "character needs a field");
  const std::uint64_t n = field_->group_order();
  exponent_ = exponent % n;
  order_ = n / gcd_u64(exponent_, n);
}

MultChar MultChar::pow(std::int64_t j) const {
  const std::uint64_t n = field_->group_order();
  const auto jm = static_cast<std::uint64_t>(((j % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                                             static_cast<std::int64_t>(n));
  return MultChar(field_, mulmod(exponent_, jm, n));
}

MultChar MultChar::operator*(const MultChar& other) const {
  if (field_ != other.field_) throw Error(Errc::InvalidArgument, "characters live on different fields");
  return MultChar(field_, (exponent_ + other.exponent_) % field_->group_order());
}

std::optional<std::uint64_t> MultChar::phase(Element x) const {
  if (x.index == 0) return std::nullopt;
  const std::uint64_t n = field_->group_order();
  const std::uint64_t a = exponent_ / (n / order_);
  return mulmod(a, field_->log_unchecked(x), order_);
}

std::complex<long double> MultChar::value(Element x) const {
  const auto ph = phase(x);
  if (!ph) return {0, 0};
  const auto z = root_of_unity<long double>(*ph, order_);
  return {z.re, z.im};
}

MultChar character(const FieldPtr& field, std::uint64_t d) {
  if (d == 0 || field->group_order() % d != 0) {
    throw Error(Errc::OrderDoesNotDivide,
                std::to_string(d) + " does not divide q - 1 = " + std::to_string(field->group_order()));
  }
  return MultChar(field, field->group_order() / d);
}

MultChar quadratic_character(const FieldPtr& field) { return character(field, 2); }

namespace detail {

template <class Real>
Real sum_error_bound(std::uint64_t terms) {
  // Each table entry carries at most ~20u from the reduced-angle evaluation,
  // a product of two entries at most ~45u; compensated summation adds O(u)
  // relative to the result.
  return Real(72) * RealTraits<Real>::unit_roundoff() * static_cast<Real>(terms + 1);
}

template <class Real>
Cplx<Real> gauss_sum_raw(const MultChar& chi) {
  if (chi.is_trivial()) throw Error(Errc::TrivialCharacter, "Gauss sum of the trivial character");
  const Field& f = *chi.field();
  const std::uint64_t d = chi.order();
  const std::uint64_t a = chi.exponent() / (f.group_order() / d);
  std::vector<Cplx<Real>> mult_roots(d), add_roots(f.p());
  for (std::uint64_t t = 0; t < d; ++t) mult_roots[t] = root_of_unity<Real>(t, d);
  for (std::uint64_t t = 0; t < f.p(); ++t) add_roots[t] = root_of_unity<Real>(t, f.p());
  CompensatedSum<Real> acc;
  std::uint64_t idx = 0;
  for (std::uint64_t k = 0; k < f.group_order(); ++k) {
    acc.add(mult_roots[idx] * add_roots[f.trace(f.exp(k))]);
    idx += a;
    if (idx >= d) idx -= d;
  }
  return acc.value();
}

template <class Real>
Cplx<Real> jacobi_sum_raw(const MultChar& chi) {
  if (chi.is_trivial()) throw Error(Errc::TrivialCharacter, "Jacobi sum of the trivial character");
  const Field& f = *chi.field();
  const std::uint64_t d = chi.order();
  const std::uint64_t a = chi.exponent() / (f.group_order() / d);
  std::vector<Cplx<Real>> mult_roots(d);
  for (std::uint64_t t = 0; t < d; ++t) mult_roots[t] = root_of_unity<Real>(t, d);
  CompensatedSum<Real> acc;
  const Element one = Field::one();
  for (std::uint64_t k = 0; k < f.group_order(); ++k) {
    const Element x = f.exp(k);
    const Element y = f.sub(one, x);
    if (y.index == 0) continue;
    const std::uint64_t l = (k + f.log_unchecked(y)) % f.group_order();
    acc.add(mult_roots[mulmod(a, l, d)]);
  }
  return acc.value();
}

template Cplx<double> gauss_sum_raw<double>(const MultChar&);
template Cplx<long double> gauss_sum_raw<long double>(const MultChar&);
template Cplx<quad> gauss_sum_raw<quad>(const MultChar&);
template Cplx<double> jacobi_sum_raw<double>(const MultChar&);
template Cplx<long double> jacobi_sum_raw<long double>(const MultChar&);
template Cplx<quad> jacobi_sum_raw<quad>(const MultChar&);
template double sum_error_bound<double>(std::uint64_t);
template long double sum_error_bound<long double>(std::uint64_t);
template quad sum_error_bound<quad>(std::uint64_t);

}  // namespace detail

namespace {

template <class Real>
ComplexVal package(Cplx<Real> z, std::uint64_t terms) {
  return ComplexVal{to_long_double(z.re), to_long_double(z.im),
                    to_long_double(detail::sum_error_bound<Real>(terms)) +
                        // conversion of the stored value to long double
                        std::ldexp(1.0L, -63) * std::sqrt(static_cast<long double>(terms)),
                    RealTraits<Real>::precision};
}

template <class Fn>
ComplexVal dispatch(Precision precision, Fn&& fn) {
  switch (precision) {
    case Precision::Double: return fn(double{});
    case Precision::Extended: return fn((long double){});
    case Precision::Quad: return fn(quad{});
  }
  return fn(double{});
}

}  // namespace

ComplexVal gauss_sum(const MultChar& chi, Precision precision) {
  return dispatch(precision, [&](auto tag) {
    using Real = decltype(tag);
    return package(detail::gauss_sum_raw<Real>(chi), chi.field()->q());
  });
}

ComplexVal jacobi_sum(const MultChar& chi, Precision precision) {
  return dispatch(precision, [&](auto tag) {
    using Real = decltype(tag);
    return package(detail::jacobi_sum_raw<Real>(chi), chi.field()->q());
  });
}

std::uint64_t embedding_multiplier(const Field& small, const Field& large) {
  if (small.p() != large.p() || large.s() % small.s() != 0) {
    throw Error(Errc::SubfieldMismatch, "F_{" + std::to_string(small.q()) + "} does not embed in F_{" +
                                            std::to_string(large.q()) + "}");
  }
  const std::uint64_t cofactor = large.group_order() / small.group_order();
  const auto gen_coeffs = small.coeffs(small.generator());
  Element image;
  if (small.s() == 1) {
    image = large.from_int(static_cast<std::int64_t>(gen_coeffs[0]));
  } else {
    // Smallest-index root of small's modulus in the large field.
    const auto& f = small.modulus();
    auto eval = [&](Element x, std::span<const std::uint64_t> poly) {
      Element acc = Field::zero();
      for (std::size_t i = poly.size(); i-- > 0;) {
        acc = large.add(large.mul(acc, x), large.from_int(static_cast<std::int64_t>(poly[i])));
      }
      return acc;
    };
    std::optional<Element> root;
    for (std::uint32_t idx = 0; idx < large.q() && !root; ++idx) {
      if (eval(Element{idx}, f).index == 0) root = Element{idx};
    }
    if (!root) throw Error(Errc::Internal, "modulus has no root in the extension");
    std::vector<std::uint64_t> g(gen_coeffs.begin(), gen_coeffs.end());
    image = eval(*root, g);
  }
  const std::uint64_t l = large.dlog(image);
  if (l % cofactor != 0) throw Error(Errc::Internal, "embedded generator left the subfield");
  return l / cofactor;
}

MultChar lift_character(const MultChar& chi, const FieldPtr& extension) {
  const Field& small = *chi.field();
  const std::uint64_t k = embedding_multiplier(small, *extension);
  const std::uint64_t n = small.group_order();
  const std::uint64_t e = mulmod(chi.exponent(), invmod(k, n), n);
  return MultChar(extension, e * (extension->group_order() / n));
}

MultChar lift_character(const MultChar& chi, unsigned r, std::uint64_t table_budget) {
  const Field& small = *chi.field();
  const std::uint64_t big_s = std::uint64_t{small.s()} * r;
  const std::uint64_t big_q = checked_pow(small.p(), static_cast<unsigned>(big_s));
  if (r == 0 || big_q == 0 || big_q > table_budget) {
    throw Error(Errc::BudgetExceeded, "extension of degree " + std::to_string(r) + " exceeds the table budget");
  }
  return lift_character(chi, build_field(small.p(), static_cast<unsigned>(big_s), table_budget));
}

bool AuditReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return !e.applicable || e.passed; });
}

const AuditEntry* AuditReport::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

using cld = std::complex<long double>;

class LemmaAuditor {
 public:
  LemmaAuditor(FieldPtr field, unsigned m, const AuditOptions& opt)
      : field_(std::move(field)), m_(m), opt_(opt), lambda_(character(field_, std::uint64_t{1} << m)) {
    const long double q = static_cast<long double>(field_->q());
    sqrt_q_ = std::sqrt(q);
    tol_ = opt.tolerance_factor * static_cast<double>(sqrt_q_);
    two_m_ = std::uint64_t{1} << m;
    gauss_.resize(two_m_);
    for (std::uint64_t j = 1; j < two_m_; ++j) {
      const ComplexVal g = gauss_sum(lambda_.pow(static_cast<std::int64_t>(j)), opt.precision);
      gauss_[j] = g.value();
      max_err_ = std::max(max_err_, g.err);
    }
  }

  AuditReport run() {
    AuditReport report;
    const Field& f = *field_;
    report.p = f.p();
    report.s = f.s();
    report.q = f.q();
    report.m = m_;
    report.precision = opt_.precision;
    auto& out = report.entries;
    out.push_back(lemma2a());
    out.push_back(lemma2b());
    out.push_back(lemma3());
    out.push_back(lemma4());
    out.push_back(lemma5());
    out.push_back(lemma6());
    auto lifts = lemma7c_and_8();
    out.push_back(lifts.first);
    out.push_back(lifts.second);
    out.push_back(lemma10());
    out.push_back(lemma11());
    out.push_back(lemma12());
    out.push_back(lemma13());
    out.push_back(lemma15());
    out.push_back(lemma16());
    out.push_back(lemma17());
    out.push_back(lemma18());
    return report;
  }

 private:
  std::uint64_t p() const { return field_->p(); }
  unsigned s() const { return field_->s(); }
  long double q() const { return static_cast<long double>(field_->q()); }
  long double qpow(long double num, long double den) const { return std::pow(q(), num / den); }
  unsigned v2() const { return nu2(field_->group_order()); }

  cld G(std::int64_t j) const {
    const auto n = static_cast<std::int64_t>(two_m_);
    return gauss_[static_cast<std::size_t>(((j % n) + n) % n)];
  }
  MultChar lam(std::int64_t j) const { return lambda_.pow(j); }

  AuditEntry entry(const std::string& id, bool applicable, long double residual, const std::string& note = {}) const {
    AuditEntry e;
    e.id = id;
    e.applicable = applicable;
    e.residual = applicable ? static_cast<double>(residual) : 0.0;
    e.tolerance = tol_;
    e.passed = !applicable || e.residual < tol_;
    e.note = note;
    return e;
  }
  AuditEntry skipped(const std::string& id, const std::string& why) const { return entry(id, false, 0, why); }

  AuditEntry lemma2a() const {
    long double worst = 0;
    const Element minus_one = field_->from_int(-1);
    for (std::uint64_t j = 1; j < two_m_; ++j) {
      const auto sj = static_cast<std::int64_t>(j);
      const cld rhs = lam(sj).value(minus_one) * q();
      worst = std::max(worst, std::abs(G(sj) * G(-sj) - rhs));
    }
    return entry("L2a", two_m_ > 1, worst, "G(psi)G(conj psi) = psi(-1) q");
  }

  AuditEntry lemma2b() const {
    long double worst = 0;
    for (std::uint64_t j = 1; j < two_m_; ++j) {
      const auto sj = static_cast<std::int64_t>(j);
      worst = std::max(worst, std::abs(G(sj) - G(static_cast<std::int64_t>(mulmod(j, p(), two_m_)))));
    }
    return entry("L2b", two_m_ > 1, worst, "G(psi) = G(psi^p)");
  }

  AuditEntry lemma3() const {
    const cld g = G(static_cast<std::int64_t>(two_m_ / 2));
    const long double sign = (s() % 2 == 1) ? 1.0L : -1.0L;  // (-1)^{s-1}
    cld expected;
    if (p() % 4 == 1) {
      expected = sign * sqrt_q_;
    } else {
      cld i_pow_s = 1;
      for (unsigned k = 0; k < s() % 4; ++k) i_pow_s *= cld(0, 1);
      expected = sign * i_pow_s * sqrt_q_;
    }
    return entry("L3", true, std::abs(g - expected), "quadratic Gauss sum");
  }

  AuditEntry lemma4() const {
    if (p() % 8 != 3 || s() % 2 != 0 || m_ < 2) return skipped("L4", "needs p = 3 mod 8, 2 | s, m >= 2");
    const auto quarter = static_cast<std::int64_t>(two_m_ / 4);
    const long double worst = std::max(std::abs(G(quarter) + sqrt_q_), std::abs(G(3 * quarter) + sqrt_q_));
    return entry("L4", true, worst, "biquadratic G = -sqrt(q)");
  }

  AuditEntry lemma5() const {
    if (m_ < 2) return skipped("L5", "no character other than eta");
    long double worst = 0;
    const auto half = static_cast<std::int64_t>(two_m_ / 2);
    const Element four = field_->from_int(4);
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(two_m_); ++j) {
      if (j == half) continue;
      const cld lhs = G(j) * G(j + half);
      const cld rhs = lam(-j).value(four) * G(2 * j) * G(half);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return entry("L5", true, worst, "G(psi)G(psi eta) = conj psi(4) G(psi^2) G(eta)");
  }

  AuditEntry lemma6() const {
    if (m_ < 2) return skipped("L6", "no character other than eta");
    long double worst = 0;
    const auto half = static_cast<std::int64_t>(two_m_ / 2);
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(two_m_); ++j) {
      if (j == half) continue;
      const cld jac = jacobi_sum(lam(j), opt_.precision).value();
      worst = std::max(worst, std::abs(G(j) * G(j) - G(2 * j) * jac));
    }
    return entry("L6", true, worst, "G(psi)^2 = G(psi^2) J(psi)");
  }

  std::pair<AuditEntry, AuditEntry> lemma7c_and_8() const {
    const std::uint64_t big_q = checked_pow(p(), 2 * s());
    if (big_q == 0 || big_q > opt_.lift_budget) {
      return {skipped("L7c", "F_{q^2} exceeds the lift budget"), skipped("L8", "F_{q^2} exceeds the lift budget")};
    }
    const FieldPtr big = build_field(p(), 2 * s(), opt_.lift_budget);
    long double order_mismatch = 0;
    long double worst = 0;
    for (std::int64_t j = 1; j < static_cast<std::int64_t>(two_m_); ++j) {
      const MultChar lifted = lift_character(lam(j), big);
      if (lifted.order() != lam(j).order()) order_mismatch += 1;
      const cld g_lift = gauss_sum(lifted, opt_.precision).value();
      worst = std::max(worst, std::abs(g_lift + G(j) * G(j)));  // (-1)^{r-1} with r = 2
    }
    return {entry("L7c", true, order_mismatch, "lift preserves order (residual counts mismatches)"),
            entry("L8", true, worst, "G(psi') = -G(psi)^2 for the lift to F_{q^2}")};
  }

  AuditEntry lemma10() const {
    const unsigned r_min = p() % 8 == 3 ? 4 : 3;
    if ((p() % 8 != 3 && p() % 8 != 5) || m_ < r_min) return skipped("L10", "needs p = +-3 mod 8 and order 2^r, r large");
    long double worst = 0;
    const auto half = static_cast<std::int64_t>(two_m_ / 2);
    for (unsigned r = r_min; r <= m_; ++r) {
      const std::int64_t step = std::int64_t{1} << (m_ - r);
      for (std::int64_t j0 = 1; j0 < (std::int64_t{1} << r); j0 += 2) {
        worst = std::max(worst, std::abs(G(step * j0) - G(step * j0 + half)));
      }
    }
    return entry("L10", true, worst, "G(psi) = G(psi eta)");
  }

  AuditEntry lemma11() const {
    if ((p() % 8 != 3 && p() % 8 != 5) || m_ < 3) return skipped("L11", "needs p = +-3 mod 8, m >= 3");
    long double worst = 0;
    const Element four = field_->from_int(4);
    for (unsigned r = 3; r <= m_; ++r) {
      const long double expected = p() % 8 == 3 ? 1.0L : (((s() >> (r - 2)) % 2 == 0) ? 1.0L : -1.0L);
      const std::int64_t step = std::int64_t{1} << (m_ - r);
      for (std::int64_t j0 = 1; j0 < (std::int64_t{1} << r); j0 += 2) {
        worst = std::max(worst, std::abs(lam(step * j0).value(four) - cld(expected, 0)));
      }
    }
    return entry("L11", true, worst, "psi(4) for psi of order 2^r");
  }

  // Finds the character of order `small_order` on F_{p^sub_s} whose lift
  // equals `target`, returning its Jacobi sum.
  cld jacobi_of_preimage(unsigned sub_s, std::uint64_t small_order, const MultChar& target) const {
    const FieldPtr sub = build_field(p(), sub_s, field_->q());
    const MultChar base = character(sub, small_order);
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(small_order); a += 2) {
      const MultChar cand = base.pow(a);
      if (lift_character(cand, field_) == target) return jacobi_sum(cand, opt_.precision).value();
    }
    throw Error(Errc::Internal, "no preimage character under the lift");
  }

  AuditEntry lemma12() const {
    if (p() % 8 != 3 || m_ < 3) return skipped("L12", "needs p = 3 mod 8, m >= 3");
    long double worst = 0;
    bool any = false;
    for (unsigned r = 3; r <= m_ && r + 1 <= v2(); ++r) {
      any = true;
      const unsigned sub_s = s() >> (r - 2);
      const long double factor = qpow((1u << (r - 2)) - 1.0L, static_cast<long double>(1u << (r - 1)));
      const std::int64_t step = std::int64_t{1} << (m_ - r);
      for (std::int64_t j0 = 1; j0 < (std::int64_t{1} << r); j0 += 2) {
        const MultChar psi = lam(step * j0);
        const cld jac = jacobi_of_preimage(sub_s, 8, psi.pow(std::int64_t{1} << (r - 3)));
        worst = std::max(worst, std::abs(G(step * j0) - factor * jac));
      }
    }
    if (!any) return skipped("L12", "needs 2^{r+1} | q - 1 for some 3 <= r <= m");
    return entry("L12", true, worst, "G(psi) = q^{(2^{r-2}-1)/2^{r-1}} J(octic chi on subfield)");
  }

  AuditEntry lemma13() const {
    if (p() % 8 != 5 || m_ < 2) return skipped("L13", "needs p = 5 mod 8, m >= 2");
    long double worst = 0;
    bool any = false;
    for (unsigned r = 2; r <= m_ && r + 1 <= v2(); ++r) {
      any = true;
      const unsigned sub_s = s() >> (r - 1);
      const std::uint64_t sign_exp = std::uint64_t{s()} * (r - 1) >> (r - 1);
      const long double sign = sign_exp % 2 == 0 ? 1.0L : -1.0L;
      const long double factor = sign * qpow((1u << (r - 1)) - 1.0L, static_cast<long double>(1u << r));
      const std::int64_t step = std::int64_t{1} << (m_ - r);
      for (std::int64_t j0 = 1; j0 < (std::int64_t{1} << r); j0 += 2) {
        const MultChar psi = lam(step * j0);
        const cld jac = jacobi_of_preimage(sub_s, 4, psi.pow(std::int64_t{1} << (r - 2)));
        worst = std::max(worst, std::abs(G(step * j0) - factor * jac));
      }
    }
    if (!any) return skipped("L13", "needs 2^{r+1} | q - 1 for some 2 <= r <= m");
    return entry("L13", true, worst, "G(psi) = (-1)^{s(r-1)/2^{r-1}} q^{(2^{r-1}-1)/2^r} J(biquadratic chi)");
  }

  // Distance of z to the nearer of +target, -target.
  static long double up_to_sign(cld z, cld target) { return std::min(std::abs(z - target), std::abs(z + target)); }

  AuditEntry lemma15() const {
    if (p() % 8 != 3 || m_ < 3) return skipped("L15", "needs p = 3 mod 8, m >= 3");
    long double worst = 0;
    bool any = false;
    for (unsigned r = 3; r <= m_ && r + 1 <= v2(); ++r) {
      any = true;
      const auto part = partition_2B(p(), s() >> (r - 2));
      const long double factor = qpow((1u << (r - 2)) - 1.0L, static_cast<long double>(1u << (r - 1)));
      const auto step = std::int64_t{1} << (m_ - r);
      const cld sum = G(step) + G(-step);
      const cld diff = G(step) - G(-step);
      const long double A = part.A.get_d();
      const long double B = part.absB.get_d();
      worst = std::max(worst, std::abs(sum - cld(2 * A * factor, 0)));
      worst = std::max(worst, up_to_sign(diff, cld(0, 2 * B * factor * std::sqrt(2.0L))));
    }
    if (!any) return skipped("L15", "needs 2^{r+1} | q - 1 for some 3 <= r <= m");
    return entry("L15", true, worst, "G +- conj G against (A_r, |B_r|), difference up to sign");
  }

  AuditEntry lemma16() const {
    if (p() % 8 != 3 || m_ < 3 || v2() != m_) return skipped("L16", "needs p = 3 mod 8, m >= 3, 2^m || q - 1");
    const auto part = partition_2B(p(), s() >> (m_ - 2));
    const long double factor = qpow((1u << (m_ - 2)) - 1.0L, static_cast<long double>(1u << (m_ - 1)));
    const cld sum = G(1) + G(-1);
    const cld diff = G(1) - G(-1);
    const long double A = part.A.get_d();
    const long double B = part.absB.get_d();
    const long double worst = std::max(up_to_sign(sum, cld(0, 2 * A * factor)),
                                       up_to_sign(diff, cld(2 * B * factor * std::sqrt(2.0L), 0)));
    return entry("L16", true, worst, "G(lambda) +- G(conj lambda) up to sign");
  }

  AuditEntry lemma17() const {
    if (p() % 8 != 5 || m_ < 2) return skipped("L17", "needs p = 5 mod 8, m >= 2");
    long double worst = 0;
    bool any = false;
    for (unsigned r = 2; r <= m_ && r + 1 <= v2(); ++r) {
      any = true;
      const auto part = partition_D(p(), s() >> (r - 1));
      const long double factor = qpow((1u << (r - 1)) - 1.0L, static_cast<long double>(1u << r));
      const long double sign = (r + 2 <= v2() || r % 2 == 1) ? 1.0L : -1.0L;
      const auto step = std::int64_t{1} << (m_ - r);
      const cld sum = G(step) + G(-step);
      const cld diff = G(step) - G(-step);
      worst = std::max(worst, std::abs(sum - cld(sign * 2 * part.C.get_d() * factor, 0)));
      worst = std::max(worst, up_to_sign(diff, cld(0, 2 * part.absD.get_d() * factor)));
    }
    if (!any) return skipped("L17", "needs 2^{r+1} | q - 1 for some 2 <= r <= m");
    return entry("L17", true, worst, "G +- conj G against (C_r, |D_r|), difference up to sign");
  }

  AuditEntry lemma18() const {
    if (p() % 8 != 5 || m_ < 2 || v2() != m_) return skipped("L18", "needs p = 5 mod 8, 2^m || q - 1");
    const auto part = partition_D(p(), s() >> (m_ - 2));
    const long double C = part.C.get_d();
    const long double sgn = m_ % 2 == 0 ? 1.0L : -1.0L;  // (-1)^m
    const long double factor = qpow((1u << (m_ - 1)) - 1.0L, static_cast<long double>(1u << m_));
    const long double root_q = qpow(1.0L, static_cast<long double>(1u << (m_ - 1)));
    const cld sum = G(1) + G(-1);
    const cld diff = G(1) - G(-1);
    const long double worst =
        std::max(up_to_sign(sum, cld(0, factor * std::sqrt(2 * (root_q - sgn * C)))),
                 up_to_sign(diff, cld(factor * std::sqrt(2 * (root_q + sgn * C)), 0)));
    return entry("L18", true, worst, "G(lambda) +- G(conj lambda) up to sign");
  }

  FieldPtr field_;
  unsigned m_;
  AuditOptions opt_;
  MultChar lambda_;
  std::uint64_t two_m_ = 0;
  long double sqrt_q_ = 0;
  double tol_ = 0;
  long double max_err_ = 0;
  std::vector<cld> gauss_;
};

}  // namespace

AuditReport audit_lemmas(const FieldPtr& field, unsigned m, const AuditOptions& options) {
  if (m == 0 || m >= 63 || field->group_order() % (std::uint64_t{1} << m) != 0) {
    throw Error(Errc::OrderDoesNotDivide, "2^m must divide q - 1");
  }
  return LemmaAuditor(field, m, options).run();
}

}  // namespace diagcount
