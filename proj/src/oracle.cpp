#include "diagcount/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "diagcount/errors.hpp"

namespace diagcount {

namespace {

using u128 = unsigned __int128;
using cld = std::complex<long double>;

BigInt to_bigint(u128 v) {
  BigInt hi(static_cast<unsigned long>(v >> 64));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}
BigInt to_bigint(const BigInt& v) { return v; }

// Whether every count up to q^n fits in 127 bits.
bool fits_u128(std::uint64_t q, unsigned n) {
  return static_cast<long double>(n) * std::log2(static_cast<long double>(q)) < 126.0L;
}

struct Weighted {
  std::vector<std::uint32_t> support;
  std::vector<std::uint64_t> weight;  // parallel to support
};

Weighted weighted(const std::vector<std::uint64_t>& counts) {
  Weighted w;
  for (std::uint32_t x = 0; x < counts.size(); ++x) {
    if (counts[x] == 0) continue;
    w.support.push_back(x);
    w.weight.push_back(counts[x]);
  }
  return w;
}

template <class Count>
void convolve(const Field& f, const std::vector<Count>& cur, const Weighted& h, std::vector<Count>& next) {
  std::fill(next.begin(), next.end(), Count(0));
  for (std::size_t k = 0; k < h.support.size(); ++k) {
    const Count w = h.weight[k];
    f.for_each_translate(Element{h.support[k]}, [&](Element x, Element y) {
      if (cur[x.index] != 0) next[y.index] += w * cur[x.index];
    });
  }
}

std::vector<std::uint64_t> term_counts(const Field& f, Element coeff, std::uint64_t exponent) {
  std::vector<std::uint64_t> counts(f.q(), 0);
  for (std::uint32_t y = 0; y < f.q(); ++y) {
    counts[f.mul(coeff, f.pow(Element{y}, exponent)).index] += 1;
  }
  return counts;
}

template <class Count>
std::vector<BigInt> series_impl(const Field& f, const Weighted& h, const std::vector<std::uint64_t>& counts,
                                unsigned n_max) {
  std::vector<Count> cur(counts.begin(), counts.end());
  std::vector<Count> next(cur.size());
  std::vector<BigInt> out;
  out.push_back(to_bigint(cur[0]));
  for (unsigned n = 2; n <= n_max; ++n) {
    convolve(f, cur, h, next);
    cur.swap(next);
    out.push_back(to_bigint(cur[0]));
  }
  return out;
}

template <class Count>
BigInt terms_impl(const Field& f, const std::vector<std::vector<std::uint64_t>>& hists) {
  std::vector<Count> cur(hists[0].begin(), hists[0].end());
  std::vector<Count> next(cur.size());
  for (std::size_t j = 1; j < hists.size(); ++j) {
    convolve(f, cur, weighted(hists[j]), next);
    cur.swap(next);
  }
  return to_bigint(cur[0]);
}

}  // namespace

std::vector<std::uint32_t> PowerHistogram::support() const { return weighted(counts).support; }

PowerHistogram power_histogram(const FieldPtr& field, std::uint64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "exponent must be positive");
  return PowerHistogram{field, d, term_counts(*field, Field::one(), d)};
}

BigInt brute_force(const FieldPtr& field, std::uint64_t d, unsigned n, std::uint64_t cap) {
  const Field& f = *field;
  const std::uint64_t total = checked_pow(f.q(), n);
  if (n == 0 || total == 0 || total > cap) {
    throw Error(Errc::TooLarge, std::to_string(f.q()) + "^" + std::to_string(n) + " tuples exceed the cap " +
                                    std::to_string(cap));
  }
  std::vector<Element> pw(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) pw[x] = f.pow(Element{x}, d);
  std::vector<std::uint32_t> idx(n, 0);
  std::vector<Element> partial(n + 1, Field::zero());  // partial[k] = sum of the first k terms
  std::uint64_t hits = 0;
  const auto q = static_cast<std::uint32_t>(f.q());
  while (true) {
    if (partial[n].index == 0) ++hits;
    int k = static_cast<int>(n) - 1;
    while (k >= 0 && ++idx[k] == q) idx[k--] = 0;
    if (k < 0) break;
    for (unsigned j = static_cast<unsigned>(k); j < n; ++j) partial[j + 1] = f.add(partial[j], pw[idx[j]]);
  }
  return BigInt(static_cast<unsigned long>(hits));
}

BigInt brute_force(const ProblemSpec& spec, std::uint64_t cap) {
  const std::uint64_t q = checked_pow(spec.p, spec.s);
  if (q == 0 || checked_pow(q, spec.n) == 0 || checked_pow(q, spec.n) > cap) {
    throw Error(Errc::TooLarge, "q^n exceeds the brute-force cap " + std::to_string(cap));
  }
  return brute_force(build_field(spec.p, spec.s), std::uint64_t{1} << spec.m, spec.n, cap);
}

std::vector<BigInt> dp_count_series(const FieldPtr& field, std::uint64_t d, unsigned n_max) {
  if (n_max == 0) return {};
  const auto counts = power_histogram(field, d).counts;
  const Weighted h = weighted(counts);
  if (fits_u128(field->q(), n_max)) return series_impl<u128>(*field, h, counts, n_max);
  return series_impl<BigInt>(*field, h, counts, n_max);
}

BigInt dp_count(const ProblemSpec& spec, std::uint64_t q_budget) {
  const std::uint64_t q = checked_pow(spec.p, spec.s);
  if (q == 0 || q > q_budget) {
    throw Error(Errc::TooLarge, "q = " + spec.q.get_str() + " exceeds the dp budget " + std::to_string(q_budget));
  }
  return dp_count_series(build_field(spec.p, spec.s), std::uint64_t{1} << spec.m, spec.n).back();
}

BigInt dp_count_terms(const FieldPtr& field, const std::vector<Term>& terms) {
  if (terms.empty()) throw Error(Errc::InvalidArgument, "need at least one term");
  std::vector<std::vector<std::uint64_t>> hists;
  for (const auto& t : terms) {
    if (t.coeff.index == 0 || t.coeff.index >= field->q()) {
      throw Error(Errc::InvalidArgument, "coefficients must be nonzero field elements");
    }
    if (t.exponent == 0) throw Error(Errc::InvalidArgument, "exponents must be positive");
    hists.push_back(term_counts(*field, t.coeff, t.exponent));
  }
  if (fits_u128(field->q(), static_cast<unsigned>(terms.size()))) return terms_impl<u128>(*field, hists);
  return terms_impl<BigInt>(*field, hists);
}

namespace {

template <class Real>
struct Attempt {
  Real value = 0;  // (q-1)/(2^m q) * sum_c (...)^n, ideally N - q^(n-1)
  long double bound = 0;
};

template <class Real>
Attempt<Real> evaluate_sum(const FieldPtr& field, unsigned m, unsigned n) {
  const std::uint64_t two_m = std::uint64_t{1} << m;
  const MultChar lambda = character(field, two_m);
  std::vector<Cplx<Real>> g(two_m);
  for (std::uint64_t j = 1; j < two_m; ++j) g[j] = detail::gauss_sum_raw<Real>(lambda.pow(static_cast<std::int64_t>(j)));
  std::vector<Cplx<Real>> roots(two_m);
  for (std::uint64_t k = 0; k < two_m; ++k) roots[k] = root_of_unity<Real>(k, two_m);

  CompensatedSum<Real> total;
  for (std::uint64_t c = 1; c <= two_m; ++c) {
    Cplx<Real> z{};
    for (std::uint64_t j = 1; j < two_m; ++j) z += g[j] * roots[(c * j) % two_m];
    total.add(cpow(z, n));
  }
  const Real q = static_cast<Real>(field->q());
  Attempt<Real> out;
  out.value = total.value().re * (q - 1) / (static_cast<Real>(two_m) * q);

  // First-order propagation of the Gauss sum errors and of the rounding in
  // the inner sums, the powers and the outer sum.
  const long double u = to_long_double(RealTraits<Real>::unit_roundoff());
  const long double sq = std::sqrt(static_cast<long double>(field->q()));
  const long double eg = to_long_double(detail::sum_error_bound<Real>(field->q()));
  const long double Z = static_cast<long double>(two_m - 1) * sq;
  const long double dz = static_cast<long double>(two_m - 1) * (eg + 4 * u * sq);
  const long double zn1 = std::pow(Z, static_cast<long double>(n - 1));
  const long double per_c = n * zn1 * dz + 2.0L * (n + 1) * u * zn1 * Z;
  const long double sum_err = static_cast<long double>(two_m) * (per_c + 2 * u * zn1 * Z);
  out.bound = sum_err / static_cast<long double>(two_m) + 4 * u * std::fabs(to_long_double(out.value));
  return out;
}

template <class Real>
GaussCount certify(const FieldPtr& field, unsigned m, unsigned n) {
  const Attempt<Real> a = evaluate_sum<Real>(field, m, n);
  GaussCount out;
  const BigInt rounded = round_to_bigint(a.value);
  const Real shifted = a.value + Real(0.5);
  Real fl;
  if constexpr (std::is_same_v<Real, quad>) {
    fl = floorq(shifted);
  } else {
    fl = std::floor(shifted);
  }
  Real dist = a.value - fl;
  if (dist < 0) dist = -dist;
  out.residual = static_cast<double>(to_long_double(dist));
  out.error_bound = static_cast<double>(a.bound);
  out.precision = RealTraits<Real>::precision;
  out.N = ipow(field->q(), n - 1) + rounded;
  return out;
}

GaussCount certify_at(const FieldPtr& field, unsigned m, unsigned n, Precision precision) {
  switch (precision) {
    case Precision::Double: return certify<double>(field, m, n);
    case Precision::Extended: return certify<long double>(field, m, n);
    case Precision::Quad: return certify<quad>(field, m, n);
  }
  return certify<double>(field, m, n);
}

bool certified(const GaussCount& g) { return g.residual < 0.25 && g.error_bound < 0.25; }

}  // namespace

GaussCount gauss_count(const FieldPtr& field, unsigned m, unsigned n, Precision start) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (m == 0 || m >= 63 || field->group_order() % (std::uint64_t{1} << m) != 0) {
    throw Error(Errc::OrderNotDividing, "2^m must divide q - 1");
  }
  GaussCount first = certify_at(field, m, n, start);
  if (certified(first)) return first;
  if (start != Precision::Quad) {
    GaussCount second = certify_at(field, m, n, Precision::Quad);
    second.escalated = true;
    if (certified(second)) return second;
    first = second;
  }
  throw Error(Errc::ResidualTooLarge, "rounding not certified: residual " + std::to_string(first.residual) +
                                          ", error bound " + std::to_string(first.error_bound) + " at " +
                                          precision_name(first.precision) + " precision");
}

GaussCount gauss_count(const ProblemSpec& spec, Precision start, std::uint64_t table_budget) {
  return gauss_count(build_field(spec.p, spec.s, table_budget), spec.m, spec.n, start);
}

namespace {

cld to_cld(Cplx<long double> z) { return {z.re, z.im}; }

// The Gauss sums G(lambda^j), 0 < j < 2^m, and their error bound.
struct GaussTable {
  std::uint64_t two_m = 0;
  std::vector<cld> g;
  long double err = 0;

  GaussTable(const FieldPtr& field, unsigned m, Precision precision) : two_m(std::uint64_t{1} << m), g(two_m) {
    const MultChar lambda = character(field, two_m);
    for (std::uint64_t j = 1; j < two_m; ++j) {
      const ComplexVal v = gauss_sum(lambda.pow(static_cast<std::int64_t>(j)), precision);
      g[j] = v.value();
      err = std::max(err, v.err);
    }
  }
  cld at(std::int64_t j) const {
    const auto n = static_cast<std::int64_t>(two_m);
    return g[static_cast<std::size_t>(((j % n) + n) % n)];
  }
};

cld w_from_table(const GaussTable& gt, unsigned m, unsigned r, unsigned t, std::uint64_t c0) {
  const std::uint64_t step = std::uint64_t{1} << (m - r);
  const std::uint64_t den = std::uint64_t{1} << (m - t);
  cld acc = 0;
  for (std::uint64_t j0 = 1; j0 < (std::uint64_t{1} << r); j0 += 2) {
    const std::uint64_t j = step * j0;
    acc += gt.g[j] * to_cld(root_of_unity<long double>(mulmod(c0 % den, j % den, den), den));
  }
  return acc;
}

void check_w_args(unsigned m, unsigned r, unsigned t, std::uint64_t c0) {
  if (r == 0 || r > m) throw Error(Errc::InvalidArgument, "need 1 <= r <= m");
  if (t > m) throw Error(Errc::InvalidArgument, "need 0 <= t <= m");
  if (c0 % 2 == 0) throw Error(Errc::InvalidArgument, "c0 must be odd");
}

}  // namespace

ComplexVal w_values(const FieldPtr& field, unsigned m, unsigned r, unsigned t, std::uint64_t c0, Precision precision) {
  check_w_args(m, r, t, c0);
  if (m >= 63 || field->group_order() % (std::uint64_t{1} << m) != 0) {
    throw Error(Errc::OrderNotDividing, "2^m must divide q - 1");
  }
  const GaussTable gt(field, m, precision);
  const cld w = w_from_table(gt, m, r, t, c0);
  const long double terms = static_cast<long double>(std::uint64_t{1} << (r - 1));
  return ComplexVal{w.real(), w.imag(), terms * (gt.err + 8 * std::ldexp(1.0L, -63) * std::sqrt(static_cast<long double>(field->q()))),
                    precision};
}

namespace {

class Lemma14Auditor {
 public:
  Lemma14Auditor(const FieldPtr& field, unsigned m, const Lemma14Options& opt)
      : field_(field), m_(m), opt_(opt), gt_(field, m, opt.audit.precision) {
    sqrt_q_ = std::sqrt(static_cast<long double>(field->q()));
    tol_ = opt.audit.tolerance_factor * static_cast<double>(sqrt_q_);
    p3_ = field->p() % 8 == 3;
  }

  AuditReport run() {
    AuditReport report;
    report.p = field_->p();
    report.s = field_->s();
    report.q = field_->q();
    report.m = m_;
    report.precision = opt_.audit.precision;
    check_rows(report.entries);
    check_decompositions(report.entries);
    return report;
  }

 private:
  cld W(unsigned r, unsigned t, std::uint64_t c0) const { return w_from_table(gt_, m_, r, t, c0); }
  cld G(std::int64_t j) const { return gt_.at(j); }

  static cld i_pow(std::uint64_t k) {
    static const cld table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k % 4];
  }

  // The stated value of W_{r,t}(c0); nullopt marks a zero row.
  std::optional<cld> expected(unsigned r, unsigned t, std::uint64_t c0) const {
    const std::int64_t two_m = static_cast<std::int64_t>(gt_.two_m);
    if (r == 1) {
      const cld g_eta = G(two_m / 2);
      return t == 0 ? -g_eta : g_eta;
    }
    const std::int64_t step = std::int64_t{1} << (m_ - r);
    const cld plus = G(step) + G(-step);
    const cld minus = G(step) - G(-step);
    if (r == 2) {
      if (t >= 2) return plus;
      if (t == 1) return -plus;
      return i_pow(c0) * minus;
    }
    const long double scale = std::ldexp(1.0L, static_cast<int>(r) - 2);
    if (r <= t) return scale * plus;
    if (r == t + 1) return -scale * plus;
    if (r == t + 2 && !p3_) return scale * i_pow(c0) * minus;
    if (r == t + 3 && p3_) {
      const long double sign = (c0 % 8 == 1 || c0 % 8 == 3) ? 1.0L : -1.0L;
      return sign * (scale / 2) * cld(0, std::sqrt(2.0L)) * minus;
    }
    return std::nullopt;
  }

  void check_rows(std::vector<AuditEntry>& out) const {
    long double worst_rows = 0, worst_zero = 0, worst_w20 = 0;
    for (unsigned r = 1; r <= m_; ++r) {
      for (unsigned t = 0; t <= m_; ++t) {
        for (std::uint64_t c0 = 1; c0 < 2 * gt_.two_m; c0 += 2) {
          const cld w = W(r, t, c0);
          const auto e = expected(r, t, c0);
          if (e) {
            worst_rows = std::max(worst_rows, std::abs(w - *e));
          } else {
            worst_zero = std::max(worst_zero, std::abs(w));
          }
          if (p3_ && r == 2 && t == 0) worst_w20 = std::max(worst_w20, std::abs(w));
        }
      }
    }
    out.push_back(make("L14-rows", true, worst_rows, tol_, "W_{r,t}(c0) against the stated nonzero rows"));
    out.push_back(make("L14-zero", true, worst_zero, tol_, "W_{r,t}(c0) on the rows stated to vanish"));
    out.push_back(make("L14-W20", p3_, worst_w20, tol_, "W_{2,0}(c0) = 0 when p = 3 mod 8"));
  }

  // S_t straight from its definition.
  cld s_direct(unsigned t, unsigned n) const {
    const std::uint64_t den = std::uint64_t{1} << (m_ - t);
    cld acc = 0;
    for (std::uint64_t c0 = 1; c0 <= den; c0 += 2) {
      cld z = 0;
      for (std::uint64_t j = 1; j < gt_.two_m; ++j) {
        z += gt_.g[j] * to_cld(root_of_unity<long double>(mulmod(c0 % den, j % den, den), den));
      }
      acc += std::pow(z, static_cast<int>(n));
    }
    return acc;
  }

  // S_t regrouped by the 2-adic valuation of j.
  cld s_blocks(unsigned t, unsigned n) const {
    const std::uint64_t den = std::uint64_t{1} << (m_ - t);
    cld acc = 0;
    for (std::uint64_t c0 = 1; c0 <= den; c0 += 2) {
      cld z = 0;
      for (unsigned r = 1; r <= m_; ++r) z += W(r, t, c0);
      acc += std::pow(z, static_cast<int>(n));
    }
    return acc;
  }

  // The two-term closed expressions for S_t (and for S_{m-1} + S_m).
  cld corollary(unsigned t, unsigned n) const {
    auto sum_w = [&](unsigned hi, unsigned tt) {
      cld z = 0;
      for (unsigned r = 1; r <= hi; ++r) z += W(r, tt, 1);
      return z;
    };
    auto pw = [&](cld z) { return std::pow(z, static_cast<int>(n)); };
    if (t == m_ - 1) {
      const cld base = sum_w(m_ - 1, m_);
      const cld top = W(m_, m_, 1);
      return pw(base + top) + pw(base - top);
    }
    const long double mult = std::ldexp(1.0L, static_cast<int>(m_ - t) - 2);
    if (p3_) {
      if (t == m_ - 2) return 2.0L * pw(sum_w(m_ - 1, t));
      const cld base = sum_w(t + 1, t);
      const cld extra = W(t + 3, t, 1);
      return mult * (pw(base + extra) + pw(base - extra));
    }
    const cld base = sum_w(t + 1, t);
    const cld extra = W(t + 2, t, 1);
    return mult * (pw(base + extra) + pw(base - extra));
  }

  void check_decompositions(std::vector<AuditEntry>& out) const {
    const unsigned n_max = opt_.recombine_n;
    long double worst_eq6 = 0, worst_c1 = 0, worst_eq5 = 0;
    std::vector<BigInt> dp;
    const bool have_dp = field_->q() <= opt_.dp_budget && n_max > 0;
    if (have_dp) dp = dp_count_series(field_, gt_.two_m, n_max);
    const long double q = static_cast<long double>(field_->q());
    for (unsigned n = 1; n <= n_max; ++n) {
      // Relative scale: every inner sum is bounded by (2^m - 1) sqrt q.
      const long double scale =
          std::max(1.0L, std::pow(static_cast<long double>(gt_.two_m - 1) * sqrt_q_, static_cast<long double>(n)));
      cld total = 0;
      std::vector<cld> direct(m_ + 1);
      for (unsigned t = 0; t <= m_; ++t) {
        direct[t] = s_direct(t, n);
        total += direct[t];
        worst_eq6 = std::max(worst_eq6, std::abs(direct[t] - s_blocks(t, n)) / scale);
      }
      for (unsigned t = 0; t + 1 <= m_; ++t) {
        const cld lhs = t == m_ - 1 ? direct[m_ - 1] + direct[m_] : direct[t];
        worst_c1 = std::max(worst_c1, std::abs(lhs - corollary(t, n)) / scale);
      }
      if (have_dp) {
        const long double recombined =
            std::pow(q, static_cast<long double>(n - 1)) + (q - 1) / (static_cast<long double>(gt_.two_m) * q) * total.real();
        worst_eq5 = std::max(worst_eq5, std::fabs(recombined - static_cast<long double>(dp[n - 1].get_d())));
      }
    }
    constexpr double rel_tol = 1e-9;
    out.push_back(make("Eq6", n_max > 0, worst_eq6, rel_tol, "S_t against its regrouping by W_{r,t}, relative"));
    out.push_back(make("C1", n_max > 0, worst_c1, rel_tol, "two-term expressions for S_t, relative"));
    out.push_back(make("Eq5", have_dp, worst_eq5, 0.25, "recombined count against the convolution count"));
  }

  static AuditEntry make(const std::string& id, bool applicable, long double residual, double tol,
                         const std::string& note) {
    AuditEntry e;
    e.id = id;
    e.applicable = applicable;
    e.residual = applicable ? static_cast<double>(residual) : 0.0;
    e.tolerance = tol;
    e.passed = !applicable || e.residual < tol;
    e.note = note;
    return e;
  }

  FieldPtr field_;
  unsigned m_;
  Lemma14Options opt_;
  GaussTable gt_;
  long double sqrt_q_ = 0;
  double tol_ = 0;
  bool p3_ = false;
};

}  // namespace

AuditReport audit_lemma14(const FieldPtr& field, unsigned m, const Lemma14Options& options) {
  const std::uint64_t r8 = field->p() % 8;
  if (r8 != 3 && r8 != 5) throw Error(Errc::UnsupportedResidue, "needs p = +-3 mod 8");
  const unsigned lower = r8 == 3 ? 3 : 2;
  if (m < lower) throw Error(Errc::InvalidArgument, "m is below the threshold for this residue class");
  if (m >= 63 || field->group_order() % (std::uint64_t{1} << m) != 0) {
    throw Error(Errc::OrderNotDividing, "2^m must divide q - 1");
  }
  return Lemma14Auditor(field, m, options).run();
}

}  // namespace diagcount
