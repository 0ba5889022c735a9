#include "diagcount/extensions.hpp"

#include <numeric>

#include "diagcount/errors.hpp"

namespace diagcount {

namespace {

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

void require_pairwise_coprime(const std::vector<std::uint64_t>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (gcd_u64(xs[i], xs[j]) != 1) {
        throw Error(Errc::CoprimalityViolation, std::string(what) + " " + std::to_string(xs[i]) + " and " +
                                                    std::to_string(xs[j]) + " share a factor");
      }
    }
  }
}

}  // namespace

std::vector<std::uint64_t> reduce_exponents(const std::vector<std::uint64_t>& d, const BigInt& q) {
  if (d.empty()) throw Error(Errc::InvalidArgument, "need at least one exponent");
  const BigInt q1 = q - 1;
  std::vector<BigInt> dd;
  for (std::uint64_t x : d) {
    if (x == 0) throw Error(Errc::InvalidArgument, "exponents must be positive");
    dd.push_back(big_gcd(big(x), q1));
  }
  std::vector<std::uint64_t> w;
  for (std::size_t j = 0; j < dd.size(); ++j) {
    BigInt l = 1;
    for (std::size_t i = 0; i < dd.size(); ++i) {
      if (i != j) l = big_lcm(l, dd[i]);
    }
    w.push_back(big_gcd(dd[j], l).get_ui());
  }
  return w;
}

BigInt count_coprime_scaled(const ProblemSpec& base, const std::vector<std::uint64_t>& h) {
  if (h.size() != base.n) throw Error(Errc::InvalidArgument, "need one scale factor per variable");
  for (std::uint64_t x : h) {
    if (x == 0) throw Error(Errc::InvalidArgument, "scale factors must be positive");
  }
  require_pairwise_coprime(h, "scale factors");
  BigInt prod = BigInt(1) << base.m;
  for (std::uint64_t x : h) prod *= big(x);
  if ((base.q - 1) % prod != 0) {
    throw Error(Errc::DivisibilityViolation, "2^m * prod h_j = " + prod.get_str() + " does not divide q - 1");
  }
  return count(base).N;
}

unsigned semiprimitive_level(std::uint64_t p, unsigned s, std::uint64_t u) {
  for (unsigned l = 1; 2 * l <= s; ++l) {
    if ((powmod(p % u, l, u) + 1) % u == 0) return l;
  }
  throw Error(Errc::NotSemiprimitive, std::to_string(u) + " divides no p^l + 1 with l <= s/2");
}

BigInt count_with_odd_semiprimitive(const ProblemSpec& base, const std::vector<OddPart>& parts,
                                    const SemiprimitiveOptions& options) {
  if (parts.empty()) throw Error(Errc::InvalidArgument, "need at least one odd part");
  std::vector<std::uint64_t> us;
  unsigned extra = 0;
  for (const auto& part : parts) {
    if (part.u < 3 || part.u % 2 == 0) throw Error(Errc::InvalidArgument, "u_j must be odd and greater than 2");
    if (part.n == 0) throw Error(Errc::InvalidArgument, "n_j must be positive");
    us.push_back(part.u);
    extra += part.n;
  }
  require_pairwise_coprime(us, "odd exponents");

  unsigned long sign_exp = 0;
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& part : parts) {
    const unsigned l = semiprimitive_level(base.p, base.s, part.u);
    if (base.s % (2 * l) != 0) {
      throw Error(Errc::DivisibilityViolation, "2 * " + std::to_string(l) + " does not divide s for u = " +
                                                   std::to_string(part.u));
    }
    // G(psi) = (-1)^(s/(2l) - 1) sqrt(q) for psi of order u_j.
    const unsigned level = options.literal_sign ? base.s / l : base.s / (2 * l);
    sign_exp += static_cast<unsigned long>(level - 1) * part.n;
    const BigInt um1 = big(part.u - 1);
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), um1.get_mpz_t(), part.n);
    term += part.n % 2 == 0 ? um1 : BigInt(-um1);
    num *= term;
    den *= big(part.u);
  }
  if (num % den != 0) throw Error(Errc::Internal, "odd-part factor is not integral");

  const BigInt N = count(base).N;
  const BigInt qn1 = ipow(base.p, static_cast<unsigned long>(base.s) * (base.n - 1));
  // q^(extra/2) = p^(s extra / 2); s is even here.
  const BigInt half = ipow(base.p, static_cast<unsigned long>(base.s) * extra / 2);
  BigInt out = ipow(base.p, static_cast<unsigned long>(base.s) * (base.n + extra - 1));
  BigInt delta = (N - qn1) * half * (num / den);
  if (sign_exp % 2 == 1) delta = -delta;
  return out + delta;
}

int quadratic_character_value(const Field& field, Element x) {
  if (x.index == 0) return 0;
  return field.pow(x, field.group_order() / 2).index == Field::one().index ? 1 : -1;
}

BigInt count_with_quadratic_form(const ProblemSpec& base, unsigned k, Element delta, const Field& field) {
  if (field.p() != base.p || field.s() != base.s) {
    throw Error(Errc::SubfieldMismatch, "field does not match the base specification");
  }
  if (k == 0 || k % 2 == 1) throw Error(Errc::OddK, "k must be even and positive, got " + std::to_string(k));
  if (delta.index >= field.q()) throw Error(Errc::InvalidArgument, "delta is not a field element");
  if (delta.index == 0) throw Error(Errc::DegenerateForm, "determinant is zero");
  Element arg = delta;
  if ((k / 2) % 2 == 1) arg = field.neg(arg);
  const int eta = quadratic_character_value(field, arg);
  const BigInt N = count(base).N;
  const BigInt qn1 = ipow(base.p, static_cast<unsigned long>(base.s) * (base.n - 1));
  const BigInt qk2 = ipow(base.p, static_cast<unsigned long>(base.s) * k / 2);
  const BigInt out = ipow(base.p, static_cast<unsigned long>(base.s) * (base.n + k - 1));
  const BigInt delta_term = qk2 * (N - qn1);
  return eta > 0 ? BigInt(out + delta_term) : BigInt(out - delta_term);
}

BigInt count_with_quadratic_form(const ProblemSpec& base, const std::vector<Element>& coefficients,
                                 const Field& field) {
  if (coefficients.size() % 2 == 1 || coefficients.empty()) {
    throw Error(Errc::OddK, "k must be even and positive, got " + std::to_string(coefficients.size()));
  }
  Element delta = Field::one();
  for (Element b : coefficients) {
    if (b.index >= field.q()) throw Error(Errc::InvalidArgument, "coefficient is not a field element");
    delta = field.mul(delta, b);
  }
  return count_with_quadratic_form(base, static_cast<unsigned>(coefficients.size()), delta, field);
}

}  // namespace diagcount
