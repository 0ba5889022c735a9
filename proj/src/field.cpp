#include "diagcount/field.hpp"

#include <algorithm>
#include <sstream>

namespace diagcount {

namespace poly {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo f (f need not be monic).
Poly mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = invmod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t factor = diagcount::mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - diagcount::mulmod(factor, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + diagcount::mulmod(a[i], b[j], p)) % p;
    }
  }
  return mod(std::move(prod), f, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result = mod(Poly{1}, f, p);
  base = mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const unsigned s = static_cast<unsigned>(f.size() - 1);
  if (s == 1) return true;
  if (f[0] == 0) return false;
  // Frobenius powers x^(p^i) mod f for i = 0..s.
  std::vector<Poly> frob(s + 1);
  frob[0] = mod(Poly{0, 1}, f, p);
  for (unsigned i = 1; i <= s; ++i) frob[i] = powmod(frob[i - 1], p, f, p);
  Poly x = mod(Poly{0, 1}, f, p);
  if (frob[s] != x) return false;
  for (std::uint64_t ell : prime_factors(s)) {
    Poly h = frob[s / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

namespace {

poly::Poly index_to_poly(std::uint64_t index, std::uint64_t p, unsigned s) {
  poly::Poly out(s, 0);
  for (unsigned i = 0; i < s; ++i) {
    out[i] = index % p;
    index /= p;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::uint64_t poly_to_index(const poly::Poly& a, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned s, std::uint64_t table_budget) {
  if (p <= 2 || !is_prime_u64(p)) {
    throw Error(Errc::NotPrime, "field characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (s == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
  const std::uint64_t q = checked_pow(p, s);
  const std::uint64_t budget = std::min<std::uint64_t>(table_budget, UINT32_MAX);
  if (q == 0 || q > budget) {
    throw Error(Errc::BudgetExceeded, "p^s = " + std::to_string(p) + "^" + std::to_string(s) +
                                          " exceeds the table budget " + std::to_string(budget));
  }
  params_ = FieldParams{p, s, q};
  powers_of_p_.resize(s);
  std::uint64_t pw = 1;
  for (unsigned i = 0; i < s; ++i, pw *= p) powers_of_p_[i] = static_cast<std::uint32_t>(pw);
  order_factors_ = prime_factors(q - 1);
  choose_modulus();
  choose_generator_and_tables();
  build_trace_table();
}

void Field::choose_modulus() {
  const std::uint64_t p = params_.p;
  const unsigned s = params_.s;
  if (s == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (std::uint64_t tail = 1; tail < params_.q; ++tail) {
    if (tail % p == 0) continue;  // x divides it
    poly::Poly f(s + 1, 0);
    std::uint64_t t = tail;
    for (unsigned i = 0; i < s; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[s] = 1;
    if (poly::is_irreducible(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw Error(Errc::IrreducibleSearchExhausted, "no irreducible polynomial found");
}

void Field::choose_generator_and_tables() {
  const std::uint64_t p = params_.p;
  const unsigned s = params_.s;
  const std::uint64_t order = params_.q - 1;
  const poly::Poly& f = modulus_;
  poly::Poly g;
  const poly::Poly one = {1};
  for (std::uint64_t cand = 1; cand < params_.q; ++cand) {
    poly::Poly c = s == 1 ? poly::Poly{cand} : index_to_poly(cand, p, s);
    bool primitive = true;
    for (std::uint64_t ell : order_factors_) {
      if (poly::powmod(c, order / ell, f, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = std::move(c);
      break;
    }
  }
  if (g.empty()) throw Error(Errc::Internal, "no primitive element found");

  exp_.assign(order, 0);
  log_.assign(params_.q, 0);
  if (s == 1) {
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      exp_[k] = static_cast<std::uint32_t>(cur);
      cur = mulmod(cur, g[0], p);
    }
  } else {
    poly::Poly cur = {1};
    for (std::uint64_t k = 0; k < order; ++k) {
      exp_[k] = static_cast<std::uint32_t>(poly_to_index(cur, p));
      cur = poly::mulmod(cur, g, f, p);
    }
  }
  for (std::uint64_t k = 0; k < order; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
}

void Field::build_trace_table() {
  const unsigned s = params_.s;
  const std::uint64_t p = params_.p;
  const std::uint64_t order = params_.q - 1;
  // Trace of each basis monomial x^i, then extend by F_p-linearity.
  std::vector<std::uint64_t> basis_trace(s, 0);
  for (unsigned i = 0; i < s; ++i) {
    const Element monomial{powers_of_p_[i]};
    const std::uint64_t l = log_[monomial.index];
    Element acc = zero();
    std::uint64_t frob_exp = l;
    for (unsigned j = 0; j < s; ++j) {
      acc = add(acc, exp(frob_exp));
      frob_exp = mulmod(frob_exp, p, order);
    }
    if (acc.index >= p) throw Error(Errc::Internal, "trace left the prime field");
    basis_trace[i] = acc.index;
  }
  trace_.assign(params_.q, 0);
  for (std::uint64_t x = 0; x < params_.q; ++x) {
    std::uint64_t t = x;
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < s; ++i) {
      acc += (t % p) * basis_trace[i];
      t /= p;
    }
    trace_[x] = static_cast<std::uint32_t>(acc % p);
  }
}

std::uint64_t Field::dlog(Element x) const {
  if (x.index == 0) throw Error(Errc::ZeroHasNoDlog, "dlog(0) is undefined");
  return log_[x.index];
}

Element Field::add(Element a, Element b) const noexcept {
  const std::uint32_t p = static_cast<std::uint32_t>(params_.p);
  if (params_.s == 1) return Element{static_cast<std::uint32_t>((std::uint64_t{a.index} + b.index) % p)};
  std::uint32_t x = a.index, y = b.index, r = 0;
  for (unsigned i = 0; i < params_.s; ++i) {
    r += ((x % p + y % p) % p) * powers_of_p_[i];
    x /= p;
    y /= p;
  }
  return Element{r};
}

Element Field::neg(Element a) const noexcept {
  const std::uint32_t p = static_cast<std::uint32_t>(params_.p);
  std::uint32_t x = a.index, r = 0;
  for (unsigned i = 0; i < params_.s; ++i) {
    r += ((p - x % p) % p) * powers_of_p_[i];
    x /= p;
  }
  return Element{r};
}

Element Field::mul(Element a, Element b) const noexcept {
  if (a.index == 0 || b.index == 0) return zero();
  const std::uint64_t k = std::uint64_t{log_[a.index]} + log_[b.index];
  return Element{exp_[k % exp_.size()]};
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw Error(Errc::ZeroHasNoDlog, "0 has no inverse");
  const std::uint64_t order = exp_.size();
  return Element{exp_[(order - log_[a.index]) % order]};
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (a.index == 0) return e == 0 ? one() : zero();
  const std::uint64_t order = exp_.size();
  return Element{exp_[mulmod(log_[a.index], e % order, order)]};
}

Element Field::pow(Element a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  if (a.index == 0) return e == 0 ? one() : zero();
  BigInt reduced = e % BigInt(std::to_string(group_order()));
  return pow(a, static_cast<std::uint64_t>(reduced.get_ui()));
}

Element Field::norm(Element x, unsigned sub_degree) const {
  if (sub_degree == 0 || params_.s % sub_degree != 0) {
    throw Error(Errc::SubfieldMismatch, "F_{p^" + std::to_string(sub_degree) + "} is not a subfield of F_{p^" +
                                            std::to_string(params_.s) + "}");
  }
  const std::uint64_t q0 = checked_pow(params_.p, sub_degree);
  return pow(x, group_order() / (q0 - 1));
}

bool Field::in_subfield(Element x, unsigned sub_degree) const {
  if (sub_degree == 0 || params_.s % sub_degree != 0) {
    throw Error(Errc::SubfieldMismatch, "not a subfield degree");
  }
  if (x.index == 0) return true;
  const std::uint64_t q0 = checked_pow(params_.p, sub_degree);
  return log_[x.index] % (group_order() / (q0 - 1)) == 0;
}

Element Field::from_int(std::int64_t r) const noexcept {
  const auto p = static_cast<std::int64_t>(params_.p);
  return Element{static_cast<std::uint32_t>(((r % p) + p) % p)};
}

Element Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > params_.s) throw Error(Errc::InvalidArgument, "too many coefficients");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= params_.p) throw Error(Errc::InvalidArgument, "coefficient out of range");
    idx += coeffs[i] * powers_of_p_[i];
  }
  return Element{idx};
}

std::vector<std::uint32_t> Field::coeffs(Element x) const {
  std::vector<std::uint32_t> out(params_.s, 0);
  std::uint32_t t = x.index;
  for (unsigned i = 0; i < params_.s; ++i) {
    out[i] = t % static_cast<std::uint32_t>(params_.p);
    t /= static_cast<std::uint32_t>(params_.p);
  }
  return out;
}

std::string Field::to_string(Element x) const {
  if (x.index == 0) return "0";
  const auto c = coeffs(x);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FieldPtr build_field(std::uint64_t p, unsigned s, std::uint64_t table_budget) {
  return std::make_shared<const Field>(p, s, table_budget);
}

}  // namespace diagcount
