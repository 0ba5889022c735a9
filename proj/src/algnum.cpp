#include "diagcount/algnum.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "diagcount/errors.hpp"

namespace diagcount {

OctElement OctElement::basis(std::uint64_t p, unsigned a, unsigned b, unsigned c) {
  if (a > 1 || b > 1 || c > 1) throw Error(Errc::InvalidArgument, "basis exponents must be 0 or 1");
  OctElement x(p);
  x.c_[a + 2 * b + 4 * c] = 1;
  return x;
}

std::uint64_t OctElement::merged_p(const OctElement& y) const {
  if (p_ == 0) return y.p_;
  if (y.p_ == 0 || y.p_ == p_) return p_;
  throw Error(Errc::MixedGroundPrime,
              "elements over sqrt" + std::to_string(p_) + " and sqrt" + std::to_string(y.p_) + " do not combine");
}

bool OctElement::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

bool OctElement::is_rational() const {
  for (unsigned k = 1; k < 8; ++k) {
    if (c_[k] != 0) return false;
  }
  return true;
}

OctElement& OctElement::operator+=(const OctElement& y) {
  p_ = merged_p(y);
  for (unsigned k = 0; k < 8; ++k) c_[k] += y.c_[k];
  return *this;
}

OctElement& OctElement::operator-=(const OctElement& y) {
  p_ = merged_p(y);
  for (unsigned k = 0; k < 8; ++k) c_[k] -= y.c_[k];
  return *this;
}

OctElement& OctElement::operator*=(const OctElement& y) {
  const std::uint64_t p = merged_p(y);
  if (p == 0 && !(is_rational() && y.is_rational())) {
    throw Error(Errc::MixedGroundPrime, "irrational element without a ground prime");
  }
  std::array<Rational, 8> out{};
  const Rational rp(static_cast<unsigned long>(p));
  for (unsigned k1 = 0; k1 < 8; ++k1) {
    if (c_[k1] == 0) continue;
    for (unsigned k2 = 0; k2 < 8; ++k2) {
      if (y.c_[k2] == 0) continue;
      Rational term = c_[k1] * y.c_[k2];
      const unsigned both = k1 & k2;
      if (both & 1) term *= 2;
      if (both & 2) term *= rp;
      if (both & 4) term = -term;
      out[k1 ^ k2] += term;
    }
  }
  c_ = out;
  p_ = p;
  return *this;
}

OctElement& OctElement::operator*=(const Rational& k) {
  for (auto& v : c_) v *= k;
  return *this;
}

OctElement OctElement::operator-() const {
  OctElement x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

bool operator==(const OctElement& x, const OctElement& y) {
  if (x.p_ != 0 && y.p_ != 0 && x.p_ != y.p_) return false;
  for (unsigned k = 0; k < 8; ++k) {
    if (x.c_[k] != y.c_[k]) return false;
  }
  return true;
}

OctElement OctElement::pow(unsigned long n) const {
  OctElement out(p_, Rational(1));
  OctElement base = *this;
  while (n > 0) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

OctElement OctElement::conj() const {
  OctElement x = *this;
  for (unsigned k = 4; k < 8; ++k) x.c_[k] = -x.c_[k];
  return x;
}

std::complex<long double> OctElement::approx() const {
  const long double r2 = std::sqrt(2.0L);
  const long double rp = std::sqrt(static_cast<long double>(p_));
  long double re = 0, im = 0;
  for (unsigned k = 0; k < 8; ++k) {
    if (c_[k] == 0) continue;
    long double v = static_cast<long double>(c_[k].get_d());
    if (k & 1) v *= r2;
    if (k & 2) v *= rp;
    (k & 4 ? im : re) += v;
  }
  return {re, im};
}

std::string OctElement::to_string() const {
  static const char* const names[8] = {"", "*sqrt2", "*sqrtp", "*sqrt2p", "*i", "*sqrt2*i", "*sqrtp*i", "*sqrt2p*i"};
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < 8; ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].get_str() << ")" << names[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

OctElement p_half_power(std::uint64_t p, unsigned long e) {
  OctElement x(p, Rational(ipow(p, e / 2)));
  if (e % 2 == 1) x *= OctElement::sqrtp(p);
  return x;
}

OctElement paired_power(const OctElement& u, const OctElement& w2, unsigned long n) {
  const std::uint64_t p = u.p() != 0 ? u.p() : w2.p();
  OctElement total(p);
  // Walk k = 0, 2, 4, ... with u^(n-k) taken from a descending table.
  std::vector<OctElement> u_pows(n + 1);
  u_pows[0] = OctElement(p, Rational(1));
  for (unsigned long j = 1; j <= n; ++j) u_pows[j] = u_pows[j - 1] * u;
  OctElement w2_pow(p, Rational(1));
  BigInt binom = 1;  // C(n, k)
  for (unsigned long k = 0; k <= n; k += 2) {
    total += u_pows[n - k] * w2_pow * Rational(binom);
    if (k + 2 > n) break;
    binom *= (n - k);
    binom *= (n - k - 1);
    binom /= (k + 1);
    binom /= (k + 2);
    w2_pow *= w2;
  }
  return total * Rational(2);
}

BigInt extract_integer(const OctElement& x) {
  if (!x.is_rational()) throw Error(Errc::ImpureResult, "irrational remainder " + x.to_string());
  const Rational& r = x.coord(0);
  if (r.get_den() != 1) throw Error(Errc::ImpureResult, "non-integral value " + r.get_str());
  return r.get_num();
}

}  // namespace diagcount
