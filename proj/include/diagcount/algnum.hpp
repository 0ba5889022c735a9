#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "diagcount/ntheory.hpp"

namespace diagcount {

/// Exact element of Q(sqrt2, sqrtp, i) restricted to the rank-8 span of
/// sqrt2^a * sqrtp^b * i^c, a, b, c in {0, 1}.  Coordinate index is
/// a + 2b + 4c.
///
/// An element built with p = 0 carries only a rational part and combines
/// with elements over any ground prime.
class OctElement {
 public:
  OctElement() = default;
  explicit OctElement(std::uint64_t p) : p_(p) {}
  OctElement(std::uint64_t p, const Rational& r) : p_(p) { c_[0] = r; }

  static OctElement basis(std::uint64_t p, unsigned a, unsigned b, unsigned c);
  static OctElement sqrt2(std::uint64_t p) { return basis(p, 1, 0, 0); }
  static OctElement sqrtp(std::uint64_t p) { return basis(p, 0, 1, 0); }
  static OctElement imag(std::uint64_t p) { return basis(p, 0, 0, 1); }

  std::uint64_t p() const noexcept { return p_; }
  const Rational& coord(unsigned index) const { return c_.at(index); }
  Rational& coord(unsigned index) { return c_.at(index); }
  const Rational& coord(unsigned a, unsigned b, unsigned c) const { return c_.at(a + 2 * b + 4 * c); }

  bool is_zero() const;
  bool is_rational() const;

  OctElement& operator+=(const OctElement& y);
  OctElement& operator-=(const OctElement& y);
  OctElement& operator*=(const OctElement& y);
  OctElement& operator*=(const Rational& k);

  friend OctElement operator+(OctElement x, const OctElement& y) { return x += y; }
  friend OctElement operator-(OctElement x, const OctElement& y) { return x -= y; }
  friend OctElement operator*(OctElement x, const OctElement& y) { return x *= y; }
  friend OctElement operator*(OctElement x, const Rational& k) { return x *= k; }
  friend OctElement operator*(const Rational& k, OctElement x) { return x *= k; }
  OctElement operator-() const;

  /// Equality of values; a p = 0 rational equals the same rational over any p.
  friend bool operator==(const OctElement& x, const OctElement& y);

  OctElement pow(unsigned long n) const;
  /// Complex conjugation (i -> -i).
  OctElement conj() const;
  /// Numeric value using the positive real square roots.
  std::complex<long double> approx() const;
  std::string to_string() const;

 private:
  std::uint64_t merged_p(const OctElement& y) const;

  std::uint64_t p_ = 0;
  std::array<Rational, 8> c_{};
};

/// p^(e/2): an integer when e is even, otherwise an integer times sqrtp.
OctElement p_half_power(std::uint64_t p, unsigned long e);

/// (u + w)^n + (u - w)^n = 2 sum_{k even} C(n, k) u^(n-k) (w^2)^(k/2),
/// given only w2 = w^2.
OctElement paired_power(const OctElement& u, const OctElement& w2, unsigned long n);

/// The value as a rational integer.  Errors: ImpureResult.
BigInt extract_integer(const OctElement& x);

}  // namespace diagcount
