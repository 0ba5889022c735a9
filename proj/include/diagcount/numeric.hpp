#pragma once

// Minimal complex arithmetic over double, long double and __float128, plus
// the per-precision constants the error bounds are built from.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include <quadmath.h>

#include "diagcount/ntheory.hpp"

namespace diagcount {

enum class Precision { Double, Extended, Quad };

const char* precision_name(Precision p) noexcept;
Precision parse_precision(const std::string& name);

using quad = __float128;

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
  static constexpr Precision precision = Precision::Double;
  static double unit_roundoff() { return std::ldexp(1.0, -53); }
  static double cos(double x) { return std::cos(x); }
  static double sin(double x) { return std::sin(x); }
  static double two_pi() { return 6.283185307179586476925286766559; }
};

template <>
struct RealTraits<long double> {
  static constexpr Precision precision = Precision::Extended;
  static long double unit_roundoff() { return std::ldexp(1.0L, -std::numeric_limits<long double>::digits); }
  static long double cos(long double x) { return std::cos(x); }
  static long double sin(long double x) { return std::sin(x); }
  static long double two_pi() { return 6.283185307179586476925286766559005768L; }
};

template <>
struct RealTraits<quad> {
  static constexpr Precision precision = Precision::Quad;
  static quad unit_roundoff() { return ldexpq(1.0, -113); }
  static quad cos(quad x) { return cosq(x); }
  static quad sin(quad x) { return sinq(x); }
  static quad two_pi() { return 2 * M_PIq; }
};

template <class Real>
struct Cplx {
  Real re = 0;
  Real im = 0;

  friend Cplx operator+(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(Cplx a) { return {-a.re, -a.im}; }
  friend Cplx operator*(Cplx a, Cplx b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Cplx operator*(Real k, Cplx a) { return {k * a.re, k * a.im}; }
  Cplx& operator+=(Cplx b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Cplx conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
};

template <class Real>
Cplx<Real> cpow(Cplx<Real> base, unsigned n) {
  Cplx<Real> out{1, 0};
  while (n > 0) {
    if (n & 1) out = out * base;
    base = base * base;
    n >>= 1;
  }
  return out;
}

/// exp(2 pi i num / den) with the angle reduced exactly before evaluation.
template <class Real>
Cplx<Real> root_of_unity(std::uint64_t num, std::uint64_t den) {
  num %= den;
  if (num == 0) return {1, 0};
  if (2 * num == den) return {-1, 0};
  if (4 * num == den) return {0, 1};
  if (4 * num == 3 * den) return {0, -1};
  const Real angle = RealTraits<Real>::two_pi() * static_cast<Real>(num) / static_cast<Real>(den);
  return {RealTraits<Real>::cos(angle), RealTraits<Real>::sin(angle)};
}

/// Neumaier-compensated complex accumulator.  Deterministic for a fixed
/// summation order.
template <class Real>
class CompensatedSum {
 public:
  void add(Cplx<Real> x) {
    step(sum_.re, comp_.re, x.re);
    step(sum_.im, comp_.im, x.im);
  }
  Cplx<Real> value() const { return {sum_.re + comp_.re, sum_.im + comp_.im}; }

 private:
  static void step(Real& sum, Real& comp, Real x) {
    const Real t = sum + x;
    const Real as = sum < 0 ? -sum : sum;
    const Real ax = x < 0 ? -x : x;
    if (as >= ax) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  Cplx<Real> sum_;
  Cplx<Real> comp_;
};

inline long double to_long_double(double x) { return x; }
inline long double to_long_double(long double x) { return x; }
inline long double to_long_double(quad x) { return static_cast<long double>(x); }

/// Nearest integer to x as a BigInt, exact for any finite x.
BigInt round_to_bigint(long double x);
BigInt round_to_bigint(quad x);
inline BigInt round_to_bigint(double x) { return round_to_bigint(static_cast<long double>(x)); }

}  // namespace diagcount
