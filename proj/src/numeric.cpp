#include "diagcount/numeric.hpp"

#include "diagcount/errors.hpp"

namespace diagcount {

const char* precision_name(Precision p) noexcept {
  switch (p) {
    case Precision::Double: return "double";
    case Precision::Extended: return "extended";
    case Precision::Quad: return "quad";
  }
  return "double";
}

Precision parse_precision(const std::string& name) {
  if (name == "double") return Precision::Double;
  if (name == "extended") return Precision::Extended;
  if (name == "quad") return Precision::Quad;
  throw Error(Errc::InvalidArgument, "unknown precision '" + name + "' (expected double, extended or quad)");
}

namespace {

template <class Real>
BigInt round_impl(Real x, Real (*floor_fn)(Real), Real (*ldexp_fn)(Real, int)) {
  const Real r = floor_fn(x + Real(0.5));
  const bool negative = r < 0;
  Real mag = negative ? -r : r;
  // Peel off 32-bit limbs from the top; every intermediate is an exact integer.
  BigInt out = 0;
  int shift = 0;
  while (ldexp_fn(Real(1), shift) <= mag) shift += 32;
  for (shift -= 32; shift >= 0; shift -= 32) {
    const Real scale = ldexp_fn(Real(1), shift);
    const Real limb = floor_fn(mag / scale);
    mag -= limb * scale;
    out <<= 32;
    out += static_cast<unsigned long>(limb);
  }
  return negative ? BigInt(-out) : out;
}

long double floor_ld(long double x) { return std::floor(x); }
long double ldexp_ld(long double x, int e) { return std::ldexp(x, e); }
quad floor_q(quad x) { return floorq(x); }
quad ldexp_q(quad x, int e) { return ldexpq(x, e); }

}  // namespace

BigInt round_to_bigint(long double x) { return round_impl<long double>(x, floor_ld, ldexp_ld); }

BigInt round_to_bigint(quad x) { return round_impl<quad>(x, floor_q, ldexp_q); }

}  // namespace diagcount
