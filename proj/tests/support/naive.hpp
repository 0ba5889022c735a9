#pragma once

// Slow reference implementations used only by the tests.  Nothing here calls
// into the library, so agreement with it is independent evidence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace naive {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low degree first

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// F_{p^s} by schoolbook polynomial arithmetic.  The modulus is the monic
/// irreducible with the largest tail, found by trial division.
class Gf {
 public:
  Gf(u64 p, unsigned s) : p_(p), s_(s), q_(ipow(p, s)) {
    if (s == 1) {
      f_ = {0, 1};
    } else {
      for (u64 tail = q_ - 1;; --tail) {
        Poly f = digits(tail);
        f.push_back(1);
        if (irreducible(f)) {
          f_ = f;
          break;
        }
        if (tail == 0) throw std::logic_error("no irreducible");
      }
    }
  }

  u64 p() const { return p_; }
  unsigned s() const { return s_; }
  u64 q() const { return q_; }

  u64 add(u64 a, u64 b) const {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < s_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  u64 neg(u64 a) const { return mul(a, p_ - 1); }

  u64 mul(u64 a, u64 b) const {
    const Poly x = digits(a), y = digits(b);
    Poly prod(2 * s_, 0);
    for (unsigned i = 0; i < s_; ++i) {
      for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    for (unsigned d = 2 * s_ - 1; d >= s_; --d) {
      const u64 c = prod[d];
      if (c == 0) continue;
      for (unsigned i = 0; i <= s_; ++i) prod[d - s_ + i] = (prod[d - s_ + i] + (p_ - c) * f_[i]) % p_;
    }
    u64 out = 0;
    for (unsigned i = s_; i-- > 0;) out = out * p_ + prod[i];
    return out;
  }

  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Absolute trace, as a residue mod p.
  u64 trace(u64 a) const {
    u64 t = 0, x = a;
    for (unsigned i = 0; i < s_; ++i) {
      t = add(t, x);
      x = pow(x, p_);
    }
    return t;  // lies in the prime field, so it equals its constant term
  }

  u64 generator() const {
    for (u64 g = 2; g < q_; ++g) {
      bool ok = true;
      for (u64 d = 1; d < q_ - 1 && ok; ++d) {
        if ((q_ - 1) % d == 0 && pow(g, d) == 1) ok = false;
      }
      if (ok) return g;
    }
    return 1;  // q = 2, 3
  }

 private:
  Poly digits(u64 x) const {
    Poly out(s_);
    for (unsigned i = 0; i < s_; ++i) {
      out[i] = x % p_;
      x /= p_;
    }
    return out;
  }

  // Remainder of a modulo monic b over F_p.
  Poly rem(Poly a, const Poly& b) const {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const u64 c = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p_ - c) * b[i]) % p_;
      a.pop_back();
    }
    return a;
  }

  bool irreducible(const Poly& f) const {
    for (unsigned d = 1; 2 * d <= s_; ++d) {
      for (u64 tail = 0; tail < ipow(p_, d); ++tail) {
        Poly g(d + 1);
        u64 t = tail;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = t % p_;
          t /= p_;
        }
        g[d] = 1;
        const Poly r = rem(f, g);
        if (std::all_of(r.begin(), r.end(), [](u64 c) { return c == 0; })) return false;
      }
    }
    return true;
  }

  u64 p_;
  unsigned s_;
  u64 q_;
  Poly f_;
};

/// Solutions of sum_j c_j x_j^(e_j) = 0 by full enumeration.
inline u64 count_terms(const Gf& F, const std::vector<std::pair<u64, u64>>& terms) {
  std::vector<std::vector<u64>> vals;
  for (const auto& [c, e] : terms) {
    std::vector<u64> v(F.q());
    for (u64 x = 0; x < F.q(); ++x) v[x] = F.mul(c, F.pow(x, e));
    vals.push_back(v);
  }
  u64 hits = 0;
  std::vector<u64> idx(terms.size(), 0);
  while (true) {
    u64 sum = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) sum = F.add(sum, vals[j][idx[j]]);
    if (sum == 0) ++hits;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == F.q()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return hits;
}

inline u64 count_diagonal(u64 p, unsigned s, u64 d, unsigned n) {
  const Gf F(p, s);
  return count_terms(F, std::vector<std::pair<u64, u64>>(n, {1, d}));
}

/// G(chi_j) for chi_j(g^k) = exp(2 pi i j k / d), j = 1 .. d - 1.
inline std::vector<std::complex<long double>> gauss_sums(u64 p, unsigned s, u64 d) {
  const Gf F(p, s);
  const u64 q = F.q();
  const u64 g = F.generator();
  const long double tau = 2 * std::numbers::pi_v<long double>;
  std::vector<std::complex<long double>> out;
  for (u64 j = 1; j < d; ++j) {
    std::complex<long double> acc = 0;
    u64 x = 1;
    for (u64 k = 0; k < q - 1; ++k) {
      const long double a = tau * static_cast<long double>((j * k) % d) / static_cast<long double>(d);
      const long double b = tau * static_cast<long double>(F.trace(x)) / static_cast<long double>(p);
      acc += std::polar(1.0L, a + b);
      x = F.mul(x, g);
    }
    out.push_back(acc);
  }
  return out;
}

/// All (x, y) with x, y >= 0, x^2 + d y^2 = M and p not dividing x.
inline std::vector<std::pair<u64, u64>> representations(u64 M, u64 d, u64 p) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 y = 0; d * y * y <= M; ++y) {
    const u64 rest = M - d * y * y;
    u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(rest)));
    while (x * x > rest) --x;
    while ((x + 1) * (x + 1) <= rest) ++x;
    if (x * x == rest && x % p != 0) out.emplace_back(x, y);
  }
  return out;
}

/// The normalized first component: the sign making it -1 mod 4.
inline long normalize_first(u64 x) {
  const long v = static_cast<long>(x);
  return ((v % 4) + 4) % 4 == 3 ? v : -v;
}

}  // namespace naive
