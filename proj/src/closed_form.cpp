#include "diagcount/closed_form.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "diagcount/errors.hpp"

namespace diagcount {

const char* case_tag_name(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Squares: return "SQUARES";
    case CaseTag::QuarticW: return "QUARTIC_W";
    case CaseTag::T1: return "T1";
    case CaseTag::T2: return "T2";
    case CaseTag::T3: return "T3";
    case CaseTag::T4: return "T4";
  }
  return "?";
}

CaseTag parse_case_tag(const std::string& name) {
  for (CaseTag t : {CaseTag::Squares, CaseTag::QuarticW, CaseTag::T1, CaseTag::T2, CaseTag::T3, CaseTag::T4}) {
    if (name == case_tag_name(t)) return t;
  }
  throw Error(Errc::InvalidArgument, "unknown case tag '" + name + "'");
}

ProblemSpec classify(std::uint64_t p, unsigned s, unsigned m, unsigned n) {
  if (p == 2 || !is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (s == 0 || m == 0 || n == 0) throw Error(Errc::InvalidArgument, "s, m and n must be positive");
  ProblemSpec spec;
  spec.p = p;
  spec.s = s;
  spec.m = m;
  spec.n = n;
  spec.q = ipow(p, s);
  spec.v2 = nu2(BigInt(spec.q - 1));
  const std::uint64_t r8 = p % 8;
  if (m >= 3 && (r8 == 1 || r8 == 7)) {
    throw Error(Errc::UnsupportedResidue, "p = " + std::to_string(p) + " is +-1 mod 8; m >= 3 needs p = +-3 mod 8");
  }
  if (m == 2 && r8 == 1) throw Error(Errc::UnsupportedResidue, "p = 1 mod 8 with m = 2 has no closed form here");
  if (m == 2 && p % 4 == 3 && s % 2 == 1) {
    throw Error(Errc::BelowThreshold, "p = 3 mod 4 with m = 2 needs s even");
  }
  if (m > spec.v2) {
    throw Error(Errc::OrderNotDividing, "2^" + std::to_string(m) + " does not divide q - 1 = " + BigInt(spec.q - 1).get_str());
  }
  if (m == 1) {
    spec.tag = CaseTag::Squares;
  } else if (m == 2 && p % 4 == 3) {
    spec.tag = CaseTag::QuarticW;
  } else if (r8 == 3) {
    spec.tag = m + 1 <= spec.v2 ? CaseTag::T1 : CaseTag::T2;
  } else {
    spec.tag = m + 1 <= spec.v2 ? CaseTag::T3 : CaseTag::T4;
  }
  return spec;
}

namespace {

template <class Part>
class PartitionCache {
 public:
  template <class Solve>
  Part get(std::uint64_t p, unsigned k, Solve&& solve) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find({p, k});
      if (it != memo_.end()) return it->second;
    }
    Part value = solve(p, k);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(std::make_pair(p, k), value).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<std::uint64_t, unsigned>, Part> memo_;
};

PartitionCache<TwoBSquarePartition>& cache_2b() {
  static PartitionCache<TwoBSquarePartition> c;
  return c;
}
PartitionCache<TwoSquarePartition>& cache_d() {
  static PartitionCache<TwoSquarePartition> c;
  return c;
}

}  // namespace

TwoBSquarePartition cached_partition_2B(std::uint64_t p, unsigned k) {
  return cache_2b().get(p, k, [](std::uint64_t pp, unsigned kk) { return partition_2B(pp, kk); });
}

TwoSquarePartition cached_partition_D(std::uint64_t p, unsigned k) {
  return cache_d().get(p, k, [](std::uint64_t pp, unsigned kk) { return partition_D(pp, kk); });
}

CountResult count_squares(const ProblemSpec& spec) {
  if (spec.m != 1) throw Error(Errc::InvalidArgument, "count_squares needs m = 1");
  CountResult out;
  out.method = "squares";
  const BigInt& q = spec.q;
  if (spec.n % 2 == 1) {
    out.N = q;
    mpz_pow_ui(out.N.get_mpz_t(), q.get_mpz_t(), spec.n - 1);
    return out;
  }
  // eta((-1)^(n/2)) is -1 exactly when n/2 is odd and -1 is a non-square.
  const bool minus_one_square = BigInt(q % 4) == 1;
  const int eta = (spec.n / 2) % 2 == 0 || minus_one_square ? 1 : -1;
  BigInt a, b;
  mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), spec.n - 1);
  mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), (spec.n - 2) / 2);
  out.N = a + eta * b * (q - 1);
  return out;
}

CountResult count_quartic_wolfmann(const ProblemSpec& spec) {
  if (spec.m != 2 || spec.p % 4 != 3 || spec.s % 2 != 0) {
    throw Error(Errc::InvalidArgument, "quartic formula needs m = 2, p = 3 mod 4, s even");
  }
  CountResult out;
  out.method = "quartic";
  const unsigned n = spec.n;
  const BigInt& q = spec.q;
  const BigInt root_q = ipow(spec.p, spec.s / 2);
  BigInt qn1;
  mpz_pow_ui(qn1.get_mpz_t(), q.get_mpz_t(), n - 1);
  // q^((n-2)/2) = root_q^(n-2), rational when n = 1.
  Rational half_pow;
  if (n >= 2) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), root_q.get_mpz_t(), n - 2);
    half_pow = Rational(t);
  } else {
    half_pow = Rational(BigInt(1), root_q);
  }
  const unsigned long sign_exp = static_cast<unsigned long>(spec.s / 2 - 1) * n;
  const int sign = sign_exp % 2 == 0 ? 1 : -1;
  BigInt three_n;
  mpz_ui_pow_ui(three_n.get_mpz_t(), 3, n);
  const BigInt factor = three_n + (n % 2 == 0 ? 3 : -3);
  Rational value = Rational(qn1) + Rational(sign) * half_pow * Rational(q - 1) * Rational(factor, BigInt(4));
  value.canonicalize();
  if (value.get_den() != 1) throw Error(Errc::ImpureResult, "quartic count is not an integer");
  out.N = value.get_num();
  return out;
}

CountResult count_pair(const ProblemSpec& spec) {
  CountResult out;
  out.method = "pair";
  if (spec.m + 1 <= spec.v2) {
    out.N = (BigInt(1) << spec.m) * (spec.q - 1) + 1;
  } else {
    out.N = 1;
  }
  return out;
}

namespace {

// Holds one instance and builds the terms of the closed-form brackets in the
// ring over sqrt2, sqrtp, i.
class TheoremEvaluator {
 public:
  TheoremEvaluator(const ProblemSpec& spec, const EvalOptions& opt) : spec_(spec), opt_(opt), p_(spec.p) {}

  OctElement k(long v) const { return OctElement(p_, Rational(v)); }
  OctElement k(const BigInt& v) const { return OctElement(p_, Rational(v)); }
  OctElement i() const { return OctElement::imag(p_); }

  /// q^(num/den) as an element; 2 s num / den must be an integer.
  OctElement qpow(std::uint64_t num, std::uint64_t den) const {
    const std::uint64_t top = 2 * std::uint64_t{spec_.s} * num;
    if (top % den != 0) {
      throw Error(Errc::Internal, "q^(" + std::to_string(num) + "/" + std::to_string(den) +
                                      ") is not a half-integral power of p for s = " + std::to_string(spec_.s));
    }
    return p_half_power(p_, top / den);
  }
  OctElement sqrt_q() const { return qpow(1, 2); }

  // A_r etc. from p^(s/2^(r-2)) = A_r^2 + 2 B_r^2.
  const TwoBSquarePartition& part_b(unsigned r) {
    auto it = b_parts_.find(r);
    if (it != b_parts_.end()) return it->second;
    const unsigned k = sub_degree(r - 2);
    auto part = cached_partition_2B(p_, k);
    used_.push_back({"B", r, k, part.A, part.absB});
    return b_parts_.emplace(r, part).first->second;
  }
  // C_r etc. from p^(s/2^(r-1)) = C_r^2 + D_r^2.
  const TwoSquarePartition& part_d(unsigned r) {
    auto it = d_parts_.find(r);
    if (it != d_parts_.end()) return it->second;
    const unsigned k = sub_degree(r - 1);
    auto part = cached_partition_D(p_, k);
    used_.push_back({"D", r, k, part.C, part.absD});
    return d_parts_.emplace(r, part).first->second;
  }

  BigInt signed_b(unsigned r) { return opt_.flip_signs ? BigInt(-part_b(r).absB) : part_b(r).absB; }
  BigInt signed_d(unsigned r) { return opt_.flip_signs ? BigInt(-part_d(r).absD) : part_d(r).absD; }

  /// 2^(r-1) A_r q^((2^(r-2)-1)/2^(r-1)).
  OctElement a_term(unsigned r) {
    return k(pow2(r - 1) * part_b(r).A) * qpow(pow2u(r - 2) - 1, pow2u(r - 1));
  }
  OctElement b_term(unsigned r) { return k(pow2(r - 1) * signed_b(r)) * qpow(pow2u(r - 2) - 1, pow2u(r - 1)); }
  /// 2^(r-1) C_r q^((2^(r-1)-1)/2^r).
  OctElement c_term(unsigned r) { return k(pow2(r - 1) * part_d(r).C) * qpow(pow2u(r - 1) - 1, pow2u(r)); }
  OctElement d_term(unsigned r) { return k(pow2(r - 1) * signed_d(r)) * qpow(pow2u(r - 1) - 1, pow2u(r)); }

  /// Sum of a_term(r) for 3 <= r <= hi (empty when hi < 3).
  OctElement a_sum(unsigned hi) {
    OctElement acc = k(0);
    for (unsigned r = 3; r <= hi; ++r) acc += a_term(r);
    return acc;
  }
  /// Sum of c_term(r) for 2 <= r <= hi.
  OctElement c_sum(unsigned hi) {
    OctElement acc = k(0);
    for (unsigned r = 2; r <= hi; ++r) acc += c_term(r);
    return acc;
  }

  /// (u + w)^n + (u - w)^n for a w in the ring.
  OctElement pair(const OctElement& u, const OctElement& w) {
    if (opt_.direct_pairs) return (u + w).pow(spec_.n) + (u - w).pow(spec_.n);
    return paired_power(u, w * w, spec_.n);
  }
  /// Same, when only w^2 is known.
  OctElement pair_sq(const OctElement& u, const OctElement& w2) { return paired_power(u, w2, spec_.n); }
  OctElement pw(const OctElement& u) const { return u.pow(spec_.n); }

  CountResult finish(const OctElement& bracket, const std::string& method) {
    // N = q^(n-1) + (q-1) / (2^m q) * bracket
    BigInt qn1;
    mpz_pow_ui(qn1.get_mpz_t(), spec_.q.get_mpz_t(), spec_.n - 1);
    const Rational scale(BigInt(spec_.q - 1), BigInt(pow2(spec_.m) * spec_.q));
    const OctElement total = k(qn1) + bracket * scale;
    CountResult out;
    out.N = extract_integer(total);
    out.method = method;
    out.partitions = used_;
    out.notes = notes_;
    return out;
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }
  const ProblemSpec& spec() const { return spec_; }

 private:
  static BigInt pow2(unsigned e) { return BigInt(1) << e; }
  static std::uint64_t pow2u(unsigned e) { return std::uint64_t{1} << e; }

  unsigned sub_degree(unsigned shift) const {
    if (shift >= 32 || spec_.s % (1u << shift) != 0) {
      throw Error(Errc::Internal, "partition degree s/2^" + std::to_string(shift) + " is not an integer");
    }
    return spec_.s >> shift;
  }

  ProblemSpec spec_;
  EvalOptions opt_;
  std::uint64_t p_;
  std::map<unsigned, TwoBSquarePartition> b_parts_;
  std::map<unsigned, TwoSquarePartition> d_parts_;
  std::vector<PartitionUse> used_;
  std::vector<std::string> notes_;
};

void require_tag(const ProblemSpec& spec, CaseTag tag) {
  if (spec.tag != tag) {
    throw Error(Errc::InvalidArgument,
                std::string("spec is ") + case_tag_name(spec.tag) + ", evaluator needs " + case_tag_name(tag));
  }
}

}  // namespace

CountResult count_theorem1(const ProblemSpec& spec, const EvalOptions& options) {
  require_tag(spec, CaseTag::T1);
  TheoremEvaluator ev(spec, options);
  const unsigned m = spec.m;
  const OctElement rq = ev.sqrt_q();
  if (m == 3) {
    OctElement bracket = ev.k(2) * ev.pair(rq, ev.b_term(3));
    bracket += ev.k(2) * ev.qpow(spec.n, 2);
    bracket += ev.pair(ev.k(-3) * rq, ev.a_term(3));
    return ev.finish(bracket, "theorem1");
  }
  const OctElement base = ev.k(-3) * rq;
  OctElement bracket = ev.k(1L << (m - 2)) * ev.pair(rq, ev.b_term(3));
  bracket += ev.k(1L << (m - 3)) * ev.pair(rq, ev.b_term(4));
  if (m < 5) ev.note("empty t-sum");
  for (unsigned t = 2; t + 3 <= m; ++t) {
    const OctElement u = base + ev.a_sum(t) - ev.a_term(t + 1);
    bracket += ev.k(1L << (m - t - 2)) * ev.pair(u, ev.b_term(t + 3));
  }
  bracket += ev.k(2) * ev.pw(base + ev.a_sum(m - 2) - ev.a_term(m - 1));
  bracket += ev.pair(base + ev.a_sum(m - 1), ev.a_term(m));
  return ev.finish(bracket, "theorem1");
}

CountResult count_theorem2(const ProblemSpec& spec, const EvalOptions& options) {
  require_tag(spec, CaseTag::T2);
  TheoremEvaluator ev(spec, options);
  const unsigned m = spec.m;
  const OctElement rq = ev.sqrt_q();
  const OctElement i = ev.i();
  if (m == 3) {
    BigInt three_n;
    mpz_ui_pow_ui(three_n.get_mpz_t(), 3, spec.n);
    OctElement bracket = ev.k(2) * ev.pair(-rq, ev.b_term(3) * i);
    bracket += ev.k(2 * three_n) * ev.qpow(spec.n, 2);
    bracket += ev.pair(-rq, ev.a_term(3) * i);
    return ev.finish(bracket, "theorem2");
  }
  const OctElement base = ev.k(-3) * rq;
  if (m == 4) {
    OctElement bracket = ev.k(4) * ev.pair(rq, ev.b_term(3));
    bracket += ev.k(2) * ev.pair(rq, ev.b_term(4) * i);
    bracket += ev.k(2) * ev.pw(base - ev.a_term(3));
    bracket += ev.pair(base + ev.a_term(3), ev.a_term(4) * i);
    return ev.finish(bracket, "theorem2");
  }
  OctElement bracket = ev.k(1L << (m - 2)) * ev.pair(rq, ev.b_term(3));
  bracket += ev.k(1L << (m - 3)) * ev.pair(rq, ev.b_term(4));
  if (m < 6) ev.note("empty t-sum");
  for (unsigned t = 2; t + 4 <= m; ++t) {
    const OctElement u = base + ev.a_sum(t) - ev.a_term(t + 1);
    bracket += ev.k(1L << (m - t - 2)) * ev.pair(u, ev.b_term(t + 3));
  }
  bracket += ev.k(2) * ev.pair(base + ev.a_sum(m - 3) - ev.a_term(m - 2), ev.b_term(m) * i);
  bracket += ev.k(2) * ev.pw(base + ev.a_sum(m - 2) - ev.a_term(m - 1));
  bracket += ev.pair(base + ev.a_sum(m - 1), ev.a_term(m) * i);
  return ev.finish(bracket, "theorem2");
}

CountResult count_theorem3(const ProblemSpec& spec, const EvalOptions& options) {
  require_tag(spec, CaseTag::T3);
  TheoremEvaluator ev(spec, options);
  const unsigned m = spec.m;
  const OctElement rq = ev.sqrt_q();
  OctElement bracket = ev.k(1L << (m - 2)) * ev.pair(rq, ev.d_term(2));
  if (m < 3) ev.note("empty t-sum");
  for (unsigned t = 1; t + 2 <= m; ++t) {
    const OctElement u = -rq + ev.c_sum(t) - ev.c_term(t + 1);
    bracket += ev.k(1L << (m - t - 2)) * ev.pair(u, ev.d_term(t + 2));
  }
  bracket += ev.pair(-rq + ev.c_sum(m - 1), ev.c_term(m));
  return ev.finish(bracket, "theorem3");
}

CountResult count_theorem4(const ProblemSpec& spec, const EvalOptions& options) {
  require_tag(spec, CaseTag::T4);
  TheoremEvaluator ev(spec, options);
  const unsigned m = spec.m;
  const OctElement rq = ev.sqrt_q();
  if (m == 2) {
    const OctElement c1 = ev.k(ev.part_d(1).C);
    // w^2 = -q^(1/2) * 2 (q^(1/2) +- C_1)
    const OctElement w2_plus = ev.k(-2) * rq * (rq + c1);
    const OctElement w2_minus = ev.k(-2) * rq * (rq - c1);
    OctElement bracket = ev.pair_sq(-rq, w2_plus);
    bracket += ev.pair_sq(rq, w2_minus);
    return ev.finish(bracket, "theorem4");
  }
  OctElement bracket = ev.k(1L << (m - 2)) * ev.pair(rq, ev.d_term(2));
  if (m < 4) ev.note("empty t-sum");
  for (unsigned t = 1; t + 3 <= m; ++t) {
    const OctElement u = -rq + ev.c_sum(t) - ev.c_term(t + 1);
    bracket += ev.k(1L << (m - t - 2)) * ev.pair(u, ev.d_term(t + 2));
  }
  const std::uint64_t two_m1 = std::uint64_t{1} << (m - 1);
  const OctElement y = -rq + ev.c_sum(m - 2);
  const OctElement c_last = ev.c_term(m - 1);
  const OctElement c_raw = ev.k(ev.part_d(m - 1).C);
  const OctElement root = ev.qpow(1, two_m1);  // q^(1/2^(m-1))
  // w^2 = -2^(2(m-2)) q^((2^(m-1)-1)/2^(m-1)) * 2 (q^(1/2^(m-1)) -+ C_{m-1})
  const OctElement scale = ev.k(-(2L << (2 * (m - 2)))) * ev.qpow(two_m1 - 1, two_m1);
  bracket += ev.pair_sq(y + c_last, scale * (root - c_raw));
  bracket += ev.pair_sq(y - c_last, scale * (root + c_raw));
  return ev.finish(bracket, "theorem4");
}

CountResult count(const ProblemSpec& spec, const EvalOptions& options) {
  CountResult out;
  switch (spec.tag) {
    case CaseTag::Squares: out = count_squares(spec); break;
    case CaseTag::QuarticW: out = count_quartic_wolfmann(spec); break;
    case CaseTag::T1: out = count_theorem1(spec, options); break;
    case CaseTag::T2: out = count_theorem2(spec, options); break;
    case CaseTag::T3: out = count_theorem3(spec, options); break;
    case CaseTag::T4: out = count_theorem4(spec, options); break;
  }
  if (spec.n == 1 && out.N != 1) {
    throw Error(Errc::Internal, std::string(case_tag_name(spec.tag)) + " gives " + out.N.get_str() + " for n = 1");
  }
  if (spec.n == 2) {
    const BigInt expected = count_pair(spec).N;
    if (out.N != expected) {
      throw Error(Errc::Internal, std::string(case_tag_name(spec.tag)) + " gives " + out.N.get_str() +
                                      " for n = 2, expected " + expected.get_str());
    }
    out.notes.push_back("n = 2 agrees with the two-variable count");
  }
  if (out.N < 1) throw Error(Errc::Internal, "count below 1");
  return out;
}

}  // namespace diagcount
