#include "diagcount/commands.hpp"

#include <sstream>

#include "diagcount/errors.hpp"
#include "diagcount/quadpart.hpp"
#include "diagcount/table1.hpp"

namespace diagcount {

const char* format_name(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Human: return "human";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  for (OutputFormat f : {OutputFormat::Human, OutputFormat::Json, OutputFormat::Csv}) {
    if (name == format_name(f)) return f;
  }
  throw Error(Errc::InvalidArgument, "unknown output format '" + name + "'");
}

void RunConfig::validate() const {
  if (brute_cap == 0 || dp_budget == 0 || table_budget == 0) {
    throw Error(Errc::InvalidArgument, "caps and budgets must be positive");
  }
}

namespace {

OracleCheck compare(const std::string& oracle, const BigInt& expected, const BigInt& got, std::string detail = {}) {
  return OracleCheck{oracle, expected == got ? "agree" : "disagree", got, std::move(detail)};
}

OracleCheck skipped(const std::string& oracle, std::string why) { return OracleCheck{oracle, "skipped", {}, std::move(why)}; }

std::string u64(std::uint64_t x) { return std::to_string(x); }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

CountReport cmd_count(std::uint64_t p, unsigned s, unsigned m, unsigned n, bool verify, const RunConfig& config) {
  config.validate();
  CountReport report;
  report.spec = classify(p, s, m, n);
  report.result = count(report.spec);
  if (!verify) return report;

  const BigInt& N = report.result.N;
  if (report.spec.q <= config.dp_budget) {
    report.checks.push_back(compare("dp", N, dp_count(report.spec, config.dp_budget)));
  } else {
    report.checks.push_back(skipped("dp", "q exceeds the dp budget " + u64(config.dp_budget)));
  }

  try {
    const GaussCount g = gauss_count(report.spec, config.precision, config.table_budget);
    std::ostringstream detail;
    detail << "residual " << g.residual << ", bound " << g.error_bound << ", " << precision_name(g.precision)
           << (g.escalated ? " (escalated)" : "");
    report.checks.push_back(compare("gauss", N, g.N, detail.str()));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded && e.code() != Errc::ResidualTooLarge) throw;
    report.checks.push_back(skipped("gauss", e.what()));
  }

  const std::uint64_t q = checked_pow(p, s);
  const std::uint64_t tuples = q == 0 ? 0 : checked_pow(q, n);
  if (tuples != 0 && tuples <= config.brute_cap) {
    report.checks.push_back(compare("brute", N, brute_force(report.spec, config.brute_cap)));
  } else {
    report.checks.push_back(skipped("brute", "q^n exceeds the brute-force cap " + u64(config.brute_cap)));
  }
  return report;
}

Table1Report cmd_table1(const RunConfig& config) {
  config.validate();
  Table1Report report;
  for (const GoldenRow& g : kTable1) {
    const ProblemSpec spec = classify(g.p, g.s, g.m, g.n);
    Table1Row row;
    row.p = g.p;
    row.s = g.s;
    row.m = g.m;
    row.n = g.n;
    row.tag = case_tag_name(spec.tag);
    row.expected = BigInt(g.N);
    row.computed = count(spec).N;
    row.passed = row.expected == row.computed;
    report.rows.push_back(row);
  }
  return report;
}

PartitionReport cmd_partitions(std::uint64_t p, unsigned k_max) {
  if (p == 2 || !is_prime_u64(p)) throw Error(Errc::NotPrime, u64(p) + " is not an odd prime");
  if (k_max == 0) throw Error(Errc::InvalidArgument, "k_max must be positive");
  PartitionReport report;
  report.p = p;
  if (p % 8 == 3) {
    report.kind = "B";
    for (unsigned k = 1; k <= k_max; ++k) {
      const auto part = cached_partition_2B(p, k);
      report.rows.push_back(PartitionRow{k, part.A, part.absB});
    }
  } else if (p % 8 == 5) {
    report.kind = "D";
    for (unsigned k = 1; k <= k_max; ++k) {
      const auto part = cached_partition_D(p, k);
      report.rows.push_back(PartitionRow{k, part.C, part.absD});
    }
  } else {
    throw Error(Errc::UnsupportedResidue, "partitions are tabulated for p = 3, 5 (mod 8) only");
  }
  return report;
}

AuditBundle cmd_audit(std::uint64_t p, unsigned s, unsigned m, const RunConfig& config) {
  config.validate();
  const FieldPtr field = build_field(p, s, config.table_budget);
  AuditOptions options;
  options.precision = config.precision;
  AuditBundle out;
  out.identities = audit_lemmas(field, m, options);
  Lemma14Options l14;
  l14.audit = options;
  l14.dp_budget = config.dp_budget;
  try {
    out.decomposition = audit_lemma14(field, m, l14);
  } catch (const Error& e) {
    if (e.code() != Errc::UnsupportedResidue && e.code() != Errc::InvalidArgument) throw;
    out.decomposition.p = p;
    out.decomposition.s = s;
    out.decomposition.q = field->q();
    out.decomposition.m = m;
    out.decomposition.precision = config.precision;
    AuditEntry entry;
    entry.id = "L14";
    entry.note = e.what();
    out.decomposition.entries.push_back(entry);
  }
  return out;
}

ExtensionReport cmd_extensions(const ExtensionRequest& req, const RunConfig& config) {
  config.validate();
  ExtensionReport out;
  out.kind = req.kind;
  out.base = classify(req.p, req.s, req.m, req.n);
  const std::uint64_t two_m = std::uint64_t{1} << req.m;
  const bool can_verify = req.verify && out.base.q <= config.dp_budget;
  FieldPtr field;
  if (req.kind == "quadform" || can_verify) field = build_field(req.p, req.s, config.table_budget);

  std::vector<Term> terms;
  if (req.kind == "scaled") {
    out.params.emplace_back("h", join(req.h));
    out.N = count_coprime_scaled(out.base, req.h);
    for (std::uint64_t h : req.h) terms.push_back(Term{Field::one(), two_m * h});
  } else if (req.kind == "semiprimitive") {
    std::string parts;
    for (const auto& part : req.odd_parts) {
      if (!parts.empty()) parts += ',';
      parts += u64(part.u) + ":" + std::to_string(part.n);
    }
    out.params.emplace_back("odd_parts", parts);
    if (req.literal_sign) out.params.emplace_back("literal_sign", "true");
    out.N = count_with_odd_semiprimitive(out.base, req.odd_parts, SemiprimitiveOptions{req.literal_sign});
    for (unsigned i = 0; i < req.n; ++i) terms.push_back(Term{Field::one(), two_m});
    for (const auto& part : req.odd_parts) {
      for (unsigned i = 0; i < part.n; ++i) terms.push_back(Term{Field::one(), part.u});
    }
  } else if (req.kind == "quadform") {
    std::vector<Element> coeffs;
    if (!req.coefficients.empty()) {
      if (req.delta) throw Error(Errc::InvalidArgument, "give either coefficients or k and delta");
      for (std::uint64_t b : req.coefficients) {
        if (b >= field->q()) throw Error(Errc::InvalidArgument, "coefficient " + u64(b) + " is not an element index");
        coeffs.push_back(Element{static_cast<std::uint32_t>(b)});
      }
      out.params.emplace_back("coefficients", join(req.coefficients));
      out.N = count_with_quadratic_form(out.base, coeffs, *field);
    } else {
      if (!req.delta) throw Error(Errc::InvalidArgument, "give coefficients or k and delta");
      if (*req.delta >= field->q()) throw Error(Errc::InvalidArgument, "delta is not an element index");
      const Element delta{static_cast<std::uint32_t>(*req.delta)};
      out.params.emplace_back("k", std::to_string(req.k));
      out.params.emplace_back("delta", u64(*req.delta));
      out.N = count_with_quadratic_form(out.base, req.k, delta, *field);
      // diag(1, ..., 1, delta) has determinant delta.
      coeffs.assign(req.k - 1, Field::one());
      coeffs.push_back(delta);
    }
    for (unsigned i = 0; i < req.n; ++i) terms.push_back(Term{Field::one(), two_m});
    for (Element b : coeffs) terms.push_back(Term{b, 2});
  } else {
    throw Error(Errc::InvalidArgument, "unknown extension '" + req.kind + "'");
  }

  if (can_verify) {
    out.check = compare("dp", out.N, dp_count_terms(field, terms));
  } else if (req.verify) {
    out.check = skipped("dp", "q exceeds the dp budget " + u64(config.dp_budget));
  }
  return out;
}

namespace {

void render_check(std::ostream& os, const OracleCheck& c) {
  os << "  " << c.oracle << ": " << c.status;
  if (c.N) os << " (N = " << *c.N << ")";
  if (!c.detail.empty()) os << "  " << c.detail;
  os << '\n';
}

}  // namespace

std::string render(const CountReport& x) {
  std::ostringstream os;
  const ProblemSpec& s = x.spec;
  os << "p = " << s.p << ", s = " << s.s << ", m = " << s.m << ", n = " << s.n << ", q = " << s.q
     << ", v2(q-1) = " << s.v2 << ", case " << case_tag_name(s.tag) << '\n';
  os << "N = " << x.result.N << '\n';
  os << "method: " << x.result.method << '\n';
  for (const auto& u : x.result.partitions) {
    const std::string first = u.first < 0 ? "(" + u.first.get_str() + ")" : u.first.get_str();
    os << "  partition " << u.kind << " r = " << u.r << ": p^" << u.k << " = " << first << "^2 + "
       << (u.kind == "B" ? "2*" : "") << u.second << "^2\n";
  }
  for (const auto& note : x.result.notes) os << "  note: " << note << '\n';
  if (!x.checks.empty()) {
    os << "verification:\n";
    for (const auto& c : x.checks) render_check(os, c);
    os << (x.consistent() ? "oracles agree\n" : "ORACLE MISMATCH\n");
  }
  return os.str();
}

std::string render(const Table1Report& x) {
  std::ostringstream os;
  for (const auto& r : x.rows) {
    os << (r.passed ? "PASS" : "FAIL") << "  (" << r.p << ", " << r.s << ", " << r.m << ", " << r.n << ")  " << r.tag
       << "  N = " << r.computed;
    if (!r.passed) os << "  expected " << r.expected;
    os << '\n';
  }
  std::size_t ok = 0;
  for (const auto& r : x.rows) ok += r.passed;
  os << ok << "/" << x.rows.size() << " rows match\n";
  return os.str();
}

std::string render(const PartitionReport& x) {
  std::ostringstream os;
  const char* form = x.kind == "B" ? "A^2 + 2B^2" : "C^2 + D^2";
  os << "p = " << x.p << ": p^k = " << form << '\n';
  for (const auto& r : x.rows) {
    os << "  k = " << r.k << ": " << (x.kind == "B" ? "A = " : "C = ") << r.first << ", "
       << (x.kind == "B" ? "|B| = " : "|D| = ") << r.second << '\n';
  }
  return os.str();
}

namespace {

void render_audit(std::ostream& os, const AuditReport& r) {
  for (const auto& e : r.entries) {
    os << "  " << e.id << ": ";
    if (!e.applicable) {
      os << "n/a  " << e.note << '\n';
      continue;
    }
    os << (e.passed ? "pass" : "FAIL") << "  residual " << e.residual << " (tol " << e.tolerance << ")  " << e.note
       << '\n';
  }
}

}  // namespace

std::string render(const AuditBundle& x) {
  std::ostringstream os;
  os << "F_" << x.identities.q << " (p = " << x.identities.p << ", s = " << x.identities.s
     << "), m = " << x.identities.m << ", " << precision_name(x.identities.precision) << " precision\n";
  os << "character sum identities:\n";
  render_audit(os, x.identities);
  os << "decomposition of the count:\n";
  render_audit(os, x.decomposition);
  os << (x.all_passed() ? "all applicable checks pass\n" : "AUDIT FAILURE\n");
  return os.str();
}

std::string render(const ExtensionReport& x) {
  std::ostringstream os;
  os << x.kind << " over F_" << x.base.q << ", m = " << x.base.m << ", n = " << x.base.n;
  for (const auto& [k, v] : x.params) os << ", " << k << " = " << v;
  os << '\n' << "N = " << x.N << '\n';
  if (x.check) render_check(os, *x.check);
  return os.str();
}

}  // namespace diagcount
