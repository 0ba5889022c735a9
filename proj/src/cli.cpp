#include "diagcount/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "diagcount/commands.hpp"
#include "diagcount/errors.hpp"

namespace diagcount {

namespace {

struct SpecArgs {
  std::uint64_t p = 0;
  unsigned s = 0;
  unsigned m = 0;
  unsigned n = 0;
};

void add_spec(CLI::App* cmd, SpecArgs& a, bool with_n) {
  cmd->add_option("-p,--prime", a.p, "odd prime p")->required();
  cmd->add_option("-s,--degree", a.s, "extension degree s, q = p^s")->required();
  cmd->add_option("-m", a.m, "exponent 2^m")->required();
  if (with_n) cmd->add_option("-n,--vars", a.n, "number of variables")->required();
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return v;
}

OddPart parse_odd_part(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return OddPart{parse_u64(text, "u"), 1};
  return OddPart{parse_u64(text.substr(0, colon), "u"),
                 static_cast<unsigned>(parse_u64(text.substr(colon + 1), "n_j"))};
}

template <class Report>
int emit(const Report& report, OutputFormat format, std::ostream& out, bool ok) {
  if (format == OutputFormat::Json) {
    out << to_json(report) << '\n';
  } else {
    out << render(report);
  }
  return ok ? kExitOk : kExitMismatch;
}

int emit_csv_or(const CountReport& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << to_csv(r);
    return r.consistent() ? kExitOk : kExitMismatch;
  }
  return emit(r, format, out, r.consistent());
}

int emit_csv_or(const Table1Report& r, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << to_csv(r);
    return r.all_passed() ? kExitOk : kExitMismatch;
  }
  return emit(r, format, out, r.all_passed());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts solutions of x_1^(2^m) + ... + x_n^(2^m) = 0 over F_{p^s}", "diagcount"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "human";
  std::string precision = "double";
  bool table_budget_given = false;
  app.add_option("--format", format, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", precision, "double, extended or quad")
      ->check(CLI::IsMember({"double", "extended", "quad"}))
      ->capture_default_str();
  app.add_option("--brute-cap", config.brute_cap, "largest q^n enumerated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dp-budget", config.dp_budget, "largest q for the convolution counter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option_function<std::uint64_t>(
         "--table-budget",
         [&](const std::uint64_t& v) {
           config.table_budget = v;
           table_budget_given = true;
         },
         "largest field built with lookup tables (overrides DIAGCOUNT_BUDGET)")
      ->check(CLI::PositiveNumber);

  SpecArgs count_args;
  bool verify = false;
  auto* count_cmd = app.add_subcommand("count", "closed-form count, optionally cross-checked");
  add_spec(count_cmd, count_args, true);
  count_cmd->add_flag("--verify", verify, "run the independent counters that fit the budgets");

  auto* table_cmd = app.add_subcommand("table1", "recompute the reference table");

  std::uint64_t part_p = 0;
  unsigned k_max = 4;
  auto* part_cmd = app.add_subcommand("partitions", "normalized quadratic partitions of p^k");
  part_cmd->add_option("-p,--prime", part_p, "prime p = 3, 5 (mod 8)")->required();
  part_cmd->add_option("-k,--k-max", k_max, "largest k")->capture_default_str();

  SpecArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "numeric audit of the character sum identities");
  add_spec(audit_cmd, audit_args, false);

  auto* ext_cmd = app.add_subcommand("extensions", "counts for related diagonal equations");
  ext_cmd->require_subcommand(1);
  ext_cmd->fallthrough();
  ExtensionRequest ext;
  SpecArgs ext_args;
  std::vector<std::string> odd_parts;
  auto* scaled = ext_cmd->add_subcommand("scaled", "exponents 2^m h_j with pairwise coprime h_j");
  auto* semi = ext_cmd->add_subcommand("semiprimitive", "extra variables with odd semiprimitive exponents");
  auto* quad = ext_cmd->add_subcommand("quadform", "an added nondegenerate quadratic form");
  for (auto* sub : {scaled, semi, quad}) {
    add_spec(sub, ext_args, true);
    sub->add_flag("--verify", ext.verify, "cross-check with the convolution counter");
  }
  scaled->add_option("--scale", ext.h, "scale factors, one per variable")->delimiter(',')->required();
  semi->add_option("--odd", odd_parts, "u or u:n_j, repeatable or comma separated")->delimiter(',')->required();
  semi->add_flag("--literal-sign", ext.literal_sign, "sign (-1)^((s/l_j - 1) n_j)");
  auto* coeff_opt = quad->add_option("--coeffs", ext.coefficients, "diagonal coefficients as element indices")
                        ->delimiter(',');
  auto* k_opt = quad->add_option("-k", ext.k, "number of quadratic variables");
  std::uint64_t delta = 0;
  auto* delta_opt = quad->add_option("--delta", delta, "determinant as an element index");
  k_opt->needs(delta_opt);
  delta_opt->needs(k_opt);
  coeff_opt->excludes(k_opt);
  coeff_opt->excludes(delta_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    config.format = parse_format(format);
    config.precision = parse_precision(precision);
    if (!table_budget_given) {
      if (const char* env = std::getenv("DIAGCOUNT_BUDGET"); env != nullptr && *env != '\0') {
        config.table_budget = parse_u64(env, "DIAGCOUNT_BUDGET");
      }
    }
    config.validate();

    if (count_cmd->parsed()) {
      const auto& a = count_args;
      return emit_csv_or(cmd_count(a.p, a.s, a.m, a.n, verify, config), config.format, out);
    }
    if (table_cmd->parsed()) return emit_csv_or(cmd_table1(config), config.format, out);
    if (config.format == OutputFormat::Csv) {
      throw Error(Errc::InvalidArgument, "csv output is available for count and table1 only");
    }
    if (part_cmd->parsed()) return emit(cmd_partitions(part_p, k_max), config.format, out, true);
    if (audit_cmd->parsed()) {
      const auto r = cmd_audit(audit_args.p, audit_args.s, audit_args.m, config);
      return emit(r, config.format, out, r.all_passed());
    }
    if (ext_cmd->parsed()) {
      ext.kind = scaled->parsed() ? "scaled" : semi->parsed() ? "semiprimitive" : "quadform";
      ext.p = ext_args.p;
      ext.s = ext_args.s;
      ext.m = ext_args.m;
      ext.n = ext_args.n;
      for (const auto& text : odd_parts) ext.odd_parts.push_back(parse_odd_part(text));
      if (delta_opt->count() > 0) ext.delta = delta;
      const auto r = cmd_extensions(ext, config);
      return emit(r, config.format, out, r.consistent());
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_validation_error(e.code()) ? kExitUsage : kExitMismatch;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace diagcount
