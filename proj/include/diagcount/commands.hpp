#pragma once

// The operations behind each command-line subcommand, returning report
// records.  Shared by the executable and the Python bindings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagcount/extensions.hpp"
#include "diagcount/field.hpp"
#include "diagcount/numeric.hpp"
#include "diagcount/oracle.hpp"
#include "diagcount/report.hpp"

namespace diagcount {

enum class OutputFormat { Human, Json, Csv };

const char* format_name(OutputFormat f) noexcept;
/// Errors: InvalidArgument.
OutputFormat parse_format(const std::string& name);

struct RunConfig {
  Precision precision = Precision::Double;
  std::uint64_t brute_cap = kDefaultBruteCap;
  std::uint64_t dp_budget = kDefaultDpBudget;
  std::uint64_t table_budget = kDefaultTableBudget;
  OutputFormat format = OutputFormat::Human;

  /// Errors: InvalidArgument when a cap is zero.
  void validate() const;
};

/// Closed-form count; with verify, every oracle whose budget allows it.
CountReport cmd_count(std::uint64_t p, unsigned s, unsigned m, unsigned n, bool verify, const RunConfig& config = {});

/// All reference rows, recomputed and compared.
Table1Report cmd_table1(const RunConfig& config = {});

/// Normalized partitions of p^k for k = 1 .. k_max; kind B for p = 3 (mod 8),
/// D for p = 5 (mod 8).  Errors: UnsupportedResidue, InvalidArgument.
PartitionReport cmd_partitions(std::uint64_t p, unsigned k_max);

/// Gauss-sum identities and the decomposition audit on F_{p^s}.
AuditBundle cmd_audit(std::uint64_t p, unsigned s, unsigned m, const RunConfig& config = {});

struct ExtensionRequest {
  std::string kind;  // "scaled", "semiprimitive", "quadform"
  std::uint64_t p = 0;
  unsigned s = 0;
  unsigned m = 0;
  unsigned n = 0;
  std::vector<std::uint64_t> h;
  std::vector<OddPart> odd_parts;
  bool literal_sign = false;
  /// Diagonal coefficients as element indices; alternatively k and delta.
  std::vector<std::uint64_t> coefficients;
  unsigned k = 0;
  std::optional<std::uint64_t> delta;
  bool verify = false;
};

/// Errors: InvalidArgument on an unknown kind, plus those of the combinator.
ExtensionReport cmd_extensions(const ExtensionRequest& request, const RunConfig& config = {});

/// Human-readable renderings.
std::string render(const CountReport& x);
std::string render(const Table1Report& x);
std::string render(const PartitionReport& x);
std::string render(const AuditBundle& x);
std::string render(const ExtensionReport& x);

}  // namespace diagcount
