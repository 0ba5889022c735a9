#pragma once

// Report records produced by the command-line front end and the Python
// bindings, with JSON and CSV serialization.  Big integers are encoded as
// decimal strings.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diagcount/charsum.hpp"
#include "diagcount/closed_form.hpp"
#include "diagcount/oracle.hpp"

namespace diagcount {

/// Outcome of one independent counter run against the closed form.
struct OracleCheck {
  std::string oracle;  // "dp", "gauss", "brute"
  std::string status;  // "agree", "disagree", "skipped"
  std::optional<BigInt> N;
  std::string detail;

  friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct CountReport {
  ProblemSpec spec;
  CountResult result;
  std::vector<OracleCheck> checks;

  /// No check disagrees.
  bool consistent() const;
  friend bool operator==(const CountReport&, const CountReport&) = default;
};

struct Table1Row {
  std::uint64_t p = 0;
  unsigned s = 0;
  unsigned m = 0;
  unsigned n = 0;
  std::string tag;
  BigInt expected;
  BigInt computed;
  bool passed = false;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

struct Table1Report {
  std::vector<Table1Row> rows;

  bool all_passed() const;
  friend bool operator==(const Table1Report&, const Table1Report&) = default;
};

struct PartitionRow {
  unsigned k = 0;
  BigInt first;   // A or C
  BigInt second;  // |B| or |D|

  friend bool operator==(const PartitionRow&, const PartitionRow&) = default;
};

struct PartitionReport {
  std::uint64_t p = 0;
  std::string kind;  // "B": p^k = A^2 + 2B^2, "D": p^k = C^2 + D^2
  std::vector<PartitionRow> rows;

  friend bool operator==(const PartitionReport&, const PartitionReport&) = default;
};

struct AuditBundle {
  AuditReport identities;
  AuditReport decomposition;

  bool all_passed() const { return identities.all_passed() && decomposition.all_passed(); }
  friend bool operator==(const AuditBundle&, const AuditBundle&) = default;
};

struct ExtensionReport {
  std::string kind;  // "scaled", "semiprimitive", "quadform"
  ProblemSpec base;
  std::vector<std::pair<std::string, std::string>> params;
  BigInt N;
  std::optional<OracleCheck> check;

  bool consistent() const { return !check || check->status != "disagree"; }
  friend bool operator==(const ExtensionReport&, const ExtensionReport&) = default;
};

std::string to_json(const ProblemSpec& x, int indent = 2);
std::string to_json(const CountResult& x, int indent = 2);
std::string to_json(const AuditReport& x, int indent = 2);
std::string to_json(const GaussCount& x, int indent = 2);
std::string to_json(const CountReport& x, int indent = 2);
std::string to_json(const Table1Report& x, int indent = 2);
std::string to_json(const PartitionReport& x, int indent = 2);
std::string to_json(const AuditBundle& x, int indent = 2);
std::string to_json(const ExtensionReport& x, int indent = 2);

/// Inverse of to_json.  Errors: InvalidArgument on malformed input.
template <class T>
T from_json(const std::string& text);

/// Header plus one row per count: p,s,m,n,N.
std::string to_csv(const CountReport& x);
std::string to_csv(const Table1Report& x);

}  // namespace diagcount
