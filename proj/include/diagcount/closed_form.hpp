#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagcount/algnum.hpp"
#include "diagcount/ntheory.hpp"
#include "diagcount/quadpart.hpp"

namespace diagcount {

enum class CaseTag { Squares, QuarticW, T1, T2, T3, T4 };

const char* case_tag_name(CaseTag tag) noexcept;
CaseTag parse_case_tag(const std::string& name);

/// A validated instance x_1^(2^m) + ... + x_n^(2^m) = 0 over F_{p^s}.
struct ProblemSpec {
  std::uint64_t p = 0;
  unsigned s = 0;
  unsigned m = 0;
  unsigned n = 0;
  BigInt q;
  /// 2-adic valuation of q - 1.
  unsigned v2 = 0;
  CaseTag tag = CaseTag::Squares;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Errors: NotPrime, InvalidArgument, UnsupportedResidue, BelowThreshold,
/// OrderNotDividing.
ProblemSpec classify(std::uint64_t p, unsigned s, unsigned m, unsigned n);

/// One quadratic partition consulted by an evaluation: p^k = first^2 + d*second^2
/// with d = 2 (kind "B") or d = 1 (kind "D"), r its index in the formula.
struct PartitionUse {
  std::string kind;
  unsigned r = 0;
  unsigned k = 0;
  BigInt first;
  BigInt second;

  friend bool operator==(const PartitionUse&, const PartitionUse&) = default;
};

struct CountResult {
  BigInt N;
  std::string method;
  std::vector<PartitionUse> partitions;
  std::vector<std::string> notes;

  friend bool operator==(const CountResult&, const CountResult&) = default;
};

struct EvalOptions {
  /// Replace every |B_r| (|D_r|) by its negative.
  bool flip_signs = false;
  /// Expand (u + w)^n + (u - w)^n directly whenever w lies in the ring,
  /// instead of going through paired_power.
  bool direct_pairs = false;
};

CountResult count_squares(const ProblemSpec& spec);
CountResult count_quartic_wolfmann(const ProblemSpec& spec);
/// The two-variable count; any valid spec, n is ignored.
CountResult count_pair(const ProblemSpec& spec);
CountResult count_theorem1(const ProblemSpec& spec, const EvalOptions& options = {});
CountResult count_theorem2(const ProblemSpec& spec, const EvalOptions& options = {});
CountResult count_theorem3(const ProblemSpec& spec, const EvalOptions& options = {});
CountResult count_theorem4(const ProblemSpec& spec, const EvalOptions& options = {});

/// Dispatch on the case tag.  n = 1 and n = 2 results are cross-checked
/// against the elementary counts (Internal on disagreement).
CountResult count(const ProblemSpec& spec, const EvalOptions& options = {});

/// Memoized partitions, safe for concurrent use.
TwoBSquarePartition cached_partition_2B(std::uint64_t p, unsigned k);
TwoSquarePartition cached_partition_D(std::uint64_t p, unsigned k);

}  // namespace diagcount
