"""Counting solutions of x_1^(2^m) + ... + x_n^(2^m) = 0 over finite fields."""

from ._core import (
    AuditEntry,
    AuditReport,
    CountResult,
    GaussCount,
    Precision,
    ProblemSpec,
    audit_decomposition,
    audit_lemmas,
    brute_force,
    classify,
    count,
    count_coprime_scaled,
    count_pair,
    count_with_odd_semiprimitive,
    count_with_quadratic_form,
    dp_count,
    dp_count_terms,
    gauss_count,
    partition_2B,
    partition_D,
    reduce_exponents,
    run_cli,
    table1_json,
)

__all__ = [
    "AuditEntry",
    "AuditReport",
    "CountResult",
    "GaussCount",
    "Precision",
    "ProblemSpec",
    "audit_decomposition",
    "audit_lemmas",
    "brute_force",
    "classify",
    "count",
    "count_coprime_scaled",
    "count_pair",
    "count_with_odd_semiprimitive",
    "count_with_quadratic_form",
    "dp_count",
    "dp_count_terms",
    "gauss_count",
    "partition_2B",
    "partition_D",
    "reduce_exponents",
    "run_cli",
    "table1_json",
]
