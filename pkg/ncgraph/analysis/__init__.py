"""
Non-commuting graph analysis for ncgraph.

This package builds the non-commuting graph of a group and runs the
AC/CC tests, the centralizer-structure results, the chi-graph framework
and the per-group report built from all of them.
"""

from .context import NcgContext, build_ncg
from .ac import (
    LAZY_WITNESSES,
    LazyWitnessCheck,
    commutativity_transitive,
    is_ac,
    is_cc,
    lazy_witness_for,
    verify_lazy_witness,
    verify_transitivity_witness,
)
from .structure import (
    cc_quotient_omega_check,
    central_quotient_order,
    centralizer_partition,
    degree_bound_check,
    eq1_verify,
    exchange_extend,
    has_abelian_maximal_subgroup,
    kregular_omega,
    maximal_noncommuting_set,
    omega_fast,
    pgroup_case,
    verify_centralizer_cover,
)
from .chi import (
    PREDICATES,
    chi_graph,
    chi_group_check,
    chi_literal_graph,
    chi_record,
    get_predicate,
    register_predicate,
)
from .report import (
    NOT_APPLICABLE,
    NOT_COMPUTED,
    SKIPPED,
    AnalysisReport,
    analyze,
    analyze_group,
    analyze_lazy,
)

__all__ = [
    "NcgContext",
    "build_ncg",
    "LAZY_WITNESSES",
    "LazyWitnessCheck",
    "commutativity_transitive",
    "is_ac",
    "is_cc",
    "lazy_witness_for",
    "verify_lazy_witness",
    "verify_transitivity_witness",
    "cc_quotient_omega_check",
    "central_quotient_order",
    "centralizer_partition",
    "degree_bound_check",
    "eq1_verify",
    "exchange_extend",
    "has_abelian_maximal_subgroup",
    "kregular_omega",
    "maximal_noncommuting_set",
    "omega_fast",
    "pgroup_case",
    "verify_centralizer_cover",
    "PREDICATES",
    "chi_graph",
    "chi_group_check",
    "chi_literal_graph",
    "chi_record",
    "get_predicate",
    "register_predicate",
    "NOT_APPLICABLE",
    "NOT_COMPUTED",
    "SKIPPED",
    "AnalysisReport",
    "analyze",
    "analyze_group",
    "analyze_lazy",
]
