"""
Per-group analysis reports.

analyze_group() runs every analysis that applies to a materialized group
and cross-checks the verdicts that must agree (AC = matroid = transitive
commuting, and for AC-groups every clique-number method). Analyses that do
not apply or were not run are recorded as "skipped"; lazy groups get
"not computed" everywhere except their witness check.

Field order is fixed so identical inputs serialize to identical JSON.
"""
import logging
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Union

from ncgraph.analysis.ac import (
    commutativity_transitive,
    is_ac,
    is_cc,
    lazy_witness_for,
    verify_lazy_witness,
)
from ncgraph.analysis.chi import DEFAULT_CHI_MAX_ORDER, PREDICATES, chi_record
from ncgraph.analysis.context import NcgContext, build_ncg
from ncgraph.analysis.structure import (
    central_quotient_order,
    degree_bound_check,
    eq1_verify,
    kregular_omega,
    maximal_noncommuting_set,
    omega_fast,
    pgroup_case,
    verify_centralizer_cover,
)
from ncgraph.errors import CliqueSearchTimeout, InconsistentVerdict
from ncgraph.graphs.clique import (
    DEFAULT_NODE_BUDGET,
    ORACLE_LIMIT,
    clique_number,
    independence_number,
    oracle_clique_number,
)
from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.lazy import LazyPermGroup
from ncgraph.matroids.graphs import CROSS_VALIDATE_LIMIT, cross_validate_matroid, is_matroid_graph

logger = logging.getLogger(__name__)

SKIPPED = "skipped"
NOT_COMPUTED = "not computed"
NOT_APPLICABLE = "n/a"

DEFAULT_SEARCH_MAX_VERTICES = 2000


@dataclass
class AnalysisReport:
    """
    Everything known about one group, in serialization order.

    Values that were not computed hold one of the marker strings above
    instead of being omitted.
    """
    spec: str
    order: int
    center_order: Any = NOT_COMPUTED
    is_abelian: Any = NOT_COMPUTED
    is_ac: Any = NOT_COMPUTED
    is_cc: Any = NOT_COMPUTED
    is_matroid: Any = NOT_COMPUTED
    omega: Any = NOT_COMPUTED
    alpha: Any = NOT_COMPUTED
    complement_component_sizes: Any = NOT_COMPUTED
    distinct_centralizer_orders: Any = NOT_COMPUTED
    eq1_holds: Any = NOT_COMPUTED
    degree_bound_holds: Any = NOT_COMPUTED
    centralizer_cover_holds: Any = NOT_COMPUTED
    kregular_omega: Any = NOT_COMPUTED
    central_quotient_order: Any = NOT_COMPUTED
    pgroup_case: Any = NOT_COMPUTED
    witnesses: Dict[str, Any] = field(default_factory=dict)
    chi: Any = NOT_COMPUTED
    warnings: List[str] = field(default_factory=list)
    timing: Any = SKIPPED

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@contextmanager
def _phase(timings: Dict[str, float], name: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[name] = round(time.perf_counter() - start, 6)


def _labels(ctx: NcgContext, elements) -> Optional[List[str]]:
    if elements is None:
        return None
    return ctx.labels_of(elements)


def _vertex_labels(ctx: NcgContext, vertices) -> Optional[List[str]]:
    if vertices is None:
        return None
    return [ctx.graph.label(v) for v in vertices]


def analyze_group(
    group: FiniteGroup,
    node_budget: int = DEFAULT_NODE_BUDGET,
    search_max_vertices: int = DEFAULT_SEARCH_MAX_VERTICES,
    chi_max_order: int = DEFAULT_CHI_MAX_ORDER,
    timing: bool = False,
) -> AnalysisReport:
    """
    Analyze a materialized group.

    Args:
        group: The group to analyze
        node_budget: Branch-and-bound node limit for clique searches
        search_max_vertices: Largest graph on which the clique number is searched
        chi_max_order: Largest group for which chi-graph records are built
        timing: Record wall-clock seconds per phase

    Raises:
        InconsistentVerdict: If two procedures that must agree do not

    Example:
        >>> analyze_group(build_group("Q:8")).omega["value"]
        3
    """
    timings: Dict[str, float] = {}
    report = AnalysisReport(spec=group.spec, order=group.order, warnings=list(group.warnings))

    with _phase(timings, "build_ncg"):
        ctx = build_ncg(group)
    graph = ctx.graph
    report.center_order = len(ctx.center)
    report.is_abelian = group.is_abelian()
    report.central_quotient_order = central_quotient_order(ctx)
    report.distinct_centralizer_orders = [len(c) for _, c in ctx.distinct_centralizers]

    with _phase(timings, "ac"):
        ac, ac_witness = is_ac(ctx)
        report.is_ac = ac
        report.is_cc = is_cc(ctx)
        transitive, transitivity_triple = commutativity_transitive(ctx)

    with _phase(timings, "matroid"):
        matroid, matroid_witness = is_matroid_graph(graph)
        exchange: Any = SKIPPED
        if graph.vertex_count <= CROSS_VALIDATE_LIMIT:
            exchange = cross_validate_matroid(graph)
        components = graph.complement().components()
        report.complement_component_sizes = [len(c) for c in components]

    if not ac == matroid == transitive:
        raise InconsistentVerdict(
            f"{group.spec}: is_ac={ac}, is_matroid={matroid}, transitive={transitive}"
        )
    report.is_matroid = {
        "verdict": matroid,
        "methods": {
            "component_criterion": matroid,
            "transitivity": transitive,
            "exchange_property": exchange,
        },
    }

    with _phase(timings, "omega"):
        report.omega = _omega(ctx, ac, node_budget, search_max_vertices)
        report.alpha = _alpha(ctx, ac, node_budget, search_max_vertices)
    if ac and report.omega["value"] != len(components):
        raise InconsistentVerdict(
            f"{group.spec}: omega {report.omega['value']} but {len(components)} complement components"
        )

    with _phase(timings, "structure"):
        _structure(ctx, ac, report)

    report.witnesses = {
        "non_ac_triple": _labels(ctx, ac_witness),
        "non_matroid_triple": _vertex_labels(ctx, matroid_witness),
        "transitivity_triple": _labels(ctx, transitivity_triple),
    }
    if report.is_abelian:
        report.witnesses["maximal_noncommuting_set"] = SKIPPED
        report.witnesses["maximal_set_note"] = "abelian group"
    else:
        with _phase(timings, "maximal_set"):
            maximal = maximal_noncommuting_set(ctx)
            if ac:
                report.centralizer_cover_holds = verify_centralizer_cover(ctx, maximal)
        report.witnesses["maximal_noncommuting_set"] = ctx.labels_of(maximal)
        report.witnesses["maximal_set_note"] = "size equals omega" if ac else "maximal, possibly < omega"
        if ac and len(maximal) != report.omega["value"]:
            raise InconsistentVerdict(
                f"{group.spec}: maximal non-commuting set of size {len(maximal)} but omega {report.omega['value']}"
            )

    with _phase(timings, "chi"):
        if group.order <= chi_max_order:
            report.chi = {name: chi_record(group, name, chi_max_order) for name in PREDICATES}
        else:
            report.chi = SKIPPED

    if timing:
        report.timing = timings
    logger.info(f"Analyzed {group.spec}: is_ac={ac}, omega={report.omega['value']}")
    return report


def _omega(ctx: NcgContext, ac: bool, node_budget: int, search_max_vertices: int) -> Dict[str, Any]:
    graph = ctx.graph
    methods: Dict[str, Any] = {"fast-path": SKIPPED, "search": SKIPPED, "oracle": SKIPPED}
    if ac:
        methods["fast-path"] = omega_fast(ctx)
    if graph.vertex_count <= search_max_vertices:
        try:
            methods["search"] = clique_number(graph, node_budget)[0]
        except CliqueSearchTimeout:
            logger.warning(f"{ctx.group.spec}: clique search exhausted its budget, omega search skipped")
    if graph.vertex_count <= ORACLE_LIMIT:
        methods["oracle"] = oracle_clique_number(graph)

    values = sorted({v for v in methods.values() if v != SKIPPED})
    if len(values) > 1:
        raise InconsistentVerdict(f"{ctx.group.spec}: clique number methods disagree: {methods}")
    return {"value": values[0] if values else SKIPPED, "methods": methods}


def _alpha(ctx: NcgContext, ac: bool, node_budget: int, search_max_vertices: int) -> Any:
    graph = ctx.graph
    if ac:
        # Independent sets lie inside one centralizer block
        return max((len(c) for c in graph.complement().components()), default=0)
    if graph.vertex_count > search_max_vertices:
        return SKIPPED
    try:
        return independence_number(graph, node_budget)
    except CliqueSearchTimeout:
        return SKIPPED


def _structure(ctx: NcgContext, ac: bool, report: AnalysisReport) -> None:
    if not ac:
        for name in ("eq1_holds", "degree_bound_holds", "centralizer_cover_holds", "kregular_omega"):
            setattr(report, name, SKIPPED)
        report.pgroup_case = NOT_APPLICABLE
        return
    report.eq1_holds = eq1_verify(ctx)[0]
    report.degree_bound_holds = degree_bound_check(ctx)
    k_omega = kregular_omega(ctx)
    report.kregular_omega = NOT_APPLICABLE if k_omega is None else k_omega
    case = pgroup_case(ctx)
    report.pgroup_case = NOT_APPLICABLE if case is None else case
    if report.is_abelian:
        report.centralizer_cover_holds = SKIPPED


def analyze_lazy(group: LazyPermGroup) -> AnalysisReport:
    """
    Report for a group too large to materialize.

    Only the catalogued transitivity witness is checked; every other
    field is "not computed".
    """
    report = AnalysisReport(spec=group.spec, order=group.order)
    triple = lazy_witness_for(group)
    if triple is None:
        report.witnesses = {"lazy_transitivity": NOT_COMPUTED}
        logger.info(f"No catalogued witness for {group.spec}")
    else:
        report.witnesses = {"lazy_transitivity": verify_lazy_witness(group, triple).to_dict()}
    return report


def analyze(group: Union[FiniteGroup, LazyPermGroup], **options: Any) -> AnalysisReport:
    """Dispatch to analyze_group or analyze_lazy."""
    if isinstance(group, LazyPermGroup):
        return analyze_lazy(group)
    return analyze_group(group, **options)
