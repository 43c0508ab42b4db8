"""
Graphs defined by a property of two-generated subgroups.

A predicate decides a property chi of the subgroup <x, y>. chi_graph joins
non-central x and y when <x, y> FAILS chi, so chi = "abelian" gives the
non-commuting graph back. chi_literal_graph is the other reading: every
element is a vertex and x ~ y when <x, y> HAS chi. Reports record the
matroid verdict of both.

Predicates are registered by name; new ones can be added with
@register_predicate("name").
"""
import logging
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from ncgraph.analysis.context import build_ncg
from ncgraph.errors import BadInput, CapExceeded
from ncgraph.graphs.core import SimpleGraph
from ncgraph.groups.core import ElementSet, FiniteGroup
from ncgraph.matroids.graphs import is_matroid_graph

logger = logging.getLogger(__name__)

DEFAULT_CHI_MAX_ORDER = 200

PairPredicate = Callable[[FiniteGroup, ElementSet], bool]

PREDICATES: Dict[str, PairPredicate] = {}


def register_predicate(name: str) -> Callable[[PairPredicate], PairPredicate]:
    def decorator(func: PairPredicate) -> PairPredicate:
        PREDICATES[name] = func
        return func
    return decorator


@register_predicate("abelian")
def _abelian(group: FiniteGroup, elements: ElementSet) -> bool:
    return group.is_abelian_subset(elements)


@register_predicate("cyclic")
def _cyclic(group: FiniteGroup, elements: ElementSet) -> bool:
    return group.is_cyclic_subset(elements)


def get_predicate(predicate: Union[str, PairPredicate]) -> PairPredicate:
    if callable(predicate):
        return predicate
    try:
        return PREDICATES[predicate]
    except KeyError:
        raise BadInput(
            f"unknown predicate {predicate!r}; known: {', '.join(sorted(PREDICATES))}"
        ) from None


class _PairVerdicts:
    """Memoized chi verdicts of <x, y>, shared between both graph readings."""

    def __init__(self, group: FiniteGroup, predicate: PairPredicate):
        self.group = group
        self.predicate = predicate
        self._by_pair: Dict[Tuple[int, int], bool] = {}
        self._by_subgroup: Dict[frozenset, bool] = {}

    def __call__(self, x: int, y: int) -> bool:
        key = (x, y) if x < y else (y, x)
        verdict = self._by_pair.get(key)
        if verdict is None:
            closure = self.group.closure(key)
            verdict = self._by_subgroup.get(closure.as_set())
            if verdict is None:
                verdict = bool(self.predicate(self.group, closure))
                self._by_subgroup[closure.as_set()] = verdict
            self._by_pair[key] = verdict
        return verdict


def _check_order(group: FiniteGroup, max_order: int) -> None:
    if group.order > max_order:
        raise CapExceeded(group.order, max_order)


def chi_graph(
    group: FiniteGroup,
    predicate: Union[str, PairPredicate],
    max_order: int = DEFAULT_CHI_MAX_ORDER,
    verdicts: Optional[_PairVerdicts] = None,
) -> SimpleGraph:
    """
    Graph on G \\ Z(G) with x ~ y iff <x, y> fails the predicate.

    Raises:
        CapExceeded: If |G| exceeds max_order (one closure per vertex pair)

    Example:
        >>> q8 = build_group("Q:8")
        >>> chi_graph(q8, "abelian") == build_ncg(q8).graph
        True
    """
    _check_order(group, max_order)
    verdicts = verdicts or _PairVerdicts(group, get_predicate(predicate))
    ctx = build_ncg(group)
    nc = ctx.non_central
    n = len(nc)
    adjacency = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if not verdicts(nc[u], nc[v]):
                adjacency[u, v] = adjacency[v, u] = True
    return SimpleGraph.from_matrix(
        adjacency,
        vertex_tags=nc,
        vertex_labels=ctx.labels_of(nc),
        validate=False,
    )


def chi_literal_graph(
    group: FiniteGroup,
    predicate: Union[str, PairPredicate],
    max_order: int = DEFAULT_CHI_MAX_ORDER,
    verdicts: Optional[_PairVerdicts] = None,
) -> SimpleGraph:
    """Graph on all of G with x ~ y (x != y) iff <x, y> has the predicate."""
    _check_order(group, max_order)
    verdicts = verdicts or _PairVerdicts(group, get_predicate(predicate))
    n = group.order
    adjacency = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if verdicts(u, v):
                adjacency[u, v] = adjacency[v, u] = True
    return SimpleGraph.from_matrix(adjacency, vertex_tags=range(n), vertex_labels=group.labels, validate=False)


def chi_group_check(
    group: FiniteGroup,
    predicate: Union[str, PairPredicate],
    max_order: int = DEFAULT_CHI_MAX_ORDER,
) -> Tuple[bool, bool]:
    """
    Compare "every non-central centralizer has chi" with "chi_graph is a matroid".

    The two verdicts are returned side by side; callers record whether
    they agree rather than asserting it.
    """
    _check_order(group, max_order)
    check = get_predicate(predicate)
    ctx = build_ncg(group)
    centralizers_ok = all(check(group, c) for _, c in ctx.distinct_centralizers)
    matroid, _ = is_matroid_graph(chi_graph(group, check, max_order))
    return centralizers_ok, matroid


def chi_record(group: FiniteGroup, predicate: str, max_order: int = DEFAULT_CHI_MAX_ORDER) -> Dict[str, bool]:
    """Both polarities' matroid verdicts plus the centralizer verdict, for reports."""
    _check_order(group, max_order)
    check = get_predicate(predicate)
    verdicts = _PairVerdicts(group, check)
    ctx = build_ncg(group)
    centralizers_ok = all(check(group, c) for _, c in ctx.distinct_centralizers)
    matroid, _ = is_matroid_graph(chi_graph(group, check, max_order, verdicts))
    literal, _ = is_matroid_graph(chi_literal_graph(group, check, max_order, verdicts))
    return {
        "centralizers_have_property": centralizers_ok,
        "graph_is_matroid": matroid,
        "agree": centralizers_ok == matroid,
        "literal_graph_is_matroid": literal,
    }
