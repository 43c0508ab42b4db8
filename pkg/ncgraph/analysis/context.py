"""
Non-commuting graph construction.

The non-commuting graph of G has the non-central elements as vertices and
joins x and y whenever xy != yx. An NcgContext bundles the graph with the
group data every later analysis needs.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Tuple

import numpy as np

from ncgraph.groups.core import ElementSet, FiniteGroup
from ncgraph.graphs.core import SimpleGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NcgContext:
    """
    A group together with its non-commuting graph.

    Attributes:
        group: The materialized group
        center: Z(G)
        non_central: Element indices of G \\ Z(G), ascending; vertex v is non_central[v]
        graph: Non-commuting graph over non_central
        memo: Per-context cache for verdicts computed by the analysis modules
    """
    group: FiniteGroup
    center: ElementSet
    non_central: Tuple[int, ...]
    graph: SimpleGraph
    memo: Dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def vertex_of(self) -> Dict[int, int]:
        return {element: v for v, element in enumerate(self.non_central)}

    def element_of(self, vertex: int) -> int:
        return self.non_central[vertex]

    def centralizer(self, a: int) -> ElementSet:
        return self.group.centralizer(a)

    @property
    def centralizer_cache(self) -> Dict[int, ElementSet]:
        """Centralizers computed so far, keyed by element."""
        return {a: c for a, c in self.group._centralizers.items() if a not in self.center}

    @cached_property
    def distinct_centralizers(self) -> List[Tuple[int, ElementSet]]:
        """
        One (representative, C_G(rep)) pair per distinct non-central centralizer.

        The representative is the lowest element with that centralizer; the
        list is ordered by representative. Equality is element-set equality.
        """
        if not self.non_central:
            return []
        index = np.array(self.non_central, dtype=np.int64)
        rows = np.packbits(self.group.commutation_matrix[index], axis=1)
        _, first = np.unique(rows, axis=0, return_index=True)
        representatives = sorted(int(index[i]) for i in first)
        return [(a, self.group.centralizer(a)) for a in representatives]

    def labels_of(self, elements) -> List[str]:
        return [self.group.labels[e] for e in elements]


def build_ncg(group: FiniteGroup) -> NcgContext:
    """
    Build the non-commuting graph of a materialized group.

    Abelian groups give a graph with no vertices; that is a flag for the
    report, not an error.

    Example:
        >>> ctx = build_ncg(build_group("Q:8"))
        >>> ctx.graph.vertex_count, ctx.graph.degree(0)
        (6, 4)
    """
    center = group.center()
    central = center.as_set()
    non_central = tuple(e for e in range(group.order) if e not in central)
    index = np.array(non_central, dtype=np.int64)
    adjacency = ~group.commutation_matrix[np.ix_(index, index)]
    graph = SimpleGraph.from_matrix(
        adjacency,
        vertex_tags=non_central,
        vertex_labels=[group.labels[e] for e in non_central],
        validate=False,
    )
    logger.debug(
        f"Non-commuting graph of {group.spec}: {graph.vertex_count} vertices, "
        f"{graph.edge_count} edges"
    )
    return NcgContext(group=group, center=center, non_central=non_central, graph=graph)
