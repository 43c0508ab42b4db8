"""
The matroid criterion for graphs.

A graph, viewed as a trim complex of dimension at most one, satisfies the
exchange property exactly when every connected component of its complement
is complete. Equivalently the complement contains no induced path a-b-c,
which is what the witness reports.
"""
import logging
from typing import Iterable, Optional, Tuple

from ncgraph.errors import InconsistentVerdict, NotAClique, NotAMatroid, TooLarge
from ncgraph.graphs.core import SimpleGraph, iter_bits, mask_of
from ncgraph.matroids.complex import from_graph, has_exchange_property

logger = logging.getLogger(__name__)

# Exchange-property cross-checks enumerate face pairs; keep graphs small
CROSS_VALIDATE_LIMIT = 64


def _is_cluster(graph: SimpleGraph) -> bool:
    """True iff every component's closed neighbourhoods equal the component."""
    for component in graph.components():
        mask = mask_of(component)
        if any(graph.rows[v] | (1 << v) != mask for v in component):
            return False
    return True


def is_matroid_graph(graph: SimpleGraph) -> Tuple[bool, Optional[Tuple[int, int, int]]]:
    """
    Decide whether every component of the complement is a clique.

    Returns:
        (True, None) for matroid graphs, otherwise (False, (a, b, c)) where
        a-b and b-c are edges of the complement and a-c is not. In the
        original graph that is: a, c adjacent, b adjacent to neither.

    Examples:
        >>> is_matroid_graph(SimpleGraph.complete(4))
        (True, None)
        >>> is_matroid_graph(SimpleGraph.from_edges(3, [(0, 1)]))
        (False, (0, 2, 1))
    """
    complement = graph.complement()
    rows = complement.rows
    if _is_cluster(complement):
        return True, None
    for b in range(complement.vertex_count):
        around = rows[b]
        for a in iter_bits(around):
            # Complement-neighbours of b that are not complement-neighbours of a
            far = around & ~rows[a] & ~(1 << a)
            if far:
                c = (far & -far).bit_length() - 1
                return False, (a, b, c)
    return True, None


def cross_validate_matroid(graph: SimpleGraph) -> bool:
    """
    Decide matroid-ness twice, by the component criterion and by the
    exchange property of the graph's complex, and insist they agree.

    Raises:
        TooLarge: For graphs with more than 64 vertices
        InconsistentVerdict: If the two procedures disagree
    """
    if graph.vertex_count > CROSS_VALIDATE_LIMIT:
        raise TooLarge(graph.vertex_count, CROSS_VALIDATE_LIMIT)
    by_components, triple = is_matroid_graph(graph)
    by_exchange, pair = has_exchange_property(from_graph(graph))
    if by_components != by_exchange:
        raise InconsistentVerdict(
            f"component criterion says {by_components} (witness {triple}) but "
            f"exchange property says {by_exchange} (counterexample {pair}) on {graph!r}"
        )
    return by_components


def extend_clique(graph: SimpleGraph, seed: Iterable[int]) -> Tuple[int, ...]:
    """
    Extend a clique of a matroid graph to a maximum clique.

    Every complement component that the seed does not meet contributes its
    lowest-index vertex; vertices in different components are always
    adjacent in a matroid graph, so the result is a clique with one vertex
    per component.

    Raises:
        NotAClique: If seed is not a clique
        NotAMatroid: If the graph fails the matroid criterion
    """
    seed = sorted(set(seed))
    if not graph.is_clique(seed):
        raise NotAClique(f"{seed} is not a clique")
    matroid, witness = is_matroid_graph(graph)
    if not matroid:
        raise NotAMatroid(f"graph is not a matroid (complement path {witness})")

    covered = mask_of(seed)
    result = list(seed)
    for component in graph.complement().components():
        if not mask_of(component) & covered:
            result.append(component[0])
    return tuple(sorted(result))
