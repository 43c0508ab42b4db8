"""
Exact clique and independence numbers.

clique_number() is a bitset branch-and-bound: candidates are greedily
coloured in ascending vertex order and the colour count bounds how large a
clique the branch can still reach. The search is iterative so clique size
is not limited by the interpreter's recursion depth.

oracle_clique_number() enumerates every vertex subset and exists only to
cross-check the search on small graphs.
"""
import logging
from typing import List, Tuple

import numpy as np

from ncgraph.errors import CliqueSearchTimeout, TooLarge
from ncgraph.graphs.core import SimpleGraph

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 8
ORACLE_LIMIT = 24


def _color_order(rows: Tuple[int, ...], candidates: int) -> List[Tuple[int, int]]:
    """
    Greedily colour the candidate set, lowest vertex first.

    Returns (vertex, colour) pairs with colours non-decreasing, so scanning
    the list backwards visits the most promising vertices first and the
    colour of each entry bounds the clique size among it and its predecessors.
    """
    order: List[Tuple[int, int]] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~rows[v] & ~low
            uncolored &= ~low
            order.append((v, color))
    return order


def _greedy_clique(rows: Tuple[int, ...], candidates: int) -> List[int]:
    clique = []
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        clique.append(v)
        candidates &= rows[v]
    return clique


def clique_number(graph: SimpleGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> Tuple[int, Tuple[int, ...]]:
    """
    Compute the exact clique number and one maximum clique.

    Args:
        graph: Graph to search
        node_budget: Maximum number of branch nodes before giving up

    Returns:
        Tuple of (clique size, sorted witness clique)

    Raises:
        CliqueSearchTimeout: If the node budget is exhausted

    Example:
        >>> clique_number(SimpleGraph.complete(5))
        (5, (0, 1, 2, 3, 4))
    """
    if graph.vertex_count == 0:
        return 0, ()

    rows = graph.rows
    best = _greedy_clique(rows, graph.full_mask)
    clique: List[int] = []
    nodes = 0

    # Each frame: [remaining candidates, colour order, next position]
    root = _color_order(rows, graph.full_mask)
    frames = [[graph.full_mask, root, len(root)]]

    while frames:
        frame = frames[-1]
        candidates, order, pos = frame
        if pos == 0 or len(clique) + order[pos - 1][1] <= len(best):
            frames.pop()
            if frames:
                clique.pop()
            continue

        pos -= 1
        frame[2] = pos
        v = order[pos][0]
        frame[0] = candidates & ~(1 << v)

        nodes += 1
        if nodes > node_budget:
            logger.warning(f"Clique search on {graph!r} stopped after {node_budget} nodes")
            raise CliqueSearchTimeout(node_budget)

        clique.append(v)
        extension = candidates & rows[v]
        if extension:
            child = _color_order(rows, extension)
            frames.append([extension, child, len(child)])
        else:
            if len(clique) > len(best):
                best = list(clique)
            clique.pop()

    logger.debug(f"Clique search on {graph!r}: omega={len(best)} after {nodes} nodes")
    return len(best), tuple(sorted(best))


def independence_number(graph: SimpleGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Largest edgeless vertex set, computed as the clique number of the complement."""
    return clique_number(graph.complement(), node_budget)[0]


def oracle_clique_number(graph: SimpleGraph) -> int:
    """
    Maximum clique size by exhaustive subset enumeration.

    Every subset mask is classified in one pass: a mask with highest vertex k
    is a clique iff the mask without k is a clique and k is adjacent to the
    rest of it.

    Raises:
        TooLarge: If the graph has more than 24 vertices
    """
    n = graph.vertex_count
    if n > ORACLE_LIMIT:
        raise TooLarge(n, ORACLE_LIMIT)
    if n == 0:
        return 0

    is_clique = np.ones(1 << n, dtype=bool)
    size = np.zeros(1 << n, dtype=np.int8)
    for k in range(n):
        low, high = 1 << k, 1 << (k + 1)
        lower = np.arange(low, dtype=np.int64)
        non_neighbors = ~graph.rows[k] & (low - 1)
        is_clique[low:high] = is_clique[:low] & ((lower & non_neighbors) == 0)
        size[low:high] = size[:low] + 1
    return int(size[is_clique].max())
