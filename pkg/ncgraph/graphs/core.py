"""
Simple undirected graphs with packed-bit adjacency.

Each vertex's neighbourhood is a Python int used as a bitset (bit v set
when v is adjacent). Vertices are 0..n-1 in a fixed order; every
procedure that has to choose between vertices picks the lowest index.
"""
import logging
from collections import deque
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ncgraph.errors import OutOfRange

logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class SimpleGraph:
    """
    Undirected graph without loops or multiple edges.

    Attributes:
        vertex_count: Number of vertices
        rows: Adjacency bitsets, one int per vertex
        vertex_tags: Optional group element index for each vertex
        vertex_labels: Optional display label for each vertex

    Example:
        >>> g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        >>> g.degree(1)
        2
    """

    def __init__(
        self,
        vertex_count: int,
        rows: Optional[Sequence[int]] = None,
        vertex_tags: Optional[Sequence[int]] = None,
        vertex_labels: Optional[Sequence[str]] = None,
        validate: bool = True,
    ):
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")
        self.vertex_count = vertex_count
        self.rows: Tuple[int, ...] = tuple(rows) if rows is not None else (0,) * vertex_count
        if len(self.rows) != vertex_count:
            raise ValueError(f"expected {vertex_count} adjacency rows, got {len(self.rows)}")
        self.vertex_tags = tuple(vertex_tags) if vertex_tags is not None else None
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else None
        if validate:
            self._validate()

    def _validate(self) -> None:
        full = (1 << self.vertex_count) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {u} has bits beyond vertex {self.vertex_count - 1}")
            if row >> u & 1:
                raise ValueError(f"vertex {u} has a loop")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise ValueError(f"edge ({u}, {v}) is not symmetric")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], validate=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], **kwargs) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange((u, v), n, what="vertex")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, validate=False, **kwargs)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, **kwargs) -> "SimpleGraph":
        """Build from a symmetric boolean adjacency matrix (diagonal ignored)."""
        matrix = np.array(matrix, dtype=bool)
        n = matrix.shape[0]
        if n:
            np.fill_diagonal(matrix, False)
        packed = np.packbits(matrix, axis=1, bitorder="little")
        rows = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return cls(n, rows, **kwargs)

    # -------------------------------------------------------------------------
    # Queries
    # -------------------------------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise OutOfRange(v, self.vertex_count, what="vertex")

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        self._check(v)
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        """Number of neighbours of v (popcount of its row)."""
        self._check(v)
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield (u, u + 1 + v)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def label(self, v: int) -> str:
        if self.vertex_labels is not None:
            return self.vertex_labels[v]
        return str(v)

    def complement(self) -> "SimpleGraph":
        """Return the graph with exactly the non-edges of this one (no loops)."""
        full = self.full_mask
        rows = [full ^ row ^ (1 << v) for v, row in enumerate(self.rows)]
        return SimpleGraph(
            self.vertex_count,
            rows,
            vertex_tags=self.vertex_tags,
            vertex_labels=self.vertex_labels,
            validate=False,
        )

    def components(self) -> List[Tuple[int, ...]]:
        """
        Partition the vertices into connected components.

        Components are sorted by their lowest vertex; vertices within a
        component are ascending.
        """
        unseen = self.full_mask
        parts: List[Tuple[int, ...]] = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            component = 1 << start
            unseen ^= component
            queue = deque([start])
            while queue:
                v = queue.popleft()
                fresh = self.rows[v] & unseen
                unseen &= ~fresh
                component |= fresh
                queue.extend(iter_bits(fresh))
            parts.append(tuple(iter_bits(component)))
        return parts

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """True iff every pair of the given vertices is adjacent (vacuous for 0 or 1)."""
        vertices = list(vertices)
        for v in vertices:
            self._check(v)
        mask = mask_of(vertices)
        return all((self.rows[v] | (1 << v)) & mask == mask for v in vertices)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vertices = list(vertices)
        for v in vertices:
            self._check(v)
        mask = mask_of(vertices)
        return all(self.rows[v] & mask == 0 for v in vertices)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.rows))

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={self.vertex_count}, edges={self.edge_count})"
