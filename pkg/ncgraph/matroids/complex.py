"""
Simplicial complexes given by explicit face lists.

A complex is a non-empty, downward-closed collection of subsets of
{0, ..., n-1}. Faces are stored as sorted tuples. Graphs enter as
complexes of dimension at most one (empty face, singletons, edges).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ncgraph.errors import ComplexError
from ncgraph.graphs.core import SimpleGraph

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


def _canonical(face: Iterable[int]) -> Face:
    return tuple(sorted(set(face)))


def face_order(face: Face) -> Tuple[int, Face]:
    """Canonical order: by size, then lexicographically."""
    return (len(face), face)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Hereditary face collection over vertices 0..vertex_count-1.

    Use SimplicialComplex.create() to canonicalise and validate arbitrary
    face lists.
    """
    vertex_count: int
    faces: FrozenSet[Face]

    @classmethod
    def create(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """
        Build a complex, checking it is non-empty and closed under subsets.

        Raises:
            ComplexError: Naming the first face that breaks the rules
        """
        canonical = frozenset(_canonical(f) for f in faces)
        if not canonical:
            raise ComplexError("a simplicial complex must contain at least the empty face")
        for face in sorted(canonical, key=face_order):
            if any(not 0 <= v < vertex_count for v in face):
                raise ComplexError(f"face {face} uses a vertex outside 0..{vertex_count - 1}")
            for k in range(len(face)):
                subface = face[:k] + face[k + 1:]
                if subface not in canonical:
                    raise ComplexError(f"face {face} is present but its subset {subface} is not")
        return cls(vertex_count, canonical)

    @cached_property
    def faces_by_size(self) -> Dict[int, List[Face]]:
        grouped: Dict[int, List[Face]] = {}
        for face in sorted(self.faces, key=face_order):
            grouped.setdefault(len(face), []).append(face)
        return grouped

    @property
    def dimension(self) -> int:
        """Largest face size minus one (-1 for the complex {∅})."""
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> List[Face]:
        """Faces contained in no larger face."""
        result = []
        for face in sorted(self.faces, key=face_order):
            extendable = any(
                _canonical(face + (v,)) in self.faces
                for v in range(self.vertex_count)
                if v not in face
            )
            if not extendable:
                result.append(face)
        return result

    def __contains__(self, face: Iterable[int]) -> bool:
        return _canonical(face) in self.faces

    def __len__(self) -> int:
        return len(self.faces)


def from_graph(graph: SimpleGraph) -> SimplicialComplex:
    """
    View a graph as a trim complex of dimension at most one.

    Faces: the empty face, every singleton, every edge.
    """
    faces = {()}
    faces.update((v,) for v in range(graph.vertex_count))
    faces.update(graph.edges())
    return SimplicialComplex(graph.vertex_count, frozenset(faces))


def is_trim(complex_: SimplicialComplex) -> bool:
    """True iff every singleton {v} is a face."""
    return all((v,) in complex_.faces for v in range(complex_.vertex_count))


def has_exchange_property(complex_: SimplicialComplex) -> Tuple[bool, Optional[Tuple[Face, Face]]]:
    """
    Check the matroid exchange axiom.

    For every pair of faces I, J with |I| = |J| + 1 there must be some
    i in I \\ J with J ∪ {i} a face. Pairs are scanned in canonical order
    (by size of J, then I, then J lexicographically).

    Returns:
        (True, None) when the axiom holds, else (False, (I, J)) for the
        first violating pair
    """
    by_size = complex_.faces_by_size
    for size in sorted(by_size):
        larger = by_size.get(size + 1, [])
        if not larger:
            continue
        for big in larger:
            for small in by_size[size]:
                small_set = set(small)
                if not any(
                    _canonical(small + (i,)) in complex_.faces
                    for i in big
                    if i not in small_set
                ):
                    return False, (big, small)
    return True, None


def uniform_complex(vertex_count: int, rank: int) -> SimplicialComplex:
    """All subsets of size <= rank (the independent sets of U_{rank,n})."""
    faces = [c for k in range(rank + 1) for c in combinations(range(vertex_count), k)]
    return SimplicialComplex(vertex_count, frozenset(faces))
