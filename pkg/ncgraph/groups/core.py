"""
Finite group engine for ncgraph.

Groups are materialized as Cayley tables over dense element indices
0..n-1, with index 0 always the identity. Everything else (centers,
centralizers, generated subgroups, element orders) is derived from the
table and cached on first use.

All derived data is computed from the immutable table, so a FiniteGroup
can be shared freely between threads once built.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ncgraph.errors import OutOfRange, TableValidationError

logger = logging.getLogger(__name__)

# Exhaustive associativity checks are O(n^3); above this order they are skipped
ASSOCIATIVITY_CHECK_LIMIT = 512

SKIPPED_ASSOCIATIVITY_CHECK = "SkippedAssociativityCheck"


@dataclass(frozen=True)
class ElementSet:
    """
    Sorted, duplicate-free collection of group elements.

    Members are element indices for a FiniteGroup or image tuples for a
    LazyPermGroup. Use ElementSet.of() to build one from any iterable.
    """
    members: Tuple[Any, ...] = ()

    @classmethod
    def of(cls, items: Iterable[Any]) -> "ElementSet":
        return cls(tuple(sorted(set(items))))

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.members)

    def __contains__(self, item: Any) -> bool:
        return item in self._lookup

    def as_set(self) -> frozenset:
        return self._lookup

    def union(self, other: Iterable[Any]) -> "ElementSet":
        return ElementSet.of(list(self.members) + list(other))

    def difference(self, other: Iterable[Any]) -> "ElementSet":
        drop = set(other)
        return ElementSet(tuple(m for m in self.members if m not in drop))


class FiniteGroup:
    """
    A finite group given by its full multiplication table.

    Attributes:
        table: Read-only n x n int32 array, table[i, j] = index of g_i * g_j
        inverses: Read-only length-n array, inverses[i] = index of g_i^-1
        labels: Human-readable element names
        spec: Canonical spec text, "imported:<path>" or a subgroup description
        parent_indices: For subgroups, the element indices in the parent group
        warnings: Flags raised while building (e.g. SkippedAssociativityCheck)

    The table is trusted: built-in families construct it from their laws and
    the import path validates it before a FiniteGroup is created.

    Example:
        >>> g = FiniteGroup(np.array([[0, 1], [1, 0]]), labels=["1", "x"], spec="C:2")
        >>> g.multiply(1, 1)
        0
    """

    identity = 0

    def __init__(
        self,
        table: Any,
        labels: Optional[Sequence[str]] = None,
        spec: str = "imported",
        parent_indices: Optional[Sequence[int]] = None,
        warnings: Sequence[str] = (),
    ):
        table = np.array(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise TableValidationError("shape", detail=f"got shape {table.shape}")
        table.setflags(write=False)
        self.table = table

        n = table.shape[0]
        rows, cols = np.nonzero(table == 0)
        inverses = np.zeros(n, dtype=np.int32)
        inverses[rows] = cols
        inverses.setflags(write=False)
        self.inverses = inverses

        self.labels: Tuple[str, ...] = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.spec = spec
        self.parent_indices: Optional[Tuple[int, ...]] = (
            tuple(int(i) for i in parent_indices) if parent_indices is not None else None
        )
        self.warnings: Tuple[str, ...] = tuple(warnings)
        self._centralizers: Dict[int, ElementSet] = {}

    def __repr__(self) -> str:
        return f"FiniteGroup(spec={self.spec!r}, order={self.order})"

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def elements(self) -> range:
        return range(self.order)

    def _check(self, *indices: int) -> None:
        for i in indices:
            if not 0 <= i < self.order:
                raise OutOfRange(i, self.order)

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        """Return the element index carrying the given label."""
        try:
            return self._label_index[label]
        except KeyError:
            raise OutOfRange(label, self.order) from None

    # -------------------------------------------------------------------------
    # Element arithmetic
    # -------------------------------------------------------------------------

    @cached_property
    def _rows(self) -> List[List[int]]:
        # Plain lists are much faster than numpy scalars for closure walks
        return self.table.tolist()

    def multiply(self, i: int, j: int) -> int:
        """Return the index of g_i * g_j."""
        self._check(i, j)
        return self._rows[i][j]

    def inverse(self, i: int) -> int:
        self._check(i)
        return int(self.inverses[i])

    def power(self, x: int, k: int) -> int:
        """Return x^k for any integer k (negative powers use the inverse)."""
        self._check(x)
        k %= self.element_order(x)
        result = 0
        for _ in range(k):
            result = self._rows[result][x]
        return result

    def commutator(self, x: int, y: int) -> int:
        """
        Return [x, y] = x y x^-1 y^-1.

        The result is the identity (0) exactly when x and y commute.
        """
        self._check(x, y)
        rows = self._rows
        return rows[rows[rows[x][y]][int(self.inverses[x])]][int(self.inverses[y])]

    @cached_property
    def commutation_matrix(self) -> np.ndarray:
        """Boolean n x n matrix, True where g_i g_j = g_j g_i."""
        matrix = self.table == self.table.T
        matrix.setflags(write=False)
        return matrix

    def commutes(self, x: int, y: int) -> bool:
        self._check(x, y)
        return bool(self.commutation_matrix[x, y])

    @cached_property
    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by stepping all powers at once."""
        n = self.order
        index = np.arange(n)
        current = index.copy()
        orders = np.zeros(n, dtype=np.int64)
        k = 1
        while True:
            done = (current == 0) & (orders == 0)
            orders[done] = k
            if orders.all():
                break
            current = self.table[current, index]
            k += 1
        orders.setflags(write=False)
        return orders

    def element_order(self, x: int) -> int:
        self._check(x)
        return int(self.element_orders[x])

    # -------------------------------------------------------------------------
    # Centers, centralizers, subgroups
    # -------------------------------------------------------------------------

    @cached_property
    def _center(self) -> ElementSet:
        members = np.flatnonzero(self.commutation_matrix.all(axis=1))
        return ElementSet(tuple(int(z) for z in members))

    def center(self) -> ElementSet:
        """Return Z(G); always contains the identity."""
        return self._center

    def centralizer(self, a: int) -> ElementSet:
        """
        Return C_G(a), the elements commuting with a.

        Computed by a linear scan of the commutation row and cached per element.
        """
        self._check(a)
        cached = self._centralizers.get(a)
        if cached is None:
            members = np.flatnonzero(self.commutation_matrix[a])
            cached = ElementSet(tuple(int(x) for x in members))
            self._centralizers[a] = cached
        return cached

    def is_abelian(self) -> bool:
        return len(self.center()) == self.order

    def closure(self, gens: Iterable[int]) -> ElementSet:
        """
        Return the element set of the subgroup generated by gens.

        In a finite group the monoid generated by gens already contains all
        inverses, so a breadth-first walk of right multiplications suffices.
        """
        gens = sorted(set(gens))
        self._check(*gens)
        rows = self._rows
        seen = {0}
        queue = deque([0])
        while queue:
            element = queue.popleft()
            row = rows[element]
            for s in gens:
                product = row[s]
                if product not in seen:
                    seen.add(product)
                    queue.append(product)
        return ElementSet.of(seen)

    def generated_subgroup(self, gens: Iterable[int]) -> "FiniteGroup":
        """
        Return the subgroup generated by gens as a standalone FiniteGroup.

        Elements are re-indexed in ascending parent order (so the identity
        stays at 0); parent_indices maps each new index back to the parent.

        Example:
            >>> q16 = build(parse_spec("Q:16"))
            >>> q16.generated_subgroup([1]).order
            8
        """
        gens = list(gens)
        if not gens:
            gens = [0]
        return self.subgroup_on(self.closure(gens))

    def subgroup_on(self, elements: ElementSet) -> "FiniteGroup":
        """Re-index a subset already known to be a subgroup as a FiniteGroup."""
        index = np.array(list(elements), dtype=np.int64)
        position = np.full(self.order, -1, dtype=np.int64)
        position[index] = np.arange(len(index))
        sub_table = position[self.table[np.ix_(index, index)]]
        gens_text = ", ".join(self.labels[i] for i in index[:4])
        if len(index) > 4:
            gens_text += ", ..."
        return FiniteGroup(
            sub_table,
            labels=[self.labels[i] for i in index],
            spec=f"subgroup{{{gens_text}}} of {self.spec}",
            parent_indices=index.tolist(),
        )

    def is_abelian_subset(self, elements: Iterable[int]) -> bool:
        """True when every pair of the given elements commutes."""
        index = np.array(list(elements), dtype=np.int64)
        if len(index) == 0:
            return True
        return bool(self.commutation_matrix[np.ix_(index, index)].all())

    def is_cyclic_subset(self, elements: ElementSet) -> bool:
        """True when the given subgroup is generated by one of its elements."""
        size = len(elements)
        orders = self.element_orders
        return any(int(orders[x]) == size for x in elements)

    def to_cayley_dict(self) -> Dict[str, Any]:
        """Return the JSON-ready Cayley table document for this group."""
        return {
            "order": self.order,
            "table": self.table.tolist(),
            "labels": list(self.labels),
        }


def direct_product(left: FiniteGroup, right: FiniteGroup, spec: Optional[str] = None) -> FiniteGroup:
    """
    Return left x right with componentwise multiplication.

    Element (i, j) gets index i * |right| + j, so (0, 0) is the identity.
    Labels join the factor labels with ",".
    """
    n1, n2 = left.order, right.order
    t1 = left.table.astype(np.int64)
    t2 = right.table.astype(np.int64)
    table = t1[:, None, :, None] * n2 + t2[None, :, None, :]
    table = table.reshape(n1 * n2, n1 * n2)
    labels = [f"{a},{b}" for a in left.labels for b in right.labels]
    return FiniteGroup(table, labels=labels, spec=spec or f"{left.spec}x{right.spec}")


def find_law_violation(
    table: np.ndarray,
    associativity_limit: int = ASSOCIATIVITY_CHECK_LIMIT,
) -> Tuple[Optional[TableValidationError], List[str]]:
    """
    Check a square table with identity at index 0 against the group laws.

    Checks, in order: value range, identity law, Latin rows, Latin columns,
    inverses, and associativity (exhaustive, only up to associativity_limit).

    Args:
        table: n x n integer array
        associativity_limit: Largest order checked for associativity

    Returns:
        Tuple of (first violation or None, warning flags)
    """
    n = table.shape[0]
    warnings: List[str] = []

    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        return TableValidationError("range", bad[0].tolist()), warnings

    index = np.arange(n)
    bad_rows = np.flatnonzero(table[:, 0] != index)
    if len(bad_rows):
        return TableValidationError("identity", [int(bad_rows[0]), 0]), warnings
    bad_cols = np.flatnonzero(table[0, :] != index)
    if len(bad_cols):
        return TableValidationError("identity", [0, int(bad_cols[0])]), warnings

    sorted_rows = np.sort(table, axis=1)
    bad = np.flatnonzero((sorted_rows != index).any(axis=1))
    if len(bad):
        return TableValidationError("latin-row", [int(bad[0])]), warnings
    sorted_cols = np.sort(table, axis=0)
    bad = np.flatnonzero((sorted_cols != index[:, None]).any(axis=0))
    if len(bad):
        return TableValidationError("latin-column", [int(bad[0])]), warnings

    # Latin rows guarantee a right inverse; it must also be a left inverse
    rows, cols = np.nonzero(table == 0)
    inverses = np.empty(n, dtype=np.int64)
    inverses[rows] = cols
    bad = np.flatnonzero(table[inverses, index] != 0)
    if len(bad):
        return TableValidationError("inverse", [int(bad[0]), int(inverses[bad[0]])]), warnings

    if n > associativity_limit:
        logger.warning(
            f"Skipping associativity check for order {n} (limit {associativity_limit})"
        )
        warnings.append(SKIPPED_ASSOCIATIVITY_CHECK)
        return None, warnings

    for a in range(n):
        # lhs[b, c] = (a b) c, rhs[b, c] = a (b c)
        lhs = table[table[a], :]
        rhs = table[a][table]
        mismatch = np.argwhere(lhs != rhs)
        if len(mismatch):
            b, c = mismatch[0].tolist()
            return TableValidationError("associativity", [a, b, c]), warnings

    return None, warnings


def verify_group_laws(group: FiniteGroup) -> None:
    """Raise TableValidationError if a group's table breaks any group law."""
    violation, _ = find_law_violation(group.table)
    if violation is not None:
        raise violation
