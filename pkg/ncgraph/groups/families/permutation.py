"""
Symmetric and alternating groups.

Elements are enumerated in lexicographic order of their image arrays, so
the identity is always element 0. The Cayley table is built a row at a time:
each permutation is encoded as a base-n integer and products are located by
binary search over the (already sorted) codes.

Degrees whose group order exceeds the materialization cap are served by a
LazyPermGroup instead (single-term specs only).
"""
import logging
from math import factorial
from typing import List

import numpy as np

from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.families.base import GroupFamily
from ncgraph.groups.lazy import (
    ALTERNATING,
    SYMMETRIC,
    LazyPermGroup,
    cycle_label,
    enumerate_permutations,
    parity,
)

logger = logging.getLogger(__name__)


def build_permutation_group(degree: int, kind: str, spec: str) -> FiniteGroup:
    perms = np.array(list(enumerate_permutations(degree, kind)), dtype=np.int64) - 1
    perms = perms.reshape(-1, degree)
    weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
    codes = perms @ weights

    size = len(perms)
    table = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        # (p_i * p_j)[k] = p_i[p_j[k]]: apply p_j first
        products = perms[i][perms]
        table[i] = np.searchsorted(codes, products @ weights)

    labels = [cycle_label(tuple(p + 1)) for p in perms]
    logger.debug(f"Built {spec} with {size} elements")
    return FiniteGroup(table, labels=labels, spec=spec)


def _check_permutation_group(group: FiniteGroup, degree: int, kind: str, expected: int) -> List[str]:
    failed = []
    if group.order != expected:
        failed.append(f"order {expected}")
    if kind == ALTERNATING:
        lazy = LazyPermGroup(degree, SYMMETRIC)
        odd = [label for label in group.labels if parity(lazy.from_cycles(label))]
        if odd:
            failed.append(f"all elements even (found {odd[0]})")
    elif degree >= 2:
        index = {label: i for i, label in enumerate(group.labels)}
        long_cycle = "(" + " ".join(str(k) for k in range(1, degree + 1)) + ")"
        if len(group.closure([index["(1 2)"], index[long_cycle]])) != group.order:
            failed.append("generated by (1 2) and (1 2 ... n)")
    return failed


class SymmetricFamily(GroupFamily):
    """S:n, symmetric group on n points."""

    TAG = "S"
    DISPLAY_NAME = "Symmetric"
    CONSTRAINT = "degree >= 1"
    DESCRIPTION = "S:n is the symmetric group of degree n (order n!)"
    LAZY_CAPABLE = True

    @classmethod
    def order(cls, value: int) -> int:
        return factorial(value)

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        return build_permutation_group(value, SYMMETRIC, f"S:{value}")

    @classmethod
    def build_lazy(cls, value: int) -> LazyPermGroup:
        return LazyPermGroup(value, SYMMETRIC)

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        return _check_permutation_group(group, value, SYMMETRIC, factorial(value))

    @classmethod
    def is_abelian_instance(cls, value: int) -> bool:
        return value <= 2


class AlternatingFamily(GroupFamily):
    """A:n, alternating group on n points."""

    TAG = "A"
    DISPLAY_NAME = "Alternating"
    CONSTRAINT = "degree >= 1"
    DESCRIPTION = "A:n is the alternating group of degree n (order n!/2)"
    LAZY_CAPABLE = True

    @classmethod
    def order(cls, value: int) -> int:
        return max(1, factorial(value) // 2)

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        return build_permutation_group(value, ALTERNATING, f"A:{value}")

    @classmethod
    def build_lazy(cls, value: int) -> LazyPermGroup:
        return LazyPermGroup(value, ALTERNATING)

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        return _check_permutation_group(group, value, ALTERNATING, cls.order(value))

    @classmethod
    def is_abelian_instance(cls, value: int) -> bool:
        return value <= 3
