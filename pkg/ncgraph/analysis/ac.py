"""
AC and CC tests, commutativity transitivity, and lazy witnesses.

- is_ac: every non-central centralizer is abelian
- is_cc: every non-central centralizer is cyclic
- commutativity_transitive: commuting restricted to G \\ Z(G) is transitive
- Lazy witnesses: known transitivity violations in S_n and A_n checked
  element-wise without enumerating the group
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ncgraph.analysis.context import NcgContext
from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.lazy import ALTERNATING, SYMMETRIC, LazyPermGroup

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


def is_ac(ctx: NcgContext) -> Tuple[bool, Optional[Triple]]:
    """
    Decide whether every non-central element has an abelian centralizer.

    Returns:
        (True, None), or (False, (a, x, y)) with x, y in C_G(a) not
        commuting; a is the lowest element with a non-abelian centralizer

    Example:
        >>> is_ac(build_ncg(build_group("Q:16")))
        (True, None)
    """
    cached = ctx.memo.get("is_ac")
    if cached is not None:
        return cached

    result: Tuple[bool, Optional[Triple]] = (True, None)
    matrix = ctx.group.commutation_matrix
    for a, centralizer in ctx.distinct_centralizers:
        index = np.array(centralizer.members, dtype=np.int64)
        block = matrix[np.ix_(index, index)]
        if not block.all():
            i, j = np.argwhere(~block)[0]
            result = (False, (a, int(index[i]), int(index[j])))
            break

    ctx.memo["is_ac"] = result
    logger.debug(f"{ctx.group.spec}: is_ac={result[0]}")
    return result


def is_cc(ctx: NcgContext) -> bool:
    """True iff every non-central centralizer is cyclic."""
    group = ctx.group
    return all(group.is_cyclic_subset(c) for _, c in ctx.distinct_centralizers)


def commutativity_transitive(ctx: NcgContext) -> Tuple[bool, Optional[Triple]]:
    """
    Decide whether commuting is transitive on the non-central elements.

    The relation is transitive exactly when commuting elements have equal
    commuting rows, which is checked in one vectorized pass. Only when that
    fails are rows scanned for the first violating triple.

    Returns:
        (True, None), or (False, (x, y, z)) with [x,y] = [y,z] = 1 and
        [x,z] != 1, the first such triple in element index order
    """
    nc = np.array(ctx.non_central, dtype=np.int64)
    if len(nc) == 0:
        return True, None

    commuting = ctx.group.commutation_matrix[np.ix_(nc, nc)]
    _, pattern = np.unique(np.packbits(commuting, axis=1), axis=0, return_inverse=True)
    pattern = np.asarray(pattern).ravel()
    mismatched = commuting & (pattern[:, None] != pattern[None, :])
    if not mismatched.any():
        return True, None

    for xi in np.flatnonzero(mismatched.any(axis=1)):
        ys = np.flatnonzero(commuting[xi])
        candidates = commuting[ys] & ~commuting[xi]
        hits = candidates.any(axis=1)
        if hits.any():
            row = int(np.argmax(hits))
            zi = int(np.argmax(candidates[row]))
            triple = (int(nc[xi]), int(nc[ys[row]]), int(nc[zi]))
            logger.debug(f"{ctx.group.spec}: commuting is not transitive at {triple}")
            return False, triple

    # Unreachable when the row test above is sound
    return True, None


def verify_transitivity_witness(group: FiniteGroup, x: int, y: int, z: int) -> bool:
    """True iff x, y, z are non-central with [x,y] = [y,z] = 1 and [x,z] != 1."""
    center = group.center()
    if any(e in center for e in (x, y, z)):
        return False
    return group.commutes(x, y) and group.commutes(y, z) and not group.commutes(x, z)


# =============================================================================
# Lazy witnesses
# =============================================================================

# (kind, smallest degree, largest degree or None, triple in cycle notation)
LAZY_WITNESSES = [
    (SYMMETRIC, 4, None, ("(3 4)", "(1 2)(3 4)", "(1 3)(2 4)")),
    (ALTERNATING, 10, None, ("(1 2)(3 4)", "(5 6)(7 8)", "(2 3)(9 10)")),
    (ALTERNATING, 6, 9, ("(1 3)(2 4)", "(1 2)(3 4)", "(1 2)(5 6)")),
]


@dataclass(frozen=True)
class LazyWitnessCheck:
    """Element-wise commutation record for a candidate triple (x, y, z)."""
    triple: Tuple[str, str, str]
    xy_commute: bool
    yz_commute: bool
    xz_commute: bool
    non_trivial: bool

    @property
    def violates(self) -> bool:
        return self.non_trivial and self.xy_commute and self.yz_commute and not self.xz_commute

    def to_dict(self) -> Dict[str, Any]:
        return {
            "triple": list(self.triple),
            "xy_commute": self.xy_commute,
            "yz_commute": self.yz_commute,
            "xz_commute": self.xz_commute,
            "violates_transitivity": self.violates,
        }


def lazy_witness_for(group: LazyPermGroup) -> Optional[Tuple[str, str, str]]:
    """Return the catalogued violating triple for this S_n or A_n, if any."""
    for kind, low, high, triple in LAZY_WITNESSES:
        if group.kind == kind and group.degree >= low and (high is None or group.degree <= high):
            return triple
    return None


def verify_lazy_witness(group: LazyPermGroup, triple: Tuple[str, str, str]) -> LazyWitnessCheck:
    """
    Check a cycle-notation triple with perm_commutes only.

    S_n and A_n have trivial center for n >= 4, so any non-identity
    element there is non-central.

    Raises:
        MalformedPermutation: If a cycle does not fit the degree
        ParityViolation: If an odd permutation is given for A_n
    """
    x, y, z = (group.from_cycles(text) for text in triple)
    identity = group.identity()
    check = LazyWitnessCheck(
        triple=tuple(group.label(p) for p in (x, y, z)),
        xy_commute=group.perm_commutes(x, y),
        yz_commute=group.perm_commutes(y, z),
        xz_commute=group.perm_commutes(x, z),
        non_trivial=group.degree >= 4 and identity not in (x, y, z),
    )
    logger.info(f"Lazy witness on {group.spec}: {check.triple} violates={check.violates}")
    return check
