"""
Structure of AC-groups read off their centralizers.

In an AC-group the sets C_G(a) \\ Z(G) partition the non-central elements
and are exactly the complement components of the non-commuting graph. The
functions here compute that partition and everything that follows from it:
the clique number without search, the counting identity
|G| = (1 - w)|Z| + sum |C_G(a_i)|, the degree bound, the k-regular formula,
and the p-group cases by central quotient order.

Functions with an AC precondition raise NotAcGroup (carrying the witness
from is_ac) rather than returning a wrong answer.
"""
import logging
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from sympy import factorint

from ncgraph.analysis.ac import is_ac
from ncgraph.analysis.context import NcgContext, build_ncg
from ncgraph.errors import (
    AbelianGroup,
    BadInput,
    InconsistentVerdict,
    NotAcGroup,
    NotMaximal,
    OutOfRange,
    ParameterError,
    SpecMismatch,
    SpecSyntaxError,
)
from ncgraph.groups.core import ElementSet, FiniteGroup
from ncgraph.groups.families import get_family
from ncgraph.groups.spec import parse_spec

logger = logging.getLogger(__name__)


def _require_ac(ctx: NcgContext) -> None:
    ac, witness = is_ac(ctx)
    if not ac:
        raise NotAcGroup(witness)


def _pairwise_noncommuting(ctx: NcgContext, members: List[int]) -> bool:
    if len(members) < 2:
        return True
    index = np.array(members, dtype=np.int64)
    block = ctx.group.commutation_matrix[np.ix_(index, index)]
    return not (block & ~np.eye(len(index), dtype=bool)).any()


# =============================================================================
# Partition and clique number
# =============================================================================

def centralizer_partition(ctx: NcgContext) -> List[ElementSet]:
    """
    Return the blocks C_G(a) \\ Z(G), one per distinct non-central centralizer.

    Blocks are ordered by their lowest element and are checked to be
    pairwise disjoint and to cover G \\ Z(G).

    Raises:
        NotAcGroup: If some non-central centralizer is not abelian
        InconsistentVerdict: If the blocks fail to partition the vertices
    """
    _require_ac(ctx)
    cached = ctx.memo.get("partition")
    if cached is not None:
        return cached

    blocks = [c.difference(ctx.center) for _, c in ctx.distinct_centralizers]
    covered: set = set()
    for block in blocks:
        if covered & block.as_set():
            raise InconsistentVerdict(f"centralizer blocks of {ctx.group.spec} overlap outside the center")
        covered |= block.as_set()
    if len(covered) != len(ctx.non_central):
        raise InconsistentVerdict(f"centralizer blocks of {ctx.group.spec} do not cover G \\ Z(G)")

    ctx.memo["partition"] = blocks
    return blocks


def omega_fast(ctx: NcgContext) -> int:
    """
    Clique number of the non-commuting graph of an AC-group, without search.

    Example:
        >>> omega_fast(build_ncg(build_group("Q:20")))
        6
    """
    return len(centralizer_partition(ctx))


def eq1_verify(ctx: NcgContext) -> Tuple[bool, int, int]:
    """
    Evaluate the counting identity |G| = (1 - w)|Z(G)| + sum_i |C_G(a_i)|.

    The sum runs over one representative per partition block.

    Returns:
        (holds, lhs, rhs)
    """
    omega = omega_fast(ctx)
    lhs = ctx.group.order
    rhs = (1 - omega) * len(ctx.center) + sum(len(c) for _, c in ctx.distinct_centralizers)
    return lhs == rhs, lhs, rhs


# =============================================================================
# Maximal non-commuting sets
# =============================================================================

def maximal_noncommuting_set(ctx: NcgContext) -> ElementSet:
    """
    Greedy maximal set of pairwise non-commuting elements, lowest index first.

    For AC-groups its size is the clique number; for other groups it is
    only maximal, possibly smaller.

    Raises:
        AbelianGroup: If G is abelian
    """
    group = ctx.group
    if group.is_abelian():
        raise AbelianGroup(f"{group.spec} is abelian; every pair of elements commutes")

    matrix = group.commutation_matrix
    blocked = np.zeros(group.order, dtype=bool)
    chosen: List[int] = []
    for x in ctx.non_central:
        if not blocked[x]:
            chosen.append(x)
            blocked |= matrix[x]

    if not blocked.all():
        raise InconsistentVerdict(f"greedy set on {group.spec} is not maximal")
    return ElementSet(tuple(chosen))


def verify_centralizer_cover(ctx: NcgContext, s: ElementSet) -> bool:
    """
    Check that the centralizers of a maximal non-commuting set cover G
    and that dropping any one of them breaks the cover.

    Raises:
        NotMaximal: If s is not a maximal set of pairwise non-commuting
            non-central elements
    """
    group = ctx.group
    members = sorted(s)
    spec = group.spec
    if not members:
        raise NotMaximal(f"empty set is not maximal in {spec}")
    central = [x for x in members if x in ctx.center]
    if central:
        raise NotMaximal(f"{group.labels[central[0]]} is central in {spec}")
    if not _pairwise_noncommuting(ctx, members):
        raise NotMaximal(f"{ctx.labels_of(members)} is not pairwise non-commuting in {spec}")

    rows = group.commutation_matrix[np.array(members, dtype=np.int64)]
    blocked = rows.any(axis=0)
    extensions = [x for x in ctx.non_central if not blocked[x]]
    if extensions:
        raise NotMaximal(f"{group.labels[extensions[0]]} extends {ctx.labels_of(members)} in {spec}")

    if not blocked.all():
        return False
    for i in range(len(members)):
        rest = np.delete(rows, i, axis=0)
        if rest.shape[0] and rest.any(axis=0).all():
            logger.debug(f"{spec}: centralizer of {group.labels[members[i]]} is redundant in the cover")
            return False
    return True


def exchange_extend(ctx: NcgContext, n: Iterable[int], g: int) -> ElementSet:
    """
    Add g to a pairwise non-commuting set N, swapping out one element if needed.

    Either N + {g} is pairwise non-commuting, or some x in N commutes with g
    and (N - {x}) + {g} is; the lowest such x is swapped.

    Raises:
        NotAcGroup: If G is not an AC-group
        BadInput: If N is not pairwise non-commuting or g is central
    """
    _require_ac(ctx)
    group = ctx.group
    members = sorted(set(n))
    for x in [g, *members]:
        if not 0 <= x < group.order:
            raise OutOfRange(x, group.order)
    if g in ctx.center:
        raise BadInput(f"{group.labels[g]} is central in {group.spec}")
    if any(x in ctx.center for x in members) or not _pairwise_noncommuting(ctx, members):
        raise BadInput(f"{ctx.labels_of(members)} is not a set of pairwise non-commuting elements")
    if g in members:
        return ElementSet(tuple(members))

    matrix = group.commutation_matrix
    commuting = [x for x in members if matrix[x, g]]
    if not commuting:
        return ElementSet.of(members + [g])
    for x in commuting:
        candidate = [m for m in members if m != x] + [g]
        if _pairwise_noncommuting(ctx, candidate):
            return ElementSet.of(candidate)
    raise InconsistentVerdict(f"no exchange for {group.labels[g]} into {ctx.labels_of(members)}")


# =============================================================================
# Bounds and formulas
# =============================================================================

def degree_bound_check(ctx: NcgContext) -> bool:
    """True iff |C_G(x)| <= |G| - w + 1 for every non-central x."""
    omega = omega_fast(ctx)
    if not ctx.non_central:
        return True
    index = np.array(ctx.non_central, dtype=np.int64)
    sizes = ctx.group.commutation_matrix[index].sum(axis=1)
    return bool((sizes <= ctx.group.order - omega + 1).all())


def kregular_omega(ctx: NcgContext) -> Optional[int]:
    """
    Clique number from the k-regular formula (|G| - |Z|) / (k - |Z|).

    Returns None unless every non-central centralizer has the same size k.

    Raises:
        NotAcGroup: If G is not an AC-group
        InconsistentVerdict: If the formula disagrees with omega_fast
    """
    omega = omega_fast(ctx)
    sizes = {len(c) for _, c in ctx.distinct_centralizers}
    if len(sizes) != 1:
        return None
    k = sizes.pop()
    z = len(ctx.center)
    value, remainder = divmod(ctx.group.order - z, k - z)
    if remainder or value != omega:
        raise InconsistentVerdict(
            f"k-regular formula gives {(ctx.group.order - z) / (k - z)} but omega is {omega} "
            f"for {ctx.group.spec}"
        )
    return value


def cc_quotient_omega_check(group: FiniteGroup) -> bool:
    """
    Check w(G) = 2^(n-2) + 1 = w(Q_2^n) for G built as Q:2^n or Q:2^n x C:m, m >= 1.

    Raises:
        SpecMismatch: If the group was not built from such a spec
    """
    try:
        parsed = parse_spec(group.spec)
    except (SpecSyntaxError, ParameterError) as e:
        raise SpecMismatch(f"{group.spec!r} is not a built-in spec: {e}") from e

    terms = parsed.terms
    head = terms[0]
    power_of_two = head.value >= 8 and head.value & (head.value - 1) == 0
    if len(terms) > 2 or head.tag != "Q" or not power_of_two:
        raise SpecMismatch(f"{group.spec} does not have the form Q:2^n x C:m")
    m = 1
    if len(terms) == 2:
        if terms[1].tag != "C":
            raise SpecMismatch(f"{group.spec}: second factor must be C:m")
        m = terms[1].value

    n = head.value.bit_length() - 1
    expected = 2 ** (n - 2) + 1
    omega = omega_fast(build_ncg(group))
    omega_q = omega if m == 1 else omega_fast(build_ncg(get_family("Q").build(head.value)))
    logger.info(f"{group.spec}: omega={omega}, omega(Q:{head.value})={omega_q}, expected {expected}")
    return omega == expected and omega_q == omega


# =============================================================================
# p-groups
# =============================================================================

def central_quotient_order(ctx: NcgContext) -> int:
    return ctx.group.order // len(ctx.center)


def _prime_power(order: int) -> Optional[Tuple[int, int]]:
    factors = factorint(order)
    if len(factors) != 1:
        return None
    (p, k), = factors.items()
    return int(p), int(k)


def has_abelian_maximal_subgroup(ctx: NcgContext) -> bool:
    """
    Decide whether a p-group has an abelian maximal subgroup.

    In a non-abelian p-group an abelian maximal subgroup M equals C_G(a) for
    every a in M \\ Z(G), so only centralizers of index p need checking.

    Raises:
        BadInput: If |G| is not a prime power
    """
    group = ctx.group
    prime_power = _prime_power(group.order)
    if prime_power is None:
        raise BadInput(f"{group.spec} has order {group.order}, not a prime power")
    if group.is_abelian():
        return True
    p = prime_power[0]
    return any(
        len(c) * p == group.order and group.is_abelian_subset(c)
        for _, c in ctx.distinct_centralizers
    )


def pgroup_case(ctx: NcgContext) -> Optional[Dict[str, Any]]:
    """
    Classify a non-abelian p-group by its central quotient.

    Returns:
        None when G is not a non-abelian p-group with |G/Z| in {p^2, p^3};
        otherwise a dict with the prime, the quotient order, the case
        ("i": p^2, "ii": p^3 without an abelian maximal subgroup,
        "iii": p^3 with one), the predicted clique number and whether
        omega_fast agrees

    Example:
        >>> pgroup_case(build_ncg(build_group("D:8")))["expected_omega"]
        5
    """
    group = ctx.group
    prime_power = _prime_power(group.order) if group.order > 1 else None
    if prime_power is None or group.is_abelian():
        return None
    p = prime_power[0]
    quotient = central_quotient_order(ctx)
    if quotient == p ** 2:
        case, expected = "i", p + 1
    elif quotient == p ** 3:
        if has_abelian_maximal_subgroup(ctx):
            case, expected = "iii", p ** 2 + 1
        else:
            case, expected = "ii", p ** 2 + p + 1
    else:
        return None
    omega = omega_fast(ctx)
    return {
        "prime": p,
        "central_quotient_order": quotient,
        "case": case,
        "expected_omega": expected,
        "holds": omega == expected,
    }
