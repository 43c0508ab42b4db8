"""
Heisenberg groups H(p) of order p^3 (unitriangular 3x3 matrices mod p).

Element (a, b, c) has index a + p*b + p^2*c and multiplies as

    (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a*b')

The center is {(0, 0, c)}, of order p, so the central quotient has order p^2.
"""
import logging
from typing import List, Tuple

import numpy as np
from sympy import isprime

from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.families.base import GroupFamily

logger = logging.getLogger(__name__)


class HeisenbergFamily(GroupFamily):
    """H:p, Heisenberg group mod p."""

    TAG = "H"
    DISPLAY_NAME = "Heisenberg"
    CONSTRAINT = "parameter prime"
    DESCRIPTION = "H:p is the Heisenberg group of order p^3 over Z/p (central quotient of order p^2)"

    @classmethod
    def validate_parameter(cls, value: int) -> Tuple[bool, str]:
        if not isprime(value):
            return (False, cls.CONSTRAINT)
        return (True, "")

    @classmethod
    def order(cls, value: int) -> int:
        return value ** 3

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        p = value
        k = np.arange(p ** 3)
        a, b, c = k % p, (k // p) % p, k // (p * p)
        new_a = (a[:, None] + a[None, :]) % p
        new_b = (b[:, None] + b[None, :]) % p
        new_c = (c[:, None] + c[None, :] + a[:, None] * b[None, :]) % p
        table = new_a + p * new_b + p * p * new_c
        labels = [f"[{i % p},{(i // p) % p},{i // (p * p)}]" for i in range(p ** 3)]
        return FiniteGroup(table, labels=labels, spec=f"H:{p}")

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        p = value
        if group.order != p ** 3:
            return [f"|H| = {p ** 3}"]
        x, y, z = 1, p, p * p
        failed = []
        if group.element_order(x) != p or group.element_order(y) != p:
            failed.append("x^p = y^p = 1")
        if group.commutator(x, y) != z:
            failed.append("[x,y] = z")
        if z not in group.center() or group.element_order(z) != p:
            failed.append("z central of order p")
        return failed
