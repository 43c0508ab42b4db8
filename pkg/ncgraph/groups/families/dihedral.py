"""
Dihedral groups D_2n = <a, b | a^2 = b^n = 1, ab = b^-1 a>.

The parameter is n, so D:n has 2n elements. Element (i, e) stands for
b^i a^e and has index i + n*e. Multiplication:

    (i, 0)(j, e) = (i + j, e)
    (i, 1)(j, e) = (i - j, 1 - e)
"""
import logging
from typing import List

import numpy as np

from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.families.base import GroupFamily, power_label

logger = logging.getLogger(__name__)


class DihedralFamily(GroupFamily):
    """D:n, dihedral group with 2n elements."""

    TAG = "D"
    DISPLAY_NAME = "Dihedral"
    CONSTRAINT = "n >= 1 (group order 2n)"
    DESCRIPTION = "D:n is the dihedral group of order 2n, <a,b | a^2=b^n=1, ab=b^-1 a>"

    @classmethod
    def order(cls, value: int) -> int:
        return 2 * value

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        n = value
        k = np.arange(2 * n)
        rot, ref = k % n, k // n
        i1, e1 = rot[:, None], ref[:, None]
        i2, e2 = rot[None, :], ref[None, :]
        new_rot = np.where(e1 == 0, i1 + i2, i1 - i2) % n
        new_ref = np.where(e1 == 0, e2, 1 - e2)
        table = new_rot + n * new_ref
        labels = [
            (power_label("b", i) + ("a" if e else "")) or "1"
            for e in (0, 1)
            for i in range(n)
        ]
        return FiniteGroup(table, labels=labels, spec=f"D:{n}")

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        n = value
        b, a = 1 % n, n
        failed = []
        if group.order != 2 * n:
            return [f"|D| = {2 * n}"]
        if group.power(a, 2) != 0 or a == 0:
            failed.append("a^2 = 1")
        if group.element_order(b) != n:
            failed.append("b^n = 1")
        if group.multiply(a, b) != group.multiply(group.inverse(b), a):
            failed.append("ab = b^-1 a")
        return failed

    @classmethod
    def is_abelian_instance(cls, value: int) -> bool:
        return value <= 2
