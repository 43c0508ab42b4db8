"""
Generalized quaternion groups Q_4n = <x, y | x^2n = 1, y^2 = x^n, y^-1 x y = x^-1>.

The parameter is the group order m = 4n (m divisible by 4, m >= 8).
Element (i, e) stands for x^i y^e with i mod 2n and has index i + 2n*e.

    (i, 0)(j, e) = (i + j, e)
    (i, 1)(j, 0) = (i - j, 1)
    (i, 1)(j, 1) = (i - j + n, 0)
"""
import logging
from typing import List, Tuple

import numpy as np

from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.families.base import GroupFamily, power_label

logger = logging.getLogger(__name__)


class QuaternionFamily(GroupFamily):
    """Q:m, generalized quaternion group of order m."""

    TAG = "Q"
    DISPLAY_NAME = "Generalized quaternion"
    CONSTRAINT = "order ≡ 0 mod 4, ≥ 8"
    DESCRIPTION = "Q:m is the generalized quaternion group of order m, <x,y | x^2n=1, y^2=x^n, y^-1xy=x^-1>, m=4n"

    @classmethod
    def validate_parameter(cls, value: int) -> Tuple[bool, str]:
        if value < 8 or value % 4 != 0:
            return (False, cls.CONSTRAINT)
        return (True, "")

    @classmethod
    def order(cls, value: int) -> int:
        return value

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        n = value // 4
        half = 2 * n
        k = np.arange(value)
        rot, ref = k % half, k // half
        i1, e1 = rot[:, None], ref[:, None]
        i2, e2 = rot[None, :], ref[None, :]
        new_rot = np.where(e1 == 0, i1 + i2, i1 - i2 + n * e2) % half
        new_ref = np.where(e1 == 0, e2, 1 - e2)
        table = new_rot + half * new_ref
        labels = [
            (power_label("x", i) + ("y" if e else "")) or "1"
            for e in (0, 1)
            for i in range(half)
        ]
        return FiniteGroup(table, labels=labels, spec=f"Q:{value}")

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        n = value // 4
        x, y = 1, 2 * n
        if group.order != value:
            return [f"|Q| = {value}"]
        failed = []
        if group.element_order(x) != 2 * n:
            failed.append("x^2n = 1")
        if group.power(y, 2) != group.power(x, n):
            failed.append("y^2 = x^n")
        conjugate = group.multiply(group.multiply(group.inverse(y), x), y)
        if conjugate != group.inverse(x):
            failed.append("y^-1 x y = x^-1")
        return failed
