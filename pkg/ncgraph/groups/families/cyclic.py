"""
Cyclic groups C_m: the integers mod m under addition.

Elements are x^k for 0 <= k < m, index k.
"""
import logging
from typing import List

import numpy as np

from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.families.base import GroupFamily, power_label

logger = logging.getLogger(__name__)


class CyclicFamily(GroupFamily):
    """C:m, cyclic group of order m."""

    TAG = "C"
    DISPLAY_NAME = "Cyclic"
    CONSTRAINT = "order >= 1"
    DESCRIPTION = "C:m is the cyclic group of order m (integers mod m)"

    @classmethod
    def order(cls, value: int) -> int:
        return value

    @classmethod
    def build(cls, value: int) -> FiniteGroup:
        k = np.arange(value)
        table = (k[:, None] + k[None, :]) % value
        labels = [power_label("x", i) or "1" for i in range(value)]
        return FiniteGroup(table, labels=labels, spec=f"C:{value}")

    @classmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        failed = []
        if group.order != value:
            failed.append(f"|C| = {value}")
        elif value > 1 and group.element_order(1) != value:
            failed.append(f"x has order {value}")
        return failed

    @classmethod
    def is_abelian_instance(cls, value: int) -> bool:
        return True
