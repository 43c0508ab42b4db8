"""
Base class for all group family constructors.

Each family lives in its own file in this directory and is discovered
automatically. A family only needs to describe its parameter, build the
Cayley table from its multiplication law, and check the result against its
defining presentation.

Example Family Template:

    from ncgraph.groups.core import FiniteGroup
    from ncgraph.groups.families.base import GroupFamily

    class ExampleFamily(GroupFamily):
        '''Cyclic-like toy family.'''

        TAG = "E"
        DISPLAY_NAME = "Example"
        CONSTRAINT = "parameter >= 1"
        DESCRIPTION = "E:n is ..."

        @classmethod
        def validate_parameter(cls, value: int) -> tuple[bool, str]:
            if value < 1:
                return (False, cls.CONSTRAINT)
            return (True, "")

        @classmethod
        def order(cls, value: int) -> int:
            return value

        @classmethod
        def build(cls, value: int) -> FiniteGroup:
            ...

        @classmethod
        def check_presentation(cls, group: FiniteGroup, value: int) -> list[str]:
            return []
"""
from abc import ABC, abstractmethod
from typing import List, Tuple

from ncgraph.errors import ProductOfLazy
from ncgraph.groups.core import FiniteGroup
from ncgraph.groups.lazy import LazyPermGroup


def power_label(symbol: str, exponent: int) -> str:
    """Render symbol^exponent the way presentations are written ("", "x", "x^3")."""
    if exponent == 0:
        return ""
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


class GroupFamily(ABC):
    """
    Abstract base class for a parameterised family of finite groups.

    Families inherit this class and implement order(), build() and
    check_presentation(). Parameters are always a single integer.
    """

    # Family metadata (must be overridden by subclass)
    TAG: str = ""           # Single-letter tag used in the spec grammar
    DISPLAY_NAME: str = ""  # Used in CLI help and catalog output
    CONSTRAINT: str = ""    # Human-readable parameter constraint
    DESCRIPTION: str = ""   # What the parameter means

    # Families whose large instances can fall back to a lazy view
    LAZY_CAPABLE = False

    @classmethod
    def validate_parameter(cls, value: int) -> Tuple[bool, str]:
        """
        Validate a family parameter.

        Return (True, "") if legal, (False, "constraint description") if not.
        """
        if value < 1:
            return (False, cls.CONSTRAINT)
        return (True, "")

    @classmethod
    @abstractmethod
    def order(cls, value: int) -> int:
        """Group order for a legal parameter, computed without building anything."""
        pass

    @classmethod
    @abstractmethod
    def build(cls, value: int) -> FiniteGroup:
        """Materialize the Cayley table for a legal parameter."""
        pass

    @classmethod
    @abstractmethod
    def check_presentation(cls, group: FiniteGroup, value: int) -> List[str]:
        """
        Verify a built group against the family's defining relations.

        Returns:
            List of violated relation names (empty when the group is valid)
        """
        pass

    @classmethod
    def is_abelian_instance(cls, value: int) -> bool:
        """True for degenerate parameters that give abelian groups (flagged, not rejected)."""
        return False

    @classmethod
    def build_lazy(cls, value: int) -> LazyPermGroup:
        raise ProductOfLazy(f"{cls.TAG}:{value} has no lazy view")
