"""
Exception hierarchy for ncgraph.

Every error raised by the library derives from NcgraphError so the CLI can
map the whole family to exit code 2 with a single except clause. Errors carry
the offending values as attributes in addition to their message.
"""
from typing import Any, Optional, Sequence, Tuple


class NcgraphError(Exception):
    """Base class for all ncgraph errors."""
    pass


class ConfigError(NcgraphError):
    """Raised when a configuration value is missing or out of range."""
    pass


# =============================================================================
# Group engine
# =============================================================================

class OutOfRange(NcgraphError):
    """Raised when an element or vertex index is outside its valid range."""

    def __init__(self, index: Any, bound: int, what: str = "element"):
        self.index = index
        self.bound = bound
        super().__init__(f"{what} index {index} out of range (must be < {bound})")


class MalformedPermutation(NcgraphError):
    """Raised when an image array is not a bijection on 1..n."""
    pass


class ParityViolation(NcgraphError):
    """Raised when an odd permutation is offered to an alternating group."""
    pass


class TableValidationError(NcgraphError):
    """
    Raised when an imported Cayley table violates a group law.

    Attributes:
        law: Name of the first violated law (shape, range, identity,
            latin-row, latin-column, inverse, associativity)
        indices: Offending element indices (original table numbering)
    """

    def __init__(self, law: str, indices: Sequence[int] = (), detail: str = ""):
        self.law = law
        self.indices = tuple(int(i) for i in indices)
        message = f"table violates {law}"
        if self.indices:
            message += f" at {self.indices}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


# =============================================================================
# Families and the spec grammar
# =============================================================================

class SpecSyntaxError(NcgraphError):
    """Raised when a group spec does not match the grammar."""

    def __init__(self, text: str, position: int, expected: Sequence[str]):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        super().__init__(
            f"syntax error in {text!r} at position {position}: "
            f"expected {' or '.join(self.expected)}"
        )


class ParameterError(NcgraphError):
    """Raised when a family parameter is outside its legal range."""

    def __init__(self, tag: str, value: int, constraint: str):
        self.tag = tag
        self.value = value
        self.constraint = constraint
        super().__init__(f"{tag}:{value} is not a legal parameter ({constraint})")


class CapExceeded(NcgraphError):
    """Raised when a group would exceed the materialization cap."""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds the materialization cap {cap}")


class ProductOfLazy(NcgraphError):
    """Raised when a direct product contains a factor that is only available lazily."""
    pass


class SpecMismatch(NcgraphError):
    """Raised when a group's spec does not have the shape an operation requires."""
    pass


# =============================================================================
# Graphs and complexes
# =============================================================================

class CliqueSearchTimeout(NcgraphError):
    """Raised when branch-and-bound exhausts its node budget."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(
            f"clique search exceeded its node budget of {nodes} nodes; "
            f"use the centralizer fast path for AC-groups"
        )


class TooLarge(NcgraphError):
    """Raised when an exhaustive procedure is asked to handle too many vertices."""

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{size} vertices exceeds the exhaustive limit of {limit}")


class ComplexError(NcgraphError):
    """Raised when a face collection is not a simplicial complex."""
    pass


class NotAClique(NcgraphError):
    """Raised when a seed vertex set is not a clique."""
    pass


class NotAMatroid(NcgraphError):
    """Raised when a graph operation requires the matroid property."""
    pass


class InconsistentVerdict(NcgraphError):
    """
    Raised when two independent procedures disagree on a verdict that the
    underlying theory forces to be equal. Always indicates a bug.
    """
    pass


# =============================================================================
# Non-commuting graph analysis
# =============================================================================

class NotAcGroup(NcgraphError):
    """Raised when an operation requires an AC-group."""

    def __init__(self, witness: Optional[Tuple[int, int, int]] = None):
        self.witness = witness
        message = "group is not an AC-group"
        if witness is not None:
            message += f" (C_G({witness[0]}) contains non-commuting {witness[1]}, {witness[2]})"
        super().__init__(message)


class AbelianGroup(NcgraphError):
    """Raised when an operation requires a non-abelian group."""
    pass


class NotMaximal(NcgraphError):
    """Raised when a set is not a maximal pairwise non-commuting set."""
    pass


class BadInput(NcgraphError):
    """Raised when arguments violate an operation's preconditions."""
    pass
