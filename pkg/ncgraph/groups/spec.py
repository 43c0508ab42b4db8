"""
Group specification language.

Grammar (whitespace-insensitive, tags case-insensitive):

    spec := term ("x" term)*
    term := FAMILY ":" INTEGER
    FAMILY in {S, A, D, Q, C, H}

Products associate to the left. The canonical rendering uses uppercase
tags, no spaces and a lowercase "x" separator, e.g. "Q:16xC:3".
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

from ncgraph.errors import CapExceeded, ParameterError, ProductOfLazy, SpecSyntaxError
from ncgraph.groups.core import FiniteGroup, direct_product
from ncgraph.groups.families import get_families, get_family
from ncgraph.groups.lazy import LazyPermGroup

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 5000


@dataclass(frozen=True)
class SpecTerm:
    """One family term such as Q:16."""
    tag: str
    value: int

    def render(self) -> str:
        return f"{self.tag}:{self.value}"

    @property
    def order(self) -> int:
        return get_family(self.tag).order(self.value)


@dataclass(frozen=True)
class GroupSpec:
    """
    Parsed group specification: a left-associated direct product of terms.

    Attributes:
        terms: Family terms in source order
        source: The text the spec was parsed from
    """
    terms: Tuple[SpecTerm, ...]
    source: str = ""

    def render(self) -> str:
        return "x".join(term.render() for term in self.terms)

    @property
    def order(self) -> int:
        total = 1
        for term in self.terms:
            total *= term.order
        return total

    @property
    def is_single(self) -> bool:
        return len(self.terms) == 1


class _Scanner:
    """Character scanner that skips whitespace and reports positions."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, *expected: str) -> SpecSyntaxError:
        return SpecSyntaxError(self.text, self.pos, expected)


def parse_spec(text: str) -> GroupSpec:
    """
    Parse a group spec such as "Q:16 x C:3".

    Raises:
        SpecSyntaxError: With the failing position and the expected tokens
        ParameterError: When a parameter is outside its family's legal range

    Examples:
        >>> parse_spec("q:16 X c:3").render()
        'Q:16xC:3'
        >>> parse_spec("Q:16 x C:3").order
        48
    """
    families = get_families()
    tag_names = f"family tag ({', '.join(sorted(families))})"
    scanner = _Scanner(text)
    terms: List[SpecTerm] = []

    while True:
        char = scanner.peek()
        if not char or char.upper() not in families:
            raise scanner.fail(tag_names)
        tag = char.upper()
        scanner.pos += 1

        if scanner.peek() != ":":
            raise scanner.fail("':'")
        scanner.pos += 1

        scanner.peek()
        start = scanner.pos
        while scanner.pos < len(text) and text[scanner.pos].isdigit():
            scanner.pos += 1
        if scanner.pos == start:
            raise scanner.fail("integer")
        value = int(text[start:scanner.pos])

        ok, constraint = families[tag].validate_parameter(value)
        if not ok:
            raise ParameterError(tag, value, constraint)
        terms.append(SpecTerm(tag, value))

        char = scanner.peek()
        if not char:
            break
        if char not in ("x", "X"):
            raise scanner.fail("'x'", "end of input")
        scanner.pos += 1

    return GroupSpec(tuple(terms), source=text)


def render_spec(spec: GroupSpec) -> str:
    return spec.render()


def build(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> Union[FiniteGroup, LazyPermGroup]:
    """
    Construct the group a spec describes.

    A single S or A term whose order exceeds max_order yields a LazyPermGroup;
    everything else is materialized as a FiniteGroup.

    Args:
        spec: Parsed spec
        max_order: Materialization cap

    Raises:
        CapExceeded: If the materialized order would exceed max_order
        ProductOfLazy: If a product contains a factor only available lazily
    """
    oversized = [t for t in spec.terms if t.order > max_order]
    if spec.is_single and oversized:
        term = oversized[0]
        family = get_family(term.tag)
        if family.LAZY_CAPABLE:
            logger.info(f"{term.render()} has order {term.order} > cap {max_order}; using lazy view")
            return family.build_lazy(term.value)
        raise CapExceeded(term.order, max_order)

    if oversized and any(get_family(t.tag).LAZY_CAPABLE for t in oversized):
        lazy = next(t for t in oversized if get_family(t.tag).LAZY_CAPABLE)
        raise ProductOfLazy(
            f"{lazy.render()} exceeds the cap {max_order} and products require materialization"
        )
    if spec.order > max_order:
        raise CapExceeded(spec.order, max_order)

    group = None
    for term in spec.terms:
        family = get_family(term.tag)
        if family.is_abelian_instance(term.value):
            logger.info(f"{term.render()} is abelian")
        factor = family.build(term.value)
        group = factor if group is None else direct_product(group, factor)

    group.spec = spec.render()
    logger.debug(f"Built {group.spec} (order {group.order})")
    return group


def build_group(text: str, max_order: int = DEFAULT_MAX_ORDER) -> Union[FiniteGroup, LazyPermGroup]:
    """Parse and build in one step."""
    return build(parse_spec(text), max_order=max_order)
