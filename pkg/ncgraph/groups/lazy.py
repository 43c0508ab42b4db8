"""
Lazy permutation groups.

S_n and A_n quickly outgrow any Cayley table, but witness checks only need
arithmetic on a handful of elements. A LazyPermGroup validates and composes
permutations given as image arrays without ever enumerating the group.

Permutations act on the points 1..n; the image array p has p[i-1] = image
of point i. Composition p*q means "apply q, then p".
"""
import logging
import random
import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence, Tuple

from ncgraph.errors import MalformedPermutation, ParityViolation

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]

SYMMETRIC = "symmetric"
ALTERNATING = "alternating"

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


def parity(perm: Sequence[int]) -> int:
    """Return 0 for even permutations, 1 for odd ones (via cycle lengths)."""
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        point = start
        while not seen[point]:
            seen[point] = True
            point = perm[point] - 1
            length += 1
        transpositions += length - 1
    return transpositions % 2


def cycle_label(perm: Sequence[int]) -> str:
    """
    Render a permutation in cycle notation, fixed points omitted.

    Examples:
        >>> cycle_label((2, 1, 4, 3))
        '(1 2)(3 4)'
        >>> cycle_label((1, 2, 3))
        '()'
    """
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start + 1:
            seen[start] = True
            continue
        cycle = []
        point = start
        while not seen[point]:
            seen[point] = True
            cycle.append(point + 1)
            point = perm[point] - 1
        cycles.append("(" + " ".join(str(c) for c in cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True)
class LazyPermGroup:
    """
    S_n or A_n as an arithmetic view with no element enumeration.

    Attributes:
        degree: Number of points n (acting on 1..n)
        kind: "symmetric" or "alternating"
    """
    degree: int
    kind: str = SYMMETRIC

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if self.kind not in (SYMMETRIC, ALTERNATING):
            raise ValueError(f"kind must be {SYMMETRIC!r} or {ALTERNATING!r}, got {self.kind!r}")

    @property
    def spec(self) -> str:
        return f"{'S' if self.kind == SYMMETRIC else 'A'}:{self.degree}"

    @property
    def order(self) -> int:
        total = 1
        for k in range(2, self.degree + 1):
            total *= k
        if self.kind == ALTERNATING and self.degree > 1:
            total //= 2
        return total

    def identity(self) -> Permutation:
        return tuple(range(1, self.degree + 1))

    def element(self, images: Sequence[int]) -> Permutation:
        """
        Validate an image array and return it as a tuple.

        Raises:
            MalformedPermutation: If images is not a bijection on 1..degree
            ParityViolation: If the group is alternating and images is odd
        """
        perm = tuple(int(i) for i in images)
        if len(perm) != self.degree or sorted(perm) != list(range(1, self.degree + 1)):
            raise MalformedPermutation(
                f"{list(images)} is not a bijection on 1..{self.degree}"
            )
        if self.kind == ALTERNATING and parity(perm):
            raise ParityViolation(f"{cycle_label(perm)} is odd and not in {self.spec}")
        return perm

    def from_cycles(self, text: str) -> Permutation:
        """
        Parse cycle notation such as "(1 2)(3 4)" or "(1,2)(3,4)".

        Cycles are composed right to left, matching the composition rule.
        """
        result = list(self.identity())
        for body in reversed(_CYCLE_PATTERN.findall(text)):
            points = [int(p) for p in re.split(r"[\s,]+", body.strip()) if p]
            if any(not 1 <= p <= self.degree for p in points) or len(set(points)) != len(points):
                raise MalformedPermutation(f"bad cycle ({body}) for degree {self.degree}")
            cycle = list(range(1, self.degree + 1))
            for a, b in zip(points, points[1:] + points[:1]):
                cycle[a - 1] = b
            result = [cycle[result[i] - 1] for i in range(self.degree)]
        return self.element(result)

    def compose(self, p: Sequence[int], q: Sequence[int]) -> Permutation:
        """Return p*q: apply q first, then p."""
        p = self.element(p)
        q = self.element(q)
        return tuple(p[q[i] - 1] for i in range(self.degree))

    def inverse(self, p: Sequence[int]) -> Permutation:
        p = self.element(p)
        inv = [0] * self.degree
        for i, image in enumerate(p):
            inv[image - 1] = i + 1
        return tuple(inv)

    def perm_commutes(self, p: Sequence[int], q: Sequence[int]) -> bool:
        """True iff p*q = q*p as image arrays."""
        return self.compose(p, q) == self.compose(q, p)

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniformly random element; odd draws are fixed up by one transposition."""
        images = list(range(1, self.degree + 1))
        rng.shuffle(images)
        if self.kind == ALTERNATING and self.degree > 1 and parity(images):
            images[0], images[1] = images[1], images[0]
        return self.element(images)

    def label(self, p: Sequence[int]) -> str:
        return cycle_label(p)


def enumerate_permutations(degree: int, kind: str = SYMMETRIC) -> Iterator[Permutation]:
    """Yield all elements of S_n or A_n in lexicographic order (identity first)."""
    for perm in permutations(range(1, degree + 1)):
        if kind == ALTERNATING and parity(perm):
            continue
        yield perm
