"""
Simplicial complexes and the matroid criterion for graphs.

- complex.py - SimplicialComplex, from_graph, is_trim, has_exchange_property
- graphs.py - is_matroid_graph, cross_validate_matroid, extend_clique
"""

from .complex import (
    SimplicialComplex,
    from_graph,
    is_trim,
    has_exchange_property,
    uniform_complex,
)
from .graphs import (
    CROSS_VALIDATE_LIMIT,
    is_matroid_graph,
    cross_validate_matroid,
    extend_clique,
)

__all__ = [
    "SimplicialComplex",
    "from_graph",
    "is_trim",
    "has_exchange_property",
    "uniform_complex",
    "CROSS_VALIDATE_LIMIT",
    "is_matroid_graph",
    "cross_validate_matroid",
    "extend_clique",
]
