"""
Simple graphs, exact clique search and graph export.

- core.py - SimpleGraph with packed-bit rows (complement, components, cliques, degrees)
- clique.py - branch-and-bound clique number, independence number, exhaustive oracle
- export.py - DOT (Jinja2 template), edge-list CSV and JSON graph output
"""

from .core import (
    SimpleGraph,
    iter_bits,
    mask_of,
)
from .clique import (
    DEFAULT_NODE_BUDGET,
    ORACLE_LIMIT,
    clique_number,
    independence_number,
    oracle_clique_number,
)
from .export import (
    to_dot,
    to_csv,
    to_json,
    write_graph,
)

__all__ = [
    "SimpleGraph",
    "iter_bits",
    "mask_of",
    "DEFAULT_NODE_BUDGET",
    "ORACLE_LIMIT",
    "clique_number",
    "independence_number",
    "oracle_clique_number",
    "to_dot",
    "to_csv",
    "to_json",
    "write_graph",
]
