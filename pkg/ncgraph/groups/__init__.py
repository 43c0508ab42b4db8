"""
Finite group engine and group family constructors.

- core.py - FiniteGroup (Cayley tables), ElementSet, direct products, law checks
- lazy.py - LazyPermGroup for S_n / A_n beyond the materialization cap
- cayley_io.py - JSON Cayley table import and export
- spec.py - group spec grammar, parsing and building
- families/ - one constructor plugin per family (S, A, D, Q, C, H)
"""

from .core import (
    ElementSet,
    FiniteGroup,
    direct_product,
    find_law_violation,
    verify_group_laws,
)
from .lazy import (
    ALTERNATING,
    SYMMETRIC,
    LazyPermGroup,
    enumerate_permutations,
    cycle_label,
    parity,
)
from .cayley_io import (
    group_from_document,
    load_cayley_table,
    dump_cayley_table,
    write_cayley_table,
)
from .spec import (
    DEFAULT_MAX_ORDER,
    GroupSpec,
    SpecTerm,
    parse_spec,
    render_spec,
    build,
    build_group,
)
from .families import (
    family_catalog,
    get_families,
    get_family,
)

__all__ = [
    "ElementSet",
    "FiniteGroup",
    "direct_product",
    "find_law_violation",
    "verify_group_laws",
    "ALTERNATING",
    "SYMMETRIC",
    "LazyPermGroup",
    "enumerate_permutations",
    "cycle_label",
    "parity",
    "group_from_document",
    "load_cayley_table",
    "dump_cayley_table",
    "write_cayley_table",
    "DEFAULT_MAX_ORDER",
    "GroupSpec",
    "SpecTerm",
    "parse_spec",
    "render_spec",
    "build",
    "build_group",
    "family_catalog",
    "get_families",
    "get_family",
]
