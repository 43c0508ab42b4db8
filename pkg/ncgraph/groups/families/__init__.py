"""
Group family registry for ncgraph.

Provides automatic discovery of group family constructors. Families are
Python files in this directory that define classes inheriting from
GroupFamily; each one contributes a single-letter tag to the spec grammar.
"""

import importlib
import inspect
import logging
from pathlib import Path
from typing import Dict, List, Tuple, Type

from .base import GroupFamily

logger = logging.getLogger(__name__)

# Catalog order: the order families are listed in CLI help and sweeps
CATALOG_ORDER = ["S", "A", "D", "Q", "C", "H"]


def discover_available_families() -> Dict[str, Type[GroupFamily]]:
    """
    Scan the families/ directory and return all GroupFamily subclasses by tag.

    Returns:
        Dict of {tag: GroupFamily class}
    """
    families: Dict[str, Type[GroupFamily]] = {}

    families_dir = Path(__file__).parent

    for file_path in sorted(families_dir.glob("*.py")):
        # Skip __init__.py, base.py, and private files (starting with _)
        if file_path.name in ("__init__.py", "base.py") or file_path.name.startswith("_"):
            continue

        try:
            module = importlib.import_module(f"{__name__}.{file_path.stem}")
        except Exception as e:
            logger.error(f"Failed to import family from {file_path.name}: {e}", exc_info=True)
            continue

        for name, obj in inspect.getmembers(module, inspect.isclass):
            if not issubclass(obj, GroupFamily) or obj is GroupFamily or inspect.isabstract(obj):
                continue
            if not obj.TAG:
                logger.warning(f"Family {name} in {file_path.name} has no TAG, skipping")
                continue
            if obj.TAG in families and families[obj.TAG] is not obj:
                logger.warning(
                    f"Family tag {obj.TAG} defined twice "
                    f"({families[obj.TAG].__name__} and {name}), keeping the first"
                )
                continue
            families[obj.TAG] = obj
            logger.debug(f"Discovered family: {obj.DISPLAY_NAME} (tag {obj.TAG})")

    logger.debug(f"Discovered {len(families)} group famil{'y' if len(families) == 1 else 'ies'}")
    return families


# Family discovery cache (populated on first use)
_discovered_families: Dict[str, Type[GroupFamily]] = {}


def get_families() -> Dict[str, Type[GroupFamily]]:
    """
    Get the discovered families keyed by tag.

    Families are discovered once on first call and cached.
    """
    global _discovered_families

    if not _discovered_families:
        _discovered_families = discover_available_families()

    return _discovered_families


def get_family(tag: str) -> Type[GroupFamily]:
    """Look up a family by (case-insensitive) tag; raises KeyError if unknown."""
    return get_families()[tag.upper()]


def family_catalog() -> List[Tuple[str, str, str]]:
    """
    Return static family metadata as (tag, constraints, description).

    Drives CLI help and batch sweeps.

    Example:
        >>> [tag for tag, _, _ in family_catalog()]
        ['S', 'A', 'D', 'Q', 'C', 'H']
    """
    families = get_families()
    tags = [t for t in CATALOG_ORDER if t in families]
    tags += sorted(t for t in families if t not in CATALOG_ORDER)
    return [(t, families[t].CONSTRAINT, families[t].DESCRIPTION) for t in tags]


__all__ = [
    "GroupFamily",
    "discover_available_families",
    "get_families",
    "get_family",
    "family_catalog",
]
