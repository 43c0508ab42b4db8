"""
Cayley table import and export.

File format (JSON):
    {
        "order": 4,
        "table": [[...], ...],   # row i = left multiplication by element i
        "labels": ["e", "a", ...] # optional
    }

Imported tables are validated against the group laws before a FiniteGroup
is created. A table whose identity is not element 0 is re-indexed so that
it is; labels follow their elements.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np

from ncgraph.errors import TableValidationError
from ncgraph.groups.core import ASSOCIATIVITY_CHECK_LIMIT, FiniteGroup, find_law_violation

logger = logging.getLogger(__name__)


def _find_identity(table: np.ndarray) -> Optional[int]:
    index = np.arange(table.shape[0])
    for e in range(table.shape[0]):
        if np.array_equal(table[e], index) and np.array_equal(table[:, e], index):
            return e
    return None


def group_from_document(
    document: Dict[str, Any],
    spec: str = "imported",
    associativity_limit: int = ASSOCIATIVITY_CHECK_LIMIT,
) -> FiniteGroup:
    """
    Validate a Cayley table document and build a FiniteGroup from it.

    Args:
        document: Parsed JSON object with "order", "table" and optional "labels"
        spec: Spec text recorded on the resulting group
        associativity_limit: Largest order checked exhaustively for associativity

    Returns:
        FiniteGroup with the identity re-indexed to 0

    Raises:
        TableValidationError: naming the first violated law and the offending
            indices in the original numbering
    """
    if not isinstance(document, dict):
        raise TableValidationError("shape", detail="document must be a JSON object")
    order = document.get("order")
    rows = document.get("table")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise TableValidationError("shape", detail=f"order must be a positive integer, got {order!r}")
    if (
        not isinstance(rows, list)
        or len(rows) != order
        or any(not isinstance(row, list) or len(row) != order for row in rows)
    ):
        raise TableValidationError("shape", detail=f"table must be {order} rows of {order} integers")
    if any(not isinstance(v, int) or isinstance(v, bool) for row in rows for v in row):
        raise TableValidationError("shape", detail="table entries must be integers")

    labels = document.get("labels")
    if labels is not None and (
        not isinstance(labels, list) or len(labels) != order or not all(isinstance(s, str) for s in labels)
    ):
        raise TableValidationError("shape", detail=f"labels must be {order} strings")

    table = np.array(rows, dtype=np.int64)
    bad = np.argwhere((table < 0) | (table >= order))
    if len(bad):
        raise TableValidationError("range", bad[0].tolist())

    identity = _find_identity(table)
    if identity is None:
        raise TableValidationError("identity", detail="no two-sided identity element")

    # Original index of each new element: identity first, rest in original order
    old_of_new = np.array([identity] + [i for i in range(order) if i != identity], dtype=np.int64)
    new_of_old = np.empty(order, dtype=np.int64)
    new_of_old[old_of_new] = np.arange(order)
    if identity != 0:
        logger.info(f"Re-indexing imported table: identity was element {identity}")
    reindexed = new_of_old[table[np.ix_(old_of_new, old_of_new)]]

    violation, warnings = find_law_violation(reindexed, associativity_limit)
    if violation is not None:
        original = [int(old_of_new[i]) for i in violation.indices]
        raise TableValidationError(violation.law, original)

    if labels is None:
        labels = [str(i) for i in range(order)]
    new_labels = [labels[i] for i in old_of_new]
    return FiniteGroup(reindexed, labels=new_labels, spec=spec, warnings=warnings)


def load_cayley_table(
    path: Union[str, Path],
    associativity_limit: int = ASSOCIATIVITY_CHECK_LIMIT,
) -> FiniteGroup:
    """
    Read and validate a Cayley table file.

    The resulting group's spec is "imported:<path>".
    """
    path = Path(path)
    try:
        document = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise TableValidationError("shape", detail=f"invalid JSON: {e}") from e
    group = group_from_document(document, spec=f"imported:{path}", associativity_limit=associativity_limit)
    logger.info(f"Imported group of order {group.order} from {path}")
    return group


def dump_cayley_table(group: FiniteGroup) -> str:
    return json.dumps(group.to_cayley_dict())


def write_cayley_table(group: FiniteGroup, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_cayley_table(group) + "\n")
    logger.info(f"Wrote Cayley table of {group.spec} to {path}")
