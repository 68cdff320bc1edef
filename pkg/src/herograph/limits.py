"""Input-size ceilings for the subset-search operations.

Every exhaustive search declares a ceiling here and raises GuardExceeded
instead of running unbounded.  Each value can be overridden through an
environment variable named HEROGRAPH_<KEY>.
"""

from __future__ import annotations

import os

DEFAULTS = {
    # branch-and-bound exact solvers (vertex count)
    "EXACT_VERTICES": 40,
    # feedback-arc-set subset search (arc count; 2^arcs subsets)
    "FAS_ARCS": 22,
    # canonical-form refinement fallback (vertex count)
    "CANONICAL_VERTICES": 11,
    # cluster subset search (host vertex count)
    "CLUSTER_VERTICES": 14,
    # jewel-chain search (host vertex count)
    "JEWEL_VERTICES": 16,
}


def limit(key: str) -> int:
    """Ceiling for ``key``, honoring a HEROGRAPH_<KEY> env override."""
    raw = os.environ.get("HEROGRAPH_" + key)
    if raw is None:
        return DEFAULTS[key]
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"HEROGRAPH_{key} must be an integer, got {raw!r}") from exc
