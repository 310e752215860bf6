"""Mirror-image integer sequences used as colour weights."""

from __future__ import annotations

import enum

from .cluster import ColourCluster
from .errors import ChromaError


class SequenceKind(str, enum.Enum):
    S1_MIRROR_NATURALS = "s1"
    S2_MIRROR_FIBONACCI = "s2"


def fibonacci(n: int) -> int:
    if n < 0:
        raise ChromaError("fibonacci index must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def sequence_terms(kind: SequenceKind | str, ell: int) -> list[int]:
    kind = SequenceKind(kind)
    if ell < 1:
        raise ChromaError("ℓ must be at least 1")
    if kind is SequenceKind.S1_MIRROR_NATURALS:
        return [ell - (i - 1) for i in range(1, ell + 1)]
    return [fibonacci(ell - (i - 1)) for i in range(1, ell + 1)]


def sequence_cluster(kind: SequenceKind | str, ell: int) -> ColourCluster:
    """``s1`` gives ``[l, l-1, ..., 1]``; ``s2`` gives ``[f_l, ..., f_1]``."""
    return ColourCluster(tuple(sequence_terms(kind, ell)))
