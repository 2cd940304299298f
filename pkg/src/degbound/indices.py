"""The seven vertex-degree-based topological indices.

Each index is a sum over edges of a fixed symmetric function of the endpoint
degrees, so everything here evaluates through the edge-degree partition.
"""

from __future__ import annotations

import enum
import math

from .graphs import Graph, edge_degree_partition


class IndexId(enum.Enum):
    R = "R"
    H = "H"
    ABC = "ABC"
    X = "X"
    GA = "GA"
    AZI = "AZI"
    M2STAR = "M2*"

    def __str__(self):
        return self.value


ALL_INDICES = (
    IndexId.R,
    IndexId.H,
    IndexId.ABC,
    IndexId.X,
    IndexId.GA,
    IndexId.AZI,
    IndexId.M2STAR,
)


class UndefinedIndexError(ValueError):
    """Raised when an index is evaluated outside its domain."""


def edge_term(idx: IndexId, pair: tuple[int, int]) -> float:
    """Per-edge contribution of index ``idx`` at endpoint degrees ``pair``."""
    a, b = pair
    if a > b:
        a, b = b, a
    if a < 1:
        raise ValueError(f"degrees must be >= 1, got {pair}")
    if idx is IndexId.R:
        return 1.0 / math.sqrt(a * b)
    if idx is IndexId.H:
        return 2.0 / (a + b)
    if idx is IndexId.ABC:
        return math.sqrt((a + b - 2) / (a * b))
    if idx is IndexId.X:
        return 1.0 / math.sqrt(a + b)
    if idx is IndexId.GA:
        return math.sqrt(a * b) / (0.5 * (a + b))
    if idx is IndexId.AZI:
        if a == 1 and b == 1:
            raise UndefinedIndexError(
                "AZI undefined on an isolated-edge component (degree pair (1,1))"
            )
        return ((a * b) / (a + b - 2)) ** 3
    if idx is IndexId.M2STAR:
        return 1.0 / (a * b)
    raise ValueError(f"unknown index {idx!r}")


def azi_defined(g: Graph) -> bool:
    """AZI is defined unless some edge has both endpoints of degree 1."""
    return (1, 1) not in edge_degree_partition(g)


def index_value(idx: IndexId, g: Graph) -> float:
    """Evaluate index ``idx`` on ``g``.

    Accumulates per partition entry in sorted degree-pair order, so the result
    is bit-identical for isomorphic graphs.
    """
    part = edge_degree_partition(g)
    total = 0.0
    for pair in sorted(part):
        total += part[pair] * edge_term(idx, pair)
    return total


def all_indices(g: Graph) -> dict[IndexId, float | None]:
    """All seven index values in one pass over the partition.

    AZI maps to ``None`` when its domain restriction fails instead of raising.
    """
    part = edge_degree_partition(g)
    pairs = sorted(part)
    out: dict[IndexId, float | None] = {}
    for idx in ALL_INDICES:
        if idx is IndexId.AZI and (1, 1) in part:
            out[idx] = None
            continue
        out[idx] = sum(part[p] * edge_term(idx, p) for p in pairs)
    return out
