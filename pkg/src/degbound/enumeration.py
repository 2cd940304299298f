"""Isomorphism-reduced streams of connected graphs of a given order.

Generation iterates every edge subset of the complete graph as a bitmask,
keeps the connected ones, and deduplicates by an exact canonical form (the
lexicographically minimal graph6 encoding over all vertex relabelings).  A
vectorized prefilter keeps only masks whose labeled degree vector is
non-decreasing; every isomorphism class has such a labeling, so no class is
lost and the canonical dedup is unaffected.

Orders up to 7 run in seconds.  Order 8 iterates 2**28 masks and is gated
behind an explicit opt-in.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from .graphs import (
    Graph,
    GraphError,
    SizeLimitError,
    is_molecular,
    is_regular,
    min_degree,
    parse_graph6,
    to_graph6,
)

DEFAULT_ORDER_CAP = 7
MAX_ORDER = 8
CANONICAL_CAP = 10


def _canonical_columns(adj: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Minimal upper-triangle column sequence over all vertex orderings.

    Branch and bound on the ordering prefix: a partial column sequence that
    already exceeds the incumbent's prefix cannot lead to the minimum.
    Vertices with identical adjacency rows are interchangeable, so only one
    of each is branched on.
    """
    best: list[int] | None = None

    def search(order: list[int], cols: list[int], placed: int) -> None:
        nonlocal best
        k = len(order)
        if best is not None:
            prefix = best[:k]
            if cols > prefix:
                return
        if k == n:
            if best is None or cols < best:
                best = list(cols)
            return
        by_col: dict[int, list[int]] = {}
        for v in range(n):
            if placed >> v & 1:
                continue
            col = 0
            av = adj[v]
            for i, u in enumerate(order):
                if av >> u & 1:
                    col |= 1 << (k - 1 - i)
            by_col.setdefault(col, []).append(v)
        for col in sorted(by_col):
            if best is not None and cols == best[:k] and col > best[k]:
                break
            seen_rows = set()
            for v in by_col[col]:
                if adj[v] in seen_rows:
                    continue
                seen_rows.add(adj[v])
                order.append(v)
                cols.append(col)
                search(order, cols, placed | 1 << v)
                order.pop()
                cols.pop()

    search([], [], 0)
    assert best is not None
    return tuple(best)


def _columns_to_graph(cols: tuple[int, ...], n: int) -> Graph:
    edges = []
    for v in range(1, n):
        col = cols[v]
        for u in range(v):
            if col >> (v - 1 - u) & 1:
                edges.append((u, v))
    return Graph(n, edges)


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    if g.n > CANONICAL_CAP:
        raise SizeLimitError(
            f"canonical form capped at n <= {CANONICAL_CAP}, got {g.n}"
        )
    return _columns_to_graph(_canonical_columns(g.adj, g.n), g.n)


def canonical_form(g: Graph) -> str:
    """Lexicographically minimal graph6 encoding over all relabelings.

    Two graphs have equal canonical form iff they are isomorphic.
    """
    return to_graph6(canonical_graph(g))


@dataclass(frozen=True)
class EnumerationSpec:
    """Population request: order plus degree-based filters."""

    n: int
    delta_min: int | None = None
    molecular: bool = False
    regular_only: bool = False

    def admits(self, g: Graph) -> bool:
        if self.delta_min is not None and min_degree(g) < self.delta_min:
            return False
        if self.molecular and not is_molecular(g):
            return False
        if self.regular_only and not is_regular(g):
            return False
        return True

    def describe(self) -> str:
        parts = [f"n={self.n}"]
        if self.delta_min is not None:
            parts.append(f"delta_min={self.delta_min}")
        if self.molecular:
            parts.append("molecular")
        if self.regular_only:
            parts.append("regular_only")
        return "enumerate(" + ", ".join(parts) + ")"


def _ascending_degree_masks(n: int, delta_floor: int, degree_cap: int | None):
    """All edge-subset bitmasks whose labeled degree vector is non-decreasing,
    with every degree in [delta_floor, degree_cap]."""
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    inc = np.zeros(n, dtype=np.uint64)
    for i, (u, v) in enumerate(pairs):
        inc[u] |= np.uint64(1 << i)
        inc[v] |= np.uint64(1 << i)
    keep_chunks = []
    chunk = 1 << 22
    total = 1 << nbits
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.uint64)
        degs = np.empty((n, stop - start), dtype=np.uint8)
        for v in range(n):
            degs[v] = np.bitwise_count(masks & inc[v]).astype(np.uint8)
        keep = degs[0] >= delta_floor
        if degree_cap is not None:
            keep &= degs[n - 1] <= degree_cap
        for v in range(n - 1):
            keep &= degs[v] <= degs[v + 1]
        keep_chunks.append(masks[keep])
    return np.concatenate(keep_chunks), pairs


def _mask_adjacency(mask: int, pairs, n: int) -> list[int]:
    adj = [0] * n
    while mask:
        low = mask & -mask
        u, v = pairs[low.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        mask ^= low
    return adj


def _adj_connected(adj: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


_cache: dict[EnumerationSpec, tuple[Graph, ...]] = {}


def enumerate_connected(spec: EnumerationSpec, allow_big: bool = False) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of
    connected graphs of order ``spec.n`` passing the filters, sorted by
    canonical graph6 string."""
    if spec.n < 2:
        raise GraphError(f"enumeration needs n >= 2, got {spec.n}")
    if spec.n > MAX_ORDER:
        raise SizeLimitError(f"enumeration capped at n <= {MAX_ORDER}, got {spec.n}")
    if spec.n > DEFAULT_ORDER_CAP and not allow_big:
        raise SizeLimitError(
            f"order {spec.n} iterates 2**{spec.n * (spec.n - 1) // 2} edge subsets; "
            "pass allow_big=True to run it"
        )
    if spec in _cache:
        return list(_cache[spec])

    n = spec.n
    delta_floor = max(1, spec.delta_min or 1)
    degree_cap = 4 if spec.molecular else None
    masks, pairs = _ascending_degree_masks(n, delta_floor, degree_cap)
    canon: dict[tuple[int, ...], None] = {}
    for mask in masks.tolist():
        adj = _mask_adjacency(mask, pairs, n)
        if not _adj_connected(adj, n):
            continue
        canon.setdefault(_canonical_columns(tuple(adj), n), None)
    graphs = []
    for cols in canon:
        g = _columns_to_graph(cols, n)
        if spec.admits(g):
            graphs.append(g)
    graphs.sort(key=to_graph6)
    _cache[spec] = tuple(graphs)
    return graphs


def connected_graphs(n: int, delta_min: int | None = None, molecular: bool = False,
                     regular_only: bool = False, allow_big: bool = False) -> list[Graph]:
    """Convenience wrapper over :func:`enumerate_connected`."""
    spec = EnumerationSpec(n, delta_min=delta_min, molecular=molecular,
                           regular_only=regular_only)
    return enumerate_connected(spec, allow_big=allow_big)


def read_population(path: str | Path) -> list[Graph]:
    """Read a population file: one graph6 string per line, blank lines and
    ``#`` comments ignored."""
    graphs = []
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphError as exc:
            raise GraphError(f"{path}, line {lineno}: {exc}") from None
    return graphs
