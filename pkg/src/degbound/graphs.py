"""Simple undirected graphs with bitset adjacency, plus the structural
predicates and named families needed by the bound auditor.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one Python int
bitmask per vertex, which is all the machinery required at the graph orders
this package works with (graph6 short form, n <= 62, except that family
constructors may build larger graphs for closed-form cross-checks).
"""

from __future__ import annotations

from itertools import combinations


class GraphError(ValueError):
    """Raised for malformed graph constructions or inputs."""


class SizeLimitError(GraphError):
    """Raised when an exact-search routine is asked to exceed its size cap."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "degrees", "_partition", "_hash")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        adj = [0] * n
        norm = []
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {{{u},{v}}} has an endpoint outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge {{{u},{v}}}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            norm.append((u, v))
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        self.adj = tuple(adj)
        self.degrees = tuple(a.bit_count() for a in adj)
        self._partition = None
        self._hash = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabeled(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Degree statistics


def degree_sequence(g: Graph) -> list[int]:
    """Return the degree of each vertex, indexed by vertex label."""
    return list(g.degrees)


def edge_degree_partition(g: Graph) -> dict[tuple[int, int], int]:
    """Multiset of unordered endpoint-degree pairs over all edges.

    Every index this package computes is a sum over edges of a symmetric
    function of the endpoint degrees, so this multiset is a sufficient
    statistic for all of them.
    """
    if g._partition is None:
        part: dict[tuple[int, int], int] = {}
        deg = g.degrees
        for u, v in g.edges:
            a, b = deg[u], deg[v]
            if a > b:
                a, b = b, a
            part[(a, b)] = part.get((a, b), 0) + 1
        g._partition = part
    return dict(g._partition)


def min_degree(g: Graph) -> int:
    return min(g.degrees)


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def is_regular(g: Graph, d: int | None = None) -> bool:
    """True when all degrees are equal (and equal to ``d`` if given)."""
    lo = min(g.degrees)
    if lo != max(g.degrees):
        return False
    return d is None or lo == d


def is_molecular(g: Graph) -> bool:
    """True when the maximum degree is at most 4."""
    return max(g.degrees) <= 4


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (true for n = 1)."""
    seen = 1
    frontier = 1
    adj = g.adj
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Family recognizers (structural, never numeric)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_regular(g, 2) and is_connected(g)


def is_path(g: Graph) -> bool:
    if not is_connected(g):
        return False
    if g.n == 1:
        return True
    degs = sorted(g.degrees)
    return degs.count(1) == 2 and all(d == 2 for d in degs[2:])


def is_star(g: Graph) -> bool:
    """True for the star with n-1 leaves (includes K1 and K2)."""
    if not is_connected(g):
        return False
    if g.n <= 2:
        return g.m == g.n - 1
    degs = sorted(g.degrees)
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def is_double_star_t(g: Graph) -> bool:
    """True for the 8-vertex tree with two adjacent degree-4 centers."""
    if g.n != 8 or g.m != 7 or not is_connected(g):
        return False
    return edge_degree_partition(g) == {(1, 4): 6, (4, 4): 1}


# ---------------------------------------------------------------------------
# Named families


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def star_graph(k: int) -> Graph:
    """Star with one center and ``k`` pendant vertices (k + 1 vertices)."""
    if k < 1:
        raise GraphError(f"star needs k >= 1 leaves, got {k}")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite parts must be >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def double_star() -> Graph:
    """Two adjacent centers, three pendant vertices on each (8 vertices)."""
    edges = [(0, 1)]
    edges += [(0, v) for v in (2, 3, 4)]
    edges += [(1, v) for v in (5, 6, 7)]
    return Graph(8, edges)


def regular_witness(d: int) -> Graph:
    """A canonical connected d-regular graph that is neither complete (d >= 2)
    nor a cycle (d >= 3): the complete bipartite graph on d + d vertices."""
    if d < 1:
        raise GraphError(f"regular witness needs degree >= 1, got {d}")
    return complete_bipartite(d, d)


_FAMILY_BUILDERS = {
    "path": (path_graph, True),
    "cycle": (cycle_graph, True),
    "complete": (complete_graph, True),
    "star": (star_graph, True),
    "double_star": (double_star, False),
    "delta_regular_witness": (regular_witness, True),
}


def make_family(tag: str, param: int | None = None) -> Graph:
    """Build the canonical labeled member of a named family."""
    try:
        builder, wants_param = _FAMILY_BUILDERS[tag]
    except KeyError:
        raise GraphError(f"unknown family {tag!r}") from None
    if wants_param:
        if param is None:
            raise GraphError(f"family {tag!r} needs a parameter")
        return builder(param)
    if param is not None:
        raise GraphError(f"family {tag!r} takes no parameter")
    return builder()


# ---------------------------------------------------------------------------
# Exact chromatic number

CHROMATIC_CAP = 12


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number by branch and bound.

    A greedy clique gives the lower bound, a largest-first greedy coloring the
    upper bound, and the gap is closed by backtracking k-colorability tests.
    Exponential in the worst case; refuse instances above ``cap``.
    """
    n = g.n
    if n > cap:
        raise SizeLimitError(f"exact chromatic number capped at n <= {cap}, got {n}")
    if g.m == 0:
        return 1

    order = sorted(range(n), key=lambda v: -g.degrees[v])
    adj = g.adj

    # Greedy clique from each seed vertex, best over all seeds.
    lower = 2
    for seed in order:
        clique_mask = 1 << seed
        common = adj[seed]
        size = 1
        while common:
            best_v = -1
            best_deg = -1
            c = common
            while c:
                low = c & -c
                v = low.bit_length() - 1
                d = (adj[v] & common).bit_count()
                if d > best_deg:
                    best_deg = d
                    best_v = v
                c ^= low
            clique_mask |= 1 << best_v
            common &= adj[best_v]
            size += 1
        lower = max(lower, size)

    # Greedy largest-first coloring for the upper bound.
    color = {}
    for v in order:
        used = {color[u] for u in color if adj[v] >> u & 1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    upper = max(color.values()) + 1

    if lower == upper:
        return lower

    def colorable(k: int) -> bool:
        assignment = [-1] * n

        def place(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            forbidden = 0
            for j in range(i):
                u = order[j]
                if adj[v] >> u & 1:
                    forbidden |= 1 << assignment[u]
            limit = min(k, used + 1)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                assignment[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
            assignment[v] = -1
            return False

        return place(0, 0)

    for k in range(lower, upper):
        if colorable(k):
            return k
    return upper


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62) and edge-list text format

_G6_MAX = 62


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string: 6-bit chunks of the upper-triangle
    adjacency bits in column order, each chunk offset by 63."""
    n = g.n
    if n > _G6_MAX:
        raise GraphError(f"graph6 short form encodes n <= {_G6_MAX}, got {n}")
    bits = []
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = chunk << 1 | b
        chars.append(chr(chunk + 63))
    return "".join(chars)


def parse_graph6(s: str) -> Graph:
    """Decode a short-form graph6 string."""
    s = s.strip()
    if not s:
        raise GraphError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6: invalid character {ch!r} at position {i}")
    if s[0] == "~":
        raise GraphError("graph6 long form (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise GraphError(f"graph6: vertex count {n} out of range")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) != expected:
        raise GraphError(
            f"graph6: expected {expected} characters for n={n}, got {len(s)}"
        )
    bits = []
    for ch in s[1:]:
        chunk = ord(ch) - 63
        for shift in range(5, -1, -1):
            bits.append(chunk >> shift & 1)
    if any(bits[nbits:]):
        raise GraphError("graph6: nonzero padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line ``n``, then one
    whitespace-separated 0-based ``u v`` pair per line."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise GraphError("edge list: no content")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphError(f"edge list, line {lineno}: expected vertex count, got {head!r}") from None
    edges = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise GraphError(f"edge list, line {lineno}: expected 'u v', got {body!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"edge list, line {lineno}: non-integer endpoint in {body!r}") from None
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"edge list: {exc}") from None
