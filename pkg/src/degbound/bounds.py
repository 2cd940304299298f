"""Catalog of sharp inequalities between the seven degree-based indices,
with numerical evaluation, equality-family detection, and sharpness auditing
over graph populations.

Each catalog entry records one published inequality between two indices (or
between the chromatic number and an index): the bounded side, the comparison
side, a closed-form coefficient in the graph order n and minimum degree
delta, the hypotheses, and the family of graphs claimed to attain equality.
The auditor evaluates entries verbatim and reports where the claims hold,
where they are attained, and where they fail; it never repairs a coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graphs import (
    Graph,
    SizeLimitError,
    chromatic_number,
    edge_degree_partition,
    is_complete,
    is_connected,
    is_cycle,
    is_double_star_t,
    is_path,
    is_regular,
    is_star,
    max_degree,
    min_degree,
    to_graph6,
)
from .indices import ALL_INDICES, IndexId, all_indices

DEFAULT_TOL = 1e-9

# BoundCheck verdicts
HOLDS = "holds"
EQUALITY = "equality"
VIOLATED = "violated"
PRECONDITION_SKIPPED = "precondition_skipped"
DOMAIN_SKIPPED = "domain_skipped"

# SharpnessReport verdicts
CONFIRMED_SHARP = "confirmed_sharp"
HOLDS_NOT_SHARP = "holds_not_sharp_in_population"
VACUOUS = "vacuous"

# Pseudo-index: the chromatic number, usable only as a bounded-above side.
CHI = "CHI"


# ---------------------------------------------------------------------------
# Coefficient expressions in (n, delta)


class Coeff:
    """Closed-form coefficient: constants, n, delta, arithmetic, rational
    powers and square roots."""

    def ev(self, n: int, delta: int) -> float:
        raise NotImplementedError

    def __add__(self, other):
        return _Op("+", self, _wrap(other))

    def __radd__(self, other):
        return _Op("+", _wrap(other), self)

    def __sub__(self, other):
        return _Op("-", self, _wrap(other))

    def __rsub__(self, other):
        return _Op("-", _wrap(other), self)

    def __mul__(self, other):
        return _Op("*", self, _wrap(other))

    def __rmul__(self, other):
        return _Op("*", _wrap(other), self)

    def __truediv__(self, other):
        return _Op("/", self, _wrap(other))

    def __rtruediv__(self, other):
        return _Op("/", _wrap(other), self)

    def __pow__(self, exponent):
        return _Pow(self, Fraction(exponent))


class _Const(Coeff):
    def __init__(self, value):
        self.value = Fraction(value)

    def ev(self, n, delta):
        return float(self.value)

    def __str__(self):
        return str(self.value)


class _Var(Coeff):
    def __init__(self, name):
        self.name = name

    def ev(self, n, delta):
        return float(n if self.name == "n" else delta)

    def __str__(self):
        return self.name


class _Op(Coeff):
    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def ev(self, n, delta):
        a = self.left.ev(n, delta)
        b = self.right.ev(n, delta)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b

    def __str__(self):
        return f"({self.left} {self.op} {self.right})"


class _Pow(Coeff):
    def __init__(self, base, exponent: Fraction):
        self.base = base
        self.exponent = exponent

    def ev(self, n, delta):
        return self.base.ev(n, delta) ** float(self.exponent)

    def __str__(self):
        return f"{self.base}^({self.exponent})"


class _Sqrt(Coeff):
    def __init__(self, arg):
        self.arg = arg

    def ev(self, n, delta):
        return self.arg.ev(n, delta) ** 0.5

    def __str__(self):
        return f"sqrt({self.arg})"


def _wrap(x) -> Coeff:
    if isinstance(x, Coeff):
        return x
    return _Const(x)


def const(x) -> Coeff:
    return _Const(x)


def sqrt(x) -> Coeff:
    return _Sqrt(_wrap(x))


N = _Var("n")
DELTA = _Var("delta")


# ---------------------------------------------------------------------------
# Equality families (structural membership, never numeric)


@dataclass(frozen=True)
class EqualityFamily:
    """A claimed extremal family: P2, P3, K_n, C_n, C_3, a fixed star, any
    spanning star, or the delta-regular graphs."""

    kind: str
    k: int | None = None

    def contains(self, g: Graph) -> bool:
        if self.kind == "P2":
            return g.n == 2 and g.m == 1
        if self.kind == "P3":
            return g.n == 3 and is_path(g)
        if self.kind == "complete":
            return is_complete(g)
        if self.kind == "cycle":
            return is_cycle(g)
        if self.kind == "C3":
            return g.n == 3 and is_cycle(g)
        if self.kind == "star":
            return g.n == self.k + 1 and is_star(g)
        if self.kind == "spanning_star":
            return g.n >= 2 and is_star(g)
        if self.kind == "regular":
            return is_regular(g)
        raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def label(self) -> str:
        return {
            "P2": "P2",
            "P3": "P3",
            "complete": "K_n",
            "cycle": "C_n",
            "C3": "C_3",
            "star": f"S_{{1,{self.k}}}",
            "spanning_star": "S_{1,n-1}",
            "regular": "delta-regular",
        }[self.kind]


P2_FAMILY = EqualityFamily("P2")
P3_FAMILY = EqualityFamily("P3")
COMPLETE_FAMILY = EqualityFamily("complete")
CYCLE_FAMILY = EqualityFamily("cycle")
C3_FAMILY = EqualityFamily("C3")
SPANNING_STAR_FAMILY = EqualityFamily("spanning_star")
REGULAR_FAMILY = EqualityFamily("regular")


def star_family(k: int) -> EqualityFamily:
    return EqualityFamily("star", k)


# Exclusion predicates for entries stated with explicit exceptional graphs.
_EXCLUSIONS = {
    "K_{1,4}": lambda g: g.n == 5 and is_star(g),
    "T*": is_double_star_t,
}


# ---------------------------------------------------------------------------
# Bound records


@dataclass(frozen=True)
class BoundSpec:
    """One inequality: ``lhs <= coeff*rhs`` (direction "upper") or
    ``coeff*rhs <= lhs`` (direction "lower"), under the stated hypotheses.

    ``chain`` entries compose other catalog entries instead of carrying a
    coefficient of their own.
    """

    bound_id: str
    citation: str
    statement: str
    lhs: IndexId | str | None = None
    rhs: IndexId | None = None
    coeff: Coeff | None = None
    direction: str = "lower"
    strict: bool = False
    n_min: int = 2
    delta_min: int = 1
    molecular_only: bool = False
    spread_cap: Coeff | None = None
    exclusions: tuple[str, ...] = ()
    claimed_equality: EqualityFamily | None = None
    chain: tuple[str, ...] = ()

    @property
    def is_chain(self) -> bool:
        return bool(self.chain)

    def preconditions_met(self, ctx: "GraphContext") -> bool:
        if not ctx.connected:
            return False
        if ctx.n < self.n_min:
            return False
        if ctx.delta < self.delta_min:
            return False
        if self.molecular_only and ctx.Delta > 4:
            return False
        if self.spread_cap is not None:
            if ctx.Delta - ctx.delta > self.spread_cap.ev(ctx.n, ctx.delta):
                return False
        for tag in self.exclusions:
            if _EXCLUSIONS[tag](ctx.graph):
                return False
        return True


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one bound on one graph."""

    bound_id: str
    graph6: str
    lhs_value: float | None
    rhs_side_value: float | None
    margin: float | None
    verdict: str


class GraphContext:
    """Per-graph quantities shared across bound evaluations."""

    __slots__ = ("graph", "graph6", "n", "m", "delta", "Delta", "partition",
                 "indices", "connected", "_chi")

    def __init__(self, g: Graph):
        self.graph = g
        self.graph6 = to_graph6(g)
        self.n = g.n
        self.m = g.m
        self.delta = min_degree(g)
        self.Delta = max_degree(g)
        self.partition = edge_degree_partition(g)
        self.indices = all_indices(g)
        self.connected = is_connected(g)
        self._chi = None

    @property
    def chi(self) -> int:
        if self._chi is None:
            self._chi = chromatic_number(self.graph)
        return self._chi

    def side_value(self, side) -> float | None:
        if side == CHI:
            try:
                return float(self.chi)
            except SizeLimitError:
                return None
        return self.indices[side]


def _skip_check(b: BoundSpec, ctx: GraphContext, verdict: str) -> BoundCheck:
    return BoundCheck(b.bound_id, ctx.graph6, None, None, None, verdict)


def combine_chain_verdicts(verdicts) -> str:
    """Fold constituent verdicts into a chain verdict: any skip makes the
    chain unassessable, otherwise any violation breaks the chain."""
    verdicts = list(verdicts)
    if PRECONDITION_SKIPPED in verdicts:
        return PRECONDITION_SKIPPED
    if DOMAIN_SKIPPED in verdicts:
        return DOMAIN_SKIPPED
    if VIOLATED in verdicts:
        return VIOLATED
    return HOLDS


def evaluate_bound(b: BoundSpec, g: Graph, tol: float = DEFAULT_TOL,
                   ctx: GraphContext | None = None) -> BoundCheck:
    """Check one bound on one graph; every outcome is a verdict, not an error.

    Equality is |margin| <= tol * max(1, |lhs|).  A strict bound reaching
    equality within tolerance is still reported as "equality"; the audit
    surfaces the strictness conflict.
    """
    if ctx is None:
        ctx = GraphContext(g)
    if not b.preconditions_met(ctx):
        return _skip_check(b, ctx, PRECONDITION_SKIPPED)
    if b.is_chain:
        parts = [evaluate_bound(catalog_by_id()[cid], g, tol, ctx) for cid in b.chain]
        verdict = combine_chain_verdicts(p.verdict for p in parts)
        # slack of the tightest link that is not itself attained
        margins = [p.margin for p in parts if p.verdict == HOLDS]
        margin = min(margins) if margins else None
        return BoundCheck(b.bound_id, ctx.graph6, None, None, margin, verdict)

    lhs_value = ctx.side_value(b.lhs)
    rhs_value = ctx.side_value(b.rhs)
    if lhs_value is None or rhs_value is None:
        return _skip_check(b, ctx, DOMAIN_SKIPPED)
    rhs_side = b.coeff.ev(ctx.n, ctx.delta) * rhs_value
    if b.direction == "upper":
        margin = rhs_side - lhs_value
    else:
        margin = lhs_value - rhs_side
    scale = tol * max(1.0, abs(lhs_value))
    if abs(margin) <= scale:
        verdict = EQUALITY
    elif margin < -scale:
        verdict = VIOLATED
    else:
        verdict = HOLDS
    return BoundCheck(b.bound_id, ctx.graph6, lhs_value, rhs_side, margin, verdict)


def check_equality_family(b: BoundSpec, g: Graph) -> bool:
    """Structural membership of ``g`` in the bound's claimed extremal family."""
    return b.claimed_equality is not None and b.claimed_equality.contains(g)


# ---------------------------------------------------------------------------
# Sharpness audits


@dataclass
class SharpnessReport:
    """Aggregate of one bound's checks over a population."""

    bound_id: str
    citation: str
    population: str
    tolerance: float
    counts: dict = field(default_factory=dict)
    min_margin: dict | None = None
    equality_witnesses: list[str] = field(default_factory=list)
    violation_witnesses: list[str] = field(default_factory=list)
    verdict: str = VACUOUS
    equality_family: str | None = None
    family_mismatches: dict = field(default_factory=dict)
    strict_conflicts: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "bound_id": self.bound_id,
            "citation": self.citation,
            "population": self.population,
            "tolerance": self.tolerance,
            "counts": dict(self.counts),
            "min_margin": dict(self.min_margin) if self.min_margin else None,
            "equality_witnesses": list(self.equality_witnesses),
            "violation_witnesses": list(self.violation_witnesses),
            "verdict": self.verdict,
            "equality_family": self.equality_family,
            "family_mismatches": {k: list(v) for k, v in self.family_mismatches.items()},
            "strict_conflicts": list(self.strict_conflicts),
        }


def _population_checks(bounds, graphs, tol: float):
    """Checks for every (bound, graph) pair, plus family membership flags."""
    out: dict[str, list[tuple[BoundCheck, bool]]] = {b.bound_id: [] for b in bounds}
    for g in graphs:
        ctx = GraphContext(g)
        for b in bounds:
            chk = evaluate_bound(b, g, tol, ctx)
            out[b.bound_id].append((chk, check_equality_family(b, g)))
    return out


def _checks_worker(args):
    """Multiprocessing worker: graphs travel as graph6 strings, checks return
    as plain tuples."""
    from .graphs import parse_graph6

    bound_ids, g6_list, tol = args
    by_id = catalog_by_id()
    bounds = [by_id[i] for i in bound_ids]
    graphs = [parse_graph6(s) for s in g6_list]
    checks = _population_checks(bounds, graphs, tol)
    return {
        bid: [
            ((c.bound_id, c.graph6, c.lhs_value, c.rhs_side_value, c.margin,
              c.verdict), fam)
            for c, fam in pairs
        ]
        for bid, pairs in checks.items()
    }


def _aggregate(b: BoundSpec, pairs, tol: float, population: str) -> SharpnessReport:
    """Fold one bound's checks into a report.  All witness lists and the
    minimum-margin choice are order-independent, so any sharding of the
    population merges to the same report."""
    checked = holds = equal = violated = skipped = 0
    equality_w: list[str] = []
    violation_w: list[str] = []
    eq_not_family: list[str] = []
    family_not_eq: list[str] = []
    min_margin: tuple[float, str] | None = None
    for chk, in_family in pairs:
        if chk.verdict in (PRECONDITION_SKIPPED, DOMAIN_SKIPPED):
            skipped += 1
            continue
        checked += 1
        if chk.verdict == EQUALITY:
            equal += 1
            equality_w.append(chk.graph6)
            if not in_family:
                eq_not_family.append(chk.graph6)
        else:
            if in_family:
                family_not_eq.append(chk.graph6)
            if chk.verdict == VIOLATED:
                violated += 1
                violation_w.append(chk.graph6)
            else:
                holds += 1
                if chk.margin is not None:
                    key = (chk.margin, chk.graph6)
                    if min_margin is None or key < min_margin:
                        min_margin = key
    if violated:
        verdict = VIOLATED
    elif checked == 0:
        verdict = VACUOUS
    elif equal:
        verdict = CONFIRMED_SHARP
    else:
        verdict = HOLDS_NOT_SHARP
    return SharpnessReport(
        bound_id=b.bound_id,
        citation=b.citation,
        population=population,
        tolerance=tol,
        counts={
            "checked": checked,
            "skipped": skipped,
            "holds": holds,
            "equality": equal,
            "violated": violated,
        },
        min_margin=(
            {"value": min_margin[0], "witness_graph6": min_margin[1]}
            if min_margin is not None
            else None
        ),
        equality_witnesses=sorted(equality_w),
        violation_witnesses=sorted(violation_w),
        verdict=verdict,
        equality_family=b.claimed_equality.label if b.claimed_equality else None,
        family_mismatches={
            "equality_not_in_family": sorted(eq_not_family),
            "family_without_equality": sorted(family_not_eq),
        },
        strict_conflicts=sorted(equality_w) if b.strict and equality_w else [],
    )


def audit_all(bounds, graphs, tol: float = DEFAULT_TOL,
              population: str = "population",
              jobs: int = 1) -> dict[str, SharpnessReport]:
    """Audit several bounds over one population, sharing per-graph work.

    Witness lists are sorted by graph6 string, so the result does not depend
    on the population order (for equal populations as sets).  With jobs > 1
    the population is sharded over a process pool; sharded and serial runs
    produce identical reports.  Parallel runs are limited to catalog bounds.
    """
    bounds = list(bounds)
    graphs = list(graphs)
    if jobs > 1 and len(graphs) > 1:
        by_id = catalog_by_id()
        ids = [b.bound_id for b in bounds]
        if any(i not in by_id for i in ids):
            raise ValueError("parallel audits support builtin catalog bounds only")
        import multiprocessing

        g6 = [to_graph6(g) for g in graphs]
        step = (len(g6) + jobs - 1) // jobs
        tasks = [(ids, g6[i : i + step], tol) for i in range(0, len(g6), step)]
        merged: dict[str, list] = {i: [] for i in ids}
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.map(_checks_worker, tasks):
                for bid, tuples in part.items():
                    for tup, fam in tuples:
                        merged[bid].append((BoundCheck(*tup), fam))
        return {
            b.bound_id: _aggregate(b, merged[b.bound_id], tol, population)
            for b in bounds
        }
    checks = _population_checks(bounds, graphs, tol)
    return {
        b.bound_id: _aggregate(b, checks[b.bound_id], tol, population)
        for b in bounds
    }


def audit(b: BoundSpec, graphs, tol: float = DEFAULT_TOL,
          population: str = "population") -> SharpnessReport:
    """Audit a single bound over a population of connected graphs."""
    return audit_all([b], graphs, tol, population)[b.bound_id]


# ---------------------------------------------------------------------------
# The built-in catalog

R, H, ABC, X, GA, AZI, M2 = ALL_INDICES


def _lower(bound_id, citation, statement, lhs, rhs, coeff, **kw):
    return BoundSpec(bound_id, citation, statement, lhs=lhs, rhs=rhs,
                     coeff=_wrap(coeff), direction="lower", **kw)


def _upper(bound_id, citation, statement, lhs, rhs, coeff, **kw):
    return BoundSpec(bound_id, citation, statement, lhs=lhs, rhs=rhs,
                     coeff=_wrap(coeff), direction="upper", **kw)


_CATALOG: tuple[BoundSpec, ...] | None = None
_BY_ID: dict[str, BoundSpec] | None = None


def builtin_catalog() -> list[BoundSpec]:
    """All 55 inequality records, in source order."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = tuple(_build_catalog())
    return list(_CATALOG)


def catalog_by_id() -> dict[str, BoundSpec]:
    global _BY_ID
    if _BY_ID is None:
        _BY_ID = {b.bound_id: b for b in builtin_catalog()}
    return dict(_BY_ID)


def _build_catalog() -> list[BoundSpec]:
    ub17 = (N - 1) ** 7 / (8 * (N - 2) ** 3)
    c9_rh = DELTA**7 / (8 * (DELTA - 1) ** 3)
    entries = [
        _lower("T1L", "Theorem 1 (lower)",
               "sqrt(2)*X(G) <= GA(G) for connected G, n >= 2; equality iff G = P2",
               GA, X, sqrt(2), claimed_equality=P2_FAMILY),
        _upper("T1U", "Theorem 1 (upper)",
               "GA(G) <= sqrt(2(n-1))*X(G) for connected G, n >= 2; equality iff G = K_n",
               GA, X, sqrt(2 * (N - 1)), claimed_equality=COMPLETE_FAMILY),
        _lower("C1", "Corollary 1",
               "sqrt(2*delta)*X(G) <= GA(G) for delta >= 2; equality iff G is delta-regular",
               GA, X, sqrt(2 * DELTA), delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("T2L", "Theorem 2 (lower)",
               "R(G) <= GA(G) for connected G, n >= 2; equality iff G = P2",
               GA, R, 1, claimed_equality=P2_FAMILY),
        _upper("T2U", "Theorem 2 (upper)",
               "GA(G) <= (n-1)*R(G) for connected G, n >= 2; equality iff G = K_n",
               GA, R, N - 1, claimed_equality=COMPLETE_FAMILY),
        _lower("C2", "Corollary 2",
               "delta*R(G) <= GA(G) for delta >= 2; equality iff G is delta-regular",
               GA, R, DELTA, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C3", "Corollary 3 (first of two)",
               "sqrt(4/3)*R(G) <= GA(G) for connected G, n >= 3; equality claimed iff G = P3 "
               "(upper companion (n-1)*R(G) is entry T2U)",
               GA, R, sqrt(Fraction(4, 3)), n_min=3, claimed_equality=P3_FAMILY),
        _lower("EXT-ZT", "Zhou-Trinajstic comparison",
               "sqrt(2/3)*R(G) <= X(G) for connected G, n >= 3; equality iff G = P3",
               X, R, sqrt(Fraction(2, 3)), n_min=3, claimed_equality=P3_FAMILY),
        _lower("T3L", "Theorem 3 (lower)",
               "H(G) <= GA(G) for connected G, n >= 2; equality iff G = P2",
               GA, H, 1, claimed_equality=P2_FAMILY),
        _upper("T3U", "Theorem 3 (upper)",
               "GA(G) <= (n-1)*H(G) for connected G, n >= 2; equality iff G = K_n",
               GA, H, N - 1, claimed_equality=COMPLETE_FAMILY),
        _lower("C3b", "Corollary 3 (second of two), inequality (1)",
               "delta*H(G) <= GA(G) for delta >= 2; equality iff G is delta-regular",
               GA, H, DELTA, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("T4L", "Theorem 4 (lower)",
               "sqrt(2(n-2))/(n-1)*GA(G) <= ABC(G) for n >= 3, delta >= 2; equality iff G = K_n",
               ABC, GA, sqrt(2 * (N - 2)) / (N - 1), n_min=3, delta_min=2,
               claimed_equality=COMPLETE_FAMILY),
        _upper("T4U", "Theorem 4 (upper)",
               "ABC(G) <= (n+1)/(4*sqrt(n-1))*GA(G) for n >= 3, delta >= 2; equality iff G = C_3",
               ABC, GA, (N + 1) / (4 * sqrt(N - 1)), n_min=3, delta_min=2,
               claimed_equality=C3_FAMILY),
        _upper("EXT-2a", "Zhong-Xu chain (2), first link",
               "H(G) <= R(G) for delta >= 2; equality iff G is regular",
               H, R, 1, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _upper("EXT-2b", "Zhong-Xu chain (2), second link",
               "R(G) <= X(G) for delta >= 2; equality iff G is a cycle",
               R, X, 1, delta_min=2, claimed_equality=CYCLE_FAMILY),
        _upper("EXT-2c", "Zhong-Xu chain (2), third link",
               "X(G) < ABC(G) for delta >= 2 (strict)",
               X, ABC, 1, delta_min=2, strict=True),
        BoundSpec("C4", "Corollary 4",
                  "H(G) <= R(G) <= X(G) < ABC(G) <= (n+1)/(4*sqrt(n-1))*GA(G) "
                  "for n >= 3, delta >= 2 (chain of EXT-2a, EXT-2b, EXT-2c, T4U)",
                  n_min=3, delta_min=2, chain=("EXT-2a", "EXT-2b", "EXT-2c", "T4U")),
        _upper("EXT-3(i)", "Das-Trinajstic strict comparison (molecular)",
               "ABC(G) < GA(G) for molecular G (max degree <= 4) other than K_{1,4} and T*",
               ABC, GA, 1, strict=True, molecular_only=True,
               exclusions=("K_{1,4}", "T*")),
        _upper("EXT-3(ii)", "Das-Trinajstic strict comparison (small degree spread)",
               "ABC(G) < GA(G) when Delta - delta <= 3, G other than K_{1,4} and T*",
               ABC, GA, 1, strict=True, spread_cap=const(3),
               exclusions=("K_{1,4}", "T*")),
        _upper("EXT-3(iii)", "strict comparison under delta >= 2 and bounded spread",
               "ABC(G) < GA(G) when delta >= 2 and Delta - delta <= (2*delta-1)^2",
               ABC, GA, 1, strict=True, delta_min=2,
               spread_cap=(2 * DELTA - 1) ** 2),
        _upper("EXT-4", "Deng chromatic bound, inequality (4)",
               "chi(G) <= 2*H(G) for connected G; equality iff G = K_n",
               CHI, H, 2, claimed_equality=COMPLETE_FAMILY),
        _upper("C6", "Corollary 6",
               "chi(G) <= (2/delta)*GA(G) for delta >= 2; equality iff G = K_n",
               CHI, GA, 2 / DELTA, delta_min=2, claimed_equality=COMPLETE_FAMILY),
        _lower("T5-(5)L", "Theorem 5, inequality (5) lower",
               "M2*(G) <= R(G) for connected G, n >= 2; equality iff G = P2",
               R, M2, 1, claimed_equality=P2_FAMILY),
        _upper("T5-(5)U", "Theorem 5, inequality (5) upper",
               "R(G) <= (n-1)*M2*(G); equality iff G = K_n",
               R, M2, N - 1, claimed_equality=COMPLETE_FAMILY),
        _lower("T5-(6)L", "Theorem 5, inequality (6) lower",
               "M2*(G)/sqrt(2) <= X(G); equality iff G = P2",
               X, M2, 1 / sqrt(2), claimed_equality=P2_FAMILY),
        _upper("T5-(6)U", "Theorem 5, inequality (6) upper",
               "X(G) <= (n-1)^(3/2)/sqrt(2)*M2*(G); equality iff G = K_n",
               X, M2, (N - 1) ** Fraction(3, 2) / sqrt(2),
               claimed_equality=COMPLETE_FAMILY),
        _lower("T5-(7)L", "Theorem 5, inequality (7) lower",
               "M2*(G) <= H(G); equality iff G = P2",
               H, M2, 1, claimed_equality=P2_FAMILY),
        _upper("T5-(7)U", "Theorem 5, inequality (7) upper",
               "H(G) <= (n-1)*M2*(G); equality iff G = K_n",
               H, M2, N - 1, claimed_equality=COMPLETE_FAMILY),
        _lower("T5-(8)L", "Theorem 5, inequality (8) lower",
               "M2*(G) <= GA(G); equality iff G = P2",
               GA, M2, 1, claimed_equality=P2_FAMILY),
        _upper("T5-(8)U", "Theorem 5, inequality (8) upper",
               "GA(G) <= (n-1)^2*M2*(G); equality iff G = K_n",
               GA, M2, (N - 1) ** 2, claimed_equality=COMPLETE_FAMILY),
        _lower("T5-(9)L", "Theorem 5, inequality (9) lower",
               "sqrt(2)*M2*(G) <= ABC(G) for n >= 3; equality iff G = P3",
               ABC, M2, sqrt(2), n_min=3, claimed_equality=P3_FAMILY),
        _upper("T5-(9)U", "Theorem 5, inequality (9) upper",
               "ABC(G) <= (n-1)*sqrt(2(n-2))*M2*(G) for n >= 3; equality iff G = K_n",
               ABC, M2, (N - 1) * sqrt(2 * (N - 2)), n_min=3,
               claimed_equality=COMPLETE_FAMILY),
        _lower("C7-(10)", "Corollary 7, inequality (10)",
               "delta*M2*(G) <= R(G) for delta >= 2; equality iff G is delta-regular",
               R, M2, DELTA, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C7-(11)", "Corollary 7, inequality (11)",
               "delta^(3/2)/sqrt(2)*M2*(G) <= X(G) for delta >= 2; "
               "equality iff G is delta-regular",
               X, M2, DELTA ** Fraction(3, 2) / sqrt(2), delta_min=2,
               claimed_equality=REGULAR_FAMILY),
        _lower("C7-(12)", "Corollary 7, inequality (12)",
               "sqrt(delta)*M2*(G) <= H(G) for delta >= 2; "
               "equality claimed iff G is delta-regular",
               H, M2, sqrt(DELTA), delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C7-(13)", "Corollary 7, inequality (13)",
               "delta^2*M2*(G) <= GA(G) for delta >= 2; equality iff G is delta-regular",
               GA, M2, DELTA**2, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C7-(14)", "Corollary 7, inequality (14)",
               "delta*sqrt(2(delta-1))*M2*(G) <= ABC(G) for delta >= 2; "
               "equality iff G is delta-regular",
               ABC, M2, DELTA * sqrt(2 * (DELTA - 1)), delta_min=2,
               claimed_equality=REGULAR_FAMILY),
        _lower("T6L", "Theorem 6 (lower)",
               "1536/343*X(G) <= AZI(G) for connected G, n >= 3; equality iff G = S_{1,8}",
               AZI, X, const(Fraction(1536, 343)), n_min=3,
               claimed_equality=star_family(8)),
        _upper("T6U", "Theorem 6 (upper)",
               "AZI(G) <= (n-1)^(13/2)/(sqrt(32)(n-2)^3)*X(G) for n >= 3; "
               "equality iff G = K_n",
               AZI, X, (N - 1) ** Fraction(13, 2) / (sqrt(32) * (N - 2) ** 3),
               n_min=3, claimed_equality=COMPLETE_FAMILY),
        _lower("C8", "Corollary 8",
               "delta^(13/2)/(sqrt(32)(delta-1)^3)*X(G) <= AZI(G) for delta >= 2; "
               "equality iff G is delta-regular",
               AZI, X, DELTA ** Fraction(13, 2) / (sqrt(32) * (DELTA - 1) ** 3),
               delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("T7-(17)L", "Theorem 7, inequality (17) lower",
               "343*sqrt(7)/216*R(G) <= AZI(G) for n >= 3; equality iff G = S_{1,7}",
               AZI, R, const(Fraction(343, 216)) * sqrt(7), n_min=3,
               claimed_equality=star_family(7)),
        _upper("T7-(17)U", "Theorem 7, inequality (17) upper",
               "AZI(G) <= (n-1)^7/(8(n-2)^3)*R(G) for n >= 3; equality iff G = K_n",
               AZI, R, ub17, n_min=3, claimed_equality=COMPLETE_FAMILY),
        _lower("T7-(18)L", "Theorem 7, inequality (18) lower",
               "375/64*H(G) <= AZI(G) for n >= 3; equality iff G = S_{1,5}",
               AZI, H, const(Fraction(375, 64)), n_min=3,
               claimed_equality=star_family(5)),
        _upper("T7-(18)U", "Theorem 7, inequality (18) upper",
               "AZI(G) <= (n-1)^7/(8(n-2)^3)*H(G) for n >= 3; equality iff G = K_n",
               AZI, H, ub17, n_min=3, claimed_equality=COMPLETE_FAMILY),
        _lower("T7-(19)L", "Theorem 7, inequality (19) lower",
               "((n-1)/(n-2))^(7/2)*ABC(G) <= AZI(G) for n >= 3; "
               "equality claimed iff G = S_{1,n-1}",
               AZI, ABC, ((N - 1) / (N - 2)) ** Fraction(7, 2), n_min=3,
               claimed_equality=SPANNING_STAR_FAMILY),
        _upper("T7-(19)U", "Theorem 7, inequality (19) upper",
               "AZI(G) <= ((n-1)^2/(2(n-2)))^(7/2)*ABC(G) for n >= 3; "
               "equality claimed iff G = K_n",
               AZI, ABC, ((N - 1) ** 2 / (2 * (N - 2))) ** Fraction(7, 2), n_min=3,
               claimed_equality=COMPLETE_FAMILY),
        _lower("T7-(20)L", "Theorem 7, inequality (20) lower",
               "8*GA(G) <= AZI(G) for n >= 3, delta >= 2; equality iff G = C_n",
               AZI, GA, 8, n_min=3, delta_min=2, claimed_equality=CYCLE_FAMILY),
        _upper("T7-(20)U", "Theorem 7, inequality (20) upper",
               "AZI(G) <= (n-1)^6/(8(n-2)^3)*GA(G) for n >= 3, delta >= 2; "
               "equality iff G = K_n",
               AZI, GA, (N - 1) ** 6 / (8 * (N - 2) ** 3), n_min=3, delta_min=2,
               claimed_equality=COMPLETE_FAMILY),
        _lower("T7-(21)L", "Theorem 7, inequality (21) lower",
               "4*M2*(G) <= AZI(G) for n >= 3; equality claimed iff G = P3",
               AZI, M2, 4, n_min=3, claimed_equality=P3_FAMILY),
        _upper("T7-(21)U", "Theorem 7, inequality (21) upper",
               "AZI(G) <= (n-1)^4/(2(n-2))*M2*(G) for n >= 3; "
               "equality claimed iff G = K_n",
               AZI, M2, (N - 1) ** 4 / (2 * (N - 2)), n_min=3,
               claimed_equality=COMPLETE_FAMILY),
        _lower("C9-(22)", "Corollary 9, inequality (22)",
               "delta^7/(8(delta-1)^3)*R(G) <= AZI(G) for delta >= 2; "
               "equality iff G is delta-regular",
               AZI, R, c9_rh, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C9-(23)", "Corollary 9, inequality (23)",
               "delta^7/(8(delta-1)^3)*H(G) <= AZI(G) for delta >= 2; "
               "equality iff G is delta-regular",
               AZI, H, c9_rh, delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C9-(24)", "Corollary 9, inequality (24)",
               "(delta^2/(2(delta-1)))^(7/2)*ABC(G) <= AZI(G) for delta >= 2; "
               "equality claimed iff G is delta-regular",
               AZI, ABC, (DELTA**2 / (2 * (DELTA - 1))) ** Fraction(7, 2),
               delta_min=2, claimed_equality=REGULAR_FAMILY),
        _lower("C9-(25)", "Corollary 9, inequality (25)",
               "delta^6/(8(delta-1)^3)*GA(G) <= AZI(G) for delta >= 2; "
               "equality iff G is delta-regular",
               AZI, GA, DELTA**6 / (8 * (DELTA - 1) ** 3), delta_min=2,
               claimed_equality=REGULAR_FAMILY),
        _lower("C9-(26)", "Corollary 9, inequality (26)",
               "delta^4/(2(delta-1))*M2*(G) <= AZI(G) for delta >= 2; "
               "equality claimed iff G is delta-regular",
               AZI, M2, DELTA**4 / (2 * (DELTA - 1)), delta_min=2,
               claimed_equality=REGULAR_FAMILY),
    ]
    return entries
