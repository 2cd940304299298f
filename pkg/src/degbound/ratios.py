"""Numerical audit of the per-edge ratio functions behind the bound proofs.

Every two-index bound has a per-edge ratio whose extremum over the integer
degree grid is the sharp coefficient.  This module scans those grids, checks
the monotonicity claims the proofs rest on, and cross-checks every catalog
coefficient against its grid extremum.  Ratios are evaluated through the same
per-edge terms as the index engine, so the two kinds of audit cannot diverge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import CHI, BoundSpec, Coeff, _Op, _Pow, _Sqrt, _Var, builtin_catalog
from .indices import IndexId, UndefinedIndexError, edge_term

GRID_CAP = 62


@dataclass(frozen=True)
class RatioFn:
    """Per-edge ratio numerator/denominator, optionally squared (the proofs
    work with squared ratios wherever square roots would otherwise appear)."""

    numerator: IndexId
    denominator: IndexId
    squared: bool = True

    @property
    def label(self) -> str:
        body = f"{self.numerator}/{self.denominator}"
        return f"({body})^2" if self.squared else body


F_T1 = RatioFn(IndexId.GA, IndexId.X, squared=True)
F_T2 = RatioFn(IndexId.GA, IndexId.R, squared=False)
F_T4 = RatioFn(IndexId.ABC, IndexId.GA, squared=True)
F_T6 = RatioFn(IndexId.AZI, IndexId.X, squared=True)
F_T21 = RatioFn(IndexId.AZI, IndexId.M2STAR, squared=True)


def ratio_at(r: RatioFn, pair) -> float:
    """Evaluate the ratio at a degree pair (works on real-valued pairs too,
    for dense line sampling)."""
    num = edge_term(r.numerator, pair)
    den = edge_term(r.denominator, pair)
    if den == 0:
        raise UndefinedIndexError(
            f"ratio {r.label} undefined at {pair}: denominator term is zero"
        )
    value = num / den
    return value * value if r.squared else value


@dataclass(frozen=True)
class GridExtremum:
    location: tuple[int, int]
    value: float
    kind: str


def grid_extremum(r: RatioFn, n: int, kind: str = "min", delta_min: int = 1,
                  exclude_one_one: bool = False) -> GridExtremum:
    """Exhaustive scan of integer pairs delta_min <= a <= b <= n-1.

    Pairs where the ratio is undefined are skipped; ties break to the
    lexicographically smallest pair.
    """
    if not 2 <= n <= GRID_CAP:
        raise ValueError(f"grid order must be in 2..{GRID_CAP}, got {n}")
    if kind not in ("min", "max"):
        raise ValueError(f"kind must be 'min' or 'max', got {kind!r}")
    best_pair = None
    best_value = None
    for a in range(max(1, delta_min), n):
        for b in range(a, n):
            if exclude_one_one and a == 1 and b == 1:
                continue
            try:
                value = ratio_at(r, (a, b))
            except UndefinedIndexError:
                continue
            if best_value is None or (value < best_value if kind == "min"
                                      else value > best_value):
                best_value = value
                best_pair = (a, b)
    if best_pair is None:
        raise ValueError(f"empty grid for {r.label} at n={n}")
    return GridExtremum(best_pair, best_value, kind)


@dataclass(frozen=True)
class MonotonicityReport:
    """Direction of a ratio along one integer grid line.

    ``direction`` is "increasing", "decreasing" or "constant" when the strict
    classification holds; otherwise None, with the first violating step.
    """

    direction: str | None
    first_violation: tuple | None
    values: tuple[float, ...]


def monotonicity_audit(r: RatioFn, fixed: str, fixed_value: int,
                       lo: int, hi: int) -> MonotonicityReport:
    """Check successive differences of the ratio along one grid line.

    ``fixed`` names the frozen coordinate ("a" or "b"); the other coordinate
    runs over lo..hi.
    """
    if fixed not in ("a", "b"):
        raise ValueError(f"fixed coordinate must be 'a' or 'b', got {fixed!r}")
    if not 1 <= lo <= hi <= 61:
        raise ValueError(f"line range must satisfy 1 <= lo <= hi <= 61: {(lo, hi)}")
    points = []
    for t in range(lo, hi + 1):
        pair = (fixed_value, t) if fixed == "a" else (t, fixed_value)
        points.append((pair, ratio_at(r, pair)))
    values = tuple(v for _, v in points)
    diffs = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    if not diffs:
        return MonotonicityReport("constant", None, values)
    if all(d > 0 for d in diffs):
        return MonotonicityReport("increasing", None, values)
    if all(d < 0 for d in diffs):
        return MonotonicityReport("decreasing", None, values)
    if all(d == 0 for d in diffs):
        return MonotonicityReport("constant", None, values)
    ref = next(d for d in diffs if d != 0)
    for i, d in enumerate(diffs):
        if d == 0 or (d > 0) != (ref > 0):
            return MonotonicityReport(None, (points[i][0], points[i + 1][0]), values)
    return MonotonicityReport(None, (points[0][0], points[1][0]), values)


def line_samples(r: RatioFn, fixed: str, fixed_value: float,
                 lo: float, hi: float, step: float = 1 / 64):
    """Dense samples of the ratio along a line; a smoke check of the proofs'
    continuous calculus, reported but never asserted."""
    out = []
    t = lo
    while t <= hi + 1e-12:
        pair = (fixed_value, t) if fixed == "a" else (t, fixed_value)
        out.append((t, ratio_at(r, pair)))
        t += step
    return out


# ---------------------------------------------------------------------------
# Catalog concordance


def _uses_delta(expr: Coeff) -> bool:
    if isinstance(expr, _Var):
        return expr.name == "delta"
    if isinstance(expr, _Op):
        return _uses_delta(expr.left) or _uses_delta(expr.right)
    if isinstance(expr, (_Pow, _Sqrt)):
        inner = expr.base if isinstance(expr, _Pow) else expr.arg
        return _uses_delta(inner)
    return False


def is_concordance_candidate(b: BoundSpec) -> bool:
    """Simple non-strict bounds between two indices (strict bounds make no
    sharpness claim, and the chromatic pseudo-index has no per-edge term)."""
    return not b.is_chain and not b.strict and b.lhs != CHI


@dataclass(frozen=True)
class ConcordanceRecord:
    bound_id: str
    n: int
    delta: int
    coefficient: float
    grid_value: float
    location: tuple[int, int]
    matches: bool


def concordance(b: BoundSpec, n: int, delta: int = 1,
                tol: float = 1e-9) -> ConcordanceRecord:
    """Compare a bound's coefficient with the extremum of its squared per-edge
    ratio over the degree grid its hypotheses imply."""
    if not is_concordance_candidate(b):
        raise ValueError(f"bound {b.bound_id} has no ratio-grid counterpart")
    ratio = RatioFn(b.lhs, b.rhs, squared=True)
    kind = "min" if b.direction == "lower" else "max"
    grid_floor = delta if _uses_delta(b.coeff) else b.delta_min
    ext = grid_extremum(ratio, n, kind, delta_min=grid_floor,
                        exclude_one_one=b.n_min >= 3)
    coefficient = b.coeff.ev(n, delta)
    grid_value = ext.value ** 0.5
    matches = abs(coefficient - grid_value) <= tol * max(1.0, abs(coefficient))
    return ConcordanceRecord(b.bound_id, n, delta, coefficient, grid_value,
                             ext.location, matches)


def concordance_report(n: int, delta: int = 2, tol: float = 1e-9):
    """Concordance records for every candidate bound, plus the ids whose
    claimed coefficient does not equal its grid extremum."""
    records = []
    for b in builtin_catalog():
        if not is_concordance_candidate(b):
            continue
        d = max(delta, b.delta_min)
        records.append(concordance(b, n, d, tol))
    discrepant = [rec.bound_id for rec in records if not rec.matches]
    return records, discrepant


# ---------------------------------------------------------------------------
# The registered proof-claim audits


def proofs_report(n: int) -> list[dict]:
    """Audit the specific grid claims the bound proofs rest on.

    Each record carries a claim label, what the scan observed, and a verdict:
    "confirmed", "discrepant", or "out_of_range" when the grid at this n
    cannot reach the claimed extremum.
    """
    if not 3 <= n <= GRID_CAP:
        raise ValueError(f"proof audit needs 3 <= n <= {GRID_CAP}, got {n}")
    reports: list[dict] = []

    def record(claim, observed, verdict, **extra):
        entry = {"claim": claim, "observed": observed, "verdict": verdict}
        entry.update(extra)
        reports.append(entry)

    # (GA/X)^2 = 4ab/(a+b): increasing in both, extrema at the grid corners.
    line = monotonicity_audit(F_T1, "b", n - 1, 1, n - 1)
    record("(GA/X)^2 strictly increasing in each coordinate",
           f"direction along b={n - 1}: {line.direction}",
           "confirmed" if line.direction == "increasing" else "discrepant")
    lo = grid_extremum(F_T1, n, "min")
    record("(GA/X)^2 minimum 2 at (1,1)",
           f"min {lo.value:.12g} at {lo.location}",
           "confirmed" if lo.location == (1, 1) and abs(lo.value - 2) < 1e-12
           else "discrepant")
    hi = grid_extremum(F_T1, n, "max")
    record(f"(GA/X)^2 maximum 2(n-1) = {2 * (n - 1)} at (n-1,n-1)",
           f"max {hi.value:.12g} at {hi.location}",
           "confirmed" if hi.location == (n - 1, n - 1)
           and abs(hi.value - 2 * (n - 1)) < 1e-9 else "discrepant")

    # GA/R = 2ab/(a+b): same shape, maximum n-1.
    hi = grid_extremum(F_T2, n, "max")
    record(f"GA/R maximum n-1 = {n - 1} at (n-1,n-1)",
           f"max {hi.value:.12g} at {hi.location}",
           "confirmed" if hi.location == (n - 1, n - 1)
           and abs(hi.value - (n - 1)) < 1e-9 else "discrepant")

    # (ABC/GA)^2 on the delta >= 2 grid: decreasing in the smaller coordinate,
    # maximum at (2, n-1), minimum at (n-1, n-1).
    line = monotonicity_audit(F_T4, "b", n - 1, 2, n - 1)
    record("(ABC/GA)^2 decreasing in the smaller coordinate (line b=n-1)",
           f"direction: {line.direction}",
           "confirmed" if line.direction == "decreasing" else "discrepant")
    hi = grid_extremum(F_T4, n, "max", delta_min=2)
    expected = (n + 1) ** 2 / (16 * (n - 1))
    record(f"(ABC/GA)^2 maximum (n+1)^2/(16(n-1)) = {expected:.12g} at (2,n-1)",
           f"max {hi.value:.12g} at {hi.location}",
           "confirmed" if hi.location == (2, n - 1)
           and abs(hi.value - expected) < 1e-9 * expected else "discrepant")
    lo = grid_extremum(F_T4, n, "min", delta_min=2)
    expected = 2 * (n - 2) / (n - 1) ** 2
    record(f"(ABC/GA)^2 minimum 2(n-2)/(n-1)^2 = {expected:.12g} at (n-1,n-1)",
           f"min {lo.value:.12g} at {lo.location}",
           "confirmed" if lo.location == (n - 1, n - 1)
           and abs(lo.value - expected) < 1e-9 * expected else "discrepant")

    # (AZI/X)^2 along a=1: falls until y=7, rises from y=8; global grid
    # minimum min{F(1,7), F(1,8)} = 9*(8/7)^6 at (1,8).
    if n >= 9:
        down = monotonicity_audit(F_T6, "a", 1, 2, 7)
        record("(AZI/X)^2 decreasing along a=1 for b in [2,7]",
               f"direction: {down.direction}",
               "confirmed" if down.direction == "decreasing" else "discrepant")
        up = monotonicity_audit(F_T6, "a", 1, 8, n - 1)
        record(f"(AZI/X)^2 increasing along a=1 for b in [8,{n - 1}]",
               f"direction: {up.direction}",
               "confirmed" if up.direction == "increasing" else "discrepant")
        lo = grid_extremum(F_T6, n, "min")
        expected = 9 * (8 / 7) ** 6
        record("(AZI/X)^2 minimum 9*(8/7)^6 at (1,8)",
               f"min {lo.value:.12g} at {lo.location}",
               "confirmed" if lo.location == (1, 8)
               and abs(lo.value - expected) < 1e-9 * expected else "discrepant")
        samples = line_samples(F_T6, "a", 1.0, 7.0, 8.0, step=1 / 64)
        t_min = min(samples, key=lambda s: s[1])[0]
        root = (7 + 73 ** 0.5) / 2
        record("continuous (AZI/X)^2 along a=1 dips between b=7 and b=8 "
               f"(stationary point near {root:.4f}; sampled, not asserted)",
               f"sampled minimum at b = {t_min:.6f}", "reported")
    else:
        lo = grid_extremum(F_T6, n, "min")
        record("(AZI/X)^2 minimum 9*(8/7)^6 at (1,8)",
               f"grid only reaches degree {n - 1}; min {lo.value:.12g} at {lo.location}",
               "out_of_range")

    # (AZI/M2*)^2: grid minimum sits at (1,4), far above the claimed
    # lower coefficient 4; grid maximum exceeds the claimed upper coefficient.
    lo = grid_extremum(F_T21, n, "min", exclude_one_one=True)
    expected = float(Fraction(256, 27) ** 2)
    ok = lo.location == (1, 4) and abs(lo.value - expected) < 1e-9 * expected
    record("(AZI/M2*)^2 minimum (256/27)^2 at (1,4), versus claimed "
           "lower coefficient 4 (squared: 16)",
           f"min {lo.value:.12g} at {lo.location}",
           "discrepant" if ok else "unexpected",
           detail="sharp lower coefficient would be 256/27, not 4")
    hi = grid_extremum(F_T21, n, "max", exclude_one_one=True)
    claimed = ((n - 1) ** 4 / (2 * (n - 2))) ** 2
    record("(AZI/M2*)^2 maximum versus claimed upper coefficient "
           f"(n-1)^4/(2(n-2)) (squared: {claimed:.12g})",
           f"max {hi.value:.12g} at {hi.location}",
           "discrepant" if hi.value > claimed * (1 + 1e-9) else "unexpected",
           detail="grid maximum (n-1)^8/(8(n-2)^3) exceeds the claimed coefficient")

    return reports
