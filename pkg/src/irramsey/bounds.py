"""Numeric checks for the analytic estimates behind t(3,n) = O(n^{5/4}/log n).

Everything that involves the constant e^100 is compared in log space.
Each checker returns a :class:`Check`; it is truthy when the inequality
holds and carries the margin (positive means satisfied).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np

from .graph import Graph, contains_triangle, independence_number

E8 = math.exp(8)
E2 = math.exp(2)
REL_TOL = 1e-12
MONO_TOL = 1e-15
AGREE_TOL = 1e-9


class DomainError(ValueError):
    pass


class InconsistencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class BoundParams:
    """Constants of the estimates.  Only c2 has a known value (e^100); the rest default to 1.

    ``log_exponent_variant`` is the power of log n in the t(3,n) upper bound,
    1 or 0.25 (the form used by the m = 4 sum).
    """

    c1: float = 1.0
    c2: float = math.exp(100)
    c4: float = 1.0
    cm: float = 1.0
    log_exponent_variant: float = 1.0

    def __post_init__(self):
        for name in ("c1", "c2", "c4", "cm"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        if self.log_exponent_variant not in (1.0, 0.25):
            raise DomainError("log_exponent_variant must be 1 or 1/4")

    @property
    def log_c2(self) -> float:
        return math.log(self.c2)

    @property
    def variant_name(self) -> str:
        return "1" if self.log_exponent_variant == 1.0 else "1/4"

    def with_variant(self, v: float) -> "BoundParams":
        return replace(self, log_exponent_variant=v)


DEFAULT = BoundParams()


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    points: int
    spacing: str = "logarithmic"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError("grid needs lo < hi")
        if self.points < 2:
            raise DomainError("grid needs at least 2 points")
        if self.spacing not in ("linear", "logarithmic"):
            raise DomainError("spacing must be linear or logarithmic")
        if self.spacing == "logarithmic" and self.lo <= 0:
            raise DomainError("logarithmic grid needs lo > 0")

    def values(self) -> np.ndarray:
        if self.spacing == "linear":
            v = np.linspace(self.lo, self.hi, self.points)
        else:
            v = np.geomspace(self.lo, self.hi, self.points)
        # pin the endpoints exactly
        v[0], v[-1] = self.lo, self.hi
        return v


@dataclass(frozen=True)
class Check:
    """One evaluated inequality.

    ``value`` and ``bound`` are the two sides (possibly logs, see ``note``)
    and ``margin`` is positive exactly when the inequality holds.
    """

    n: float
    value: float
    bound: float
    margin: float
    verdict: bool
    name: str = ""
    note: str = ""

    def __post_init__(self):
        # numpy scalars leak in from the grid suites
        for k in ("n", "value", "bound", "margin", "verdict"):
            x = getattr(self, k)
            if isinstance(x, np.generic):
                object.__setattr__(self, k, x.item())

    def __bool__(self):
        return self.verdict

    def row(self) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "bound": self.bound,
            "margin": self.margin,
            "verdict": "PASS" if self.verdict else "FAIL",
        }


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks)

    def __bool__(self):
        return self.passed


# ----------------------------------------------------------------------------
# Shearer's function


def shearer_f(x: float) -> float:
    """(x log x - (x - 1)) / (x - 1)^2, with value 1/2 at x = 1."""
    if not x > 0:
        raise DomainError("f is defined for x > 0")
    h = x - 1.0
    if abs(h) < 1e-6:
        return 0.5 - h / 6.0
    return (x * math.log(x) - h) / (h * h)


def _f_ext(x: float) -> float:
    # continuous extension with f(0) = 1
    return 1.0 if x == 0 else shearer_f(x)


def shearer_bound_holds(g: Graph) -> Check:
    """alpha(G) >= N f(average degree) for triangle-free G."""
    if contains_triangle(g):
        raise DomainError("the bound applies to triangle-free graphs")
    alpha = independence_number(g)
    d = g.average_degree()
    bound = g.order * _f_ext(d)
    floor = bound * (1 - REL_TOL)
    return Check(g.order, alpha, bound, alpha - floor, alpha >= floor, "shearer", f"avg degree {d:.6g}")


def f_lower_estimate_holds(x: float) -> Check:
    """f(x) >= (x/(x-1))^2 (log x/x - (x-1)/x^2) >= (log x - 1)/x >= log x/(2x) for x > e^2."""
    if not x > E2:
        raise DomainError("estimate stated for x > e^2")
    lx = math.log(x)
    f = shearer_f(x)
    s1 = (x / (x - 1)) ** 2 * (lx / x - (x - 1) / x**2)
    s2 = (lx - 1) / x
    s3 = lx / (2 * x)
    steps = [f - s1 * (1 - REL_TOL), s1 - s2 * (1 - REL_TOL), s2 - s3 + MONO_TOL]
    fin = f - s3 + MONO_TOL
    ok = all(m >= 0 for m in steps) and fin >= 0
    return Check(x, f, s3, fin, ok, "f-lower")


# ----------------------------------------------------------------------------
# the function A(n)


def _log_terms(n: float):
    if not n > 1:
        raise DomainError("A(n) needs n > 1")
    ln = math.log(n)
    x = n ** -0.75
    l1 = math.log1p(-x)
    # log(n - n^{1/4}) = log n + log(1 - n^{-3/4})
    ln2 = ln + l1
    if not ln2 > 0:
        raise DomainError("A(n) needs n - n^(1/4) > 1")
    return ln, x, l1, ln2


def one_minus_A(n: float, params: BoundParams = DEFAULT) -> float:
    """1 - A(n), computed without cancellation."""
    ln, x, l1, ln2 = _log_terms(n)
    # log of the first term; log(ln / ln2) = -log1p(l1 / ln) avoids cancellation
    log_b = 1.25 * l1 - math.log1p(l1 / ln)
    tail = 3.0 / params.c2 * ln * n ** -0.25
    return -math.expm1(log_b) - tail


def A(n: float, params: BoundParams = DEFAULT) -> float:
    """(1 - n^{-3/4})^{5/4} log n / log(n - n^{1/4}) + (3/c2) log n / n^{1/4}."""
    ln, x, l1, ln2 = _log_terms(n)
    return math.exp(1.25 * l1) * ln / ln2 + 3.0 / params.c2 * ln * n ** -0.25


def a_crossing(params: BoundParams = DEFAULT, lo: float = 8.0, hi: float = 700.0) -> float | None:
    """log n where A(n) first reaches 1 (by bisection on log n), or None if A < 1 on [e^lo, e^hi].

    The (3/c2) log n / n^{1/4} term of A decays more slowly than
    1 - (first term) ~ (5/4) n^{-3/4}, so for large enough n it wins.
    """
    def gap(L):
        return one_minus_A(math.exp(L), params)

    if gap(lo) <= 0:
        return lo
    # coarse scan for the first sign change, then bisect
    step = 1.0
    a = lo
    while a < hi:
        b = min(a + step, hi)
        if gap(b) <= 0:
            while b - a > 1e-12 * b:
                mid = 0.5 * (a + b)
                if gap(mid) > 0:
                    a = mid
                else:
                    b = mid
            return b
        a = b
    return None


def taylor_scaled_gap(n: float, params: BoundParams = DEFAULT) -> float:
    """n^{3/4} (1 - A(n)); tends to 5/4."""
    return n**0.75 * one_minus_A(n, params)


def check_taylor(n: float, params: BoundParams = DEFAULT, rel: float = 0.01) -> Check:
    v = taylor_scaled_gap(n, params)
    err = abs(v - 1.25) / 1.25
    return Check(n, v, 1.25, rel - err, err <= rel, "taylor", f"relative error {err:.4g}")


# ----------------------------------------------------------------------------
# the inequalities of the induction


def check_inequality_1(n: int, params: BoundParams = DEFAULT) -> Check:
    """5 n^{3/2} / sqrt(log n) <= c2 n^{5/4} / log n, in logs."""
    if not 3 <= n <= math.floor(E8):
        raise DomainError(f"inequality (1) is used for 3 <= n <= {math.floor(E8)}")
    ln = math.log(n)
    lhs = math.log(5) + 1.5 * ln - 0.5 * math.log(ln)
    rhs = params.log_c2 + 1.25 * ln - math.log(ln)
    return Check(n, lhs, rhs, rhs - lhs, lhs <= rhs, "inequality-1", "log scale")


def _log_upper_variant1(n: float, log_c2: float) -> float:
    return log_c2 + 1.25 * math.log(n) - math.log(math.log(n))


def check_inequality_5_6(n: float, params: BoundParams = DEFAULT) -> Check:
    """c2 (n - n^{1/4})^{5/4}/log(n - n^{1/4}) + 3n < c2 n^{5/4}/log n, raw and as A(n) < 1."""
    if not n >= E8 * (1 - 1e-15):
        raise DomainError("inequalities (5)-(6) are used for n >= e^8")
    ln, x, l1, ln2 = _log_terms(n)
    lc = params.log_c2
    log_rhs = _log_upper_variant1(n, lc)
    m = n - n**0.25
    ratio = math.exp(lc + 1.25 * math.log(m) - math.log(ln2) - log_rhs) + math.exp(math.log(3 * n) - log_rhs)
    a = A(n, params)
    if abs(ratio - a) > AGREE_TOL * abs(a):
        raise InconsistencyError(f"raw and normalized forms disagree at n={n}: {ratio} vs {a}")
    gap = one_minus_A(n, params)
    ok = ratio < 1 and gap > 0
    return Check(n, a, 1.0, gap, ok, "inequality-5-6")


def check_A_monotone(grid: GridSpec, params: BoundParams = DEFAULT) -> SuiteResult:
    """A is nondecreasing along the grid (decrease up to 1e-15 tolerated)."""
    if grid.lo < E8 * (1 - 1e-15):
        raise DomainError("monotonicity is claimed on [e^8, inf)")
    pts = grid.values()
    gaps = [one_minus_A(float(v), params) for v in pts]
    res = SuiteResult("a-monotone")
    for i in range(1, len(pts)):
        # A[i] - A[i-1] = gap[i-1] - gap[i]
        inc = gaps[i - 1] - gaps[i]
        res.checks.append(Check(float(pts[i]), 1 - gaps[i], 1 - gaps[i - 1], inc + MONO_TOL, inc >= -MONO_TOL, "a-monotone"))
    return res


def check_case2(n: float, params: BoundParams = DEFAULT) -> Check:
    """(c2 n^{5/4}/log n) f(n^{1/4}) > n, the low-average-degree contradiction."""
    lhs = _log_upper_variant1(n, params.log_c2) + math.log(shearer_f(n**0.25))
    rhs = math.log(n)
    return Check(n, lhs, rhs, lhs - rhs, lhs > rhs, "case-2", "log scale")


def check_contradiction(n: float, params: BoundParams = DEFAULT) -> Check:
    """upper_bound_t3(n - n^{1/4}) + 3n < upper_bound_t3(n) with the log n denominator."""
    p1 = params.with_variant(1.0)
    lo = log_upper_bound_t3(n - n**0.25, p1)
    hi = log_upper_bound_t3(n, p1)
    lhs = hi + math.log(math.exp(lo - hi) + math.exp(math.log(3 * n) - hi))
    return Check(n, lhs, hi, hi - lhs, lhs < hi, "contradiction", "log scale")


# ----------------------------------------------------------------------------
# asymptotic bounds


def log_upper_bound_t3(n: float, params: BoundParams = DEFAULT) -> float:
    if not n > 1:
        raise DomainError("needs n > 1")
    return params.log_c2 + 1.25 * math.log(n) - params.log_exponent_variant * math.log(math.log(n))


def upper_bound_t3(n: float, params: BoundParams = DEFAULT) -> float:
    """c2 n^{5/4} / (log n)^e with e the selected log exponent."""
    return math.exp(log_upper_bound_t3(n, params))


def log_rousseau_speed(n: float) -> float:
    """log of 5 n^{3/2} / sqrt(log n)."""
    return math.log(5) + 1.5 * math.log(n) - 0.5 * math.log(math.log(n))


def upper_bound_crossover(params: BoundParams = DEFAULT, tol: float = 1e-12) -> float:
    """log n at which upper_bound_t3 drops below 5 n^{3/2}/sqrt(log n), by bisection on log n."""

    def g(L):
        return (params.log_c2 + 1.25 * L - params.log_exponent_variant * math.log(L)) - (
            math.log(5) + 1.5 * L - 0.5 * math.log(L)
        )

    lo, hi = 1.0, 1.0
    while g(hi) > 0:
        hi *= 2
        if hi > 1e9:
            raise DomainError("no crossover found")
    lo = hi / 2 if hi > 1 else 1.0
    if g(lo) <= 0:
        lo = 1.0
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def krivelevich_lower(n: float, params: BoundParams = DEFAULT) -> float:
    """c1 (n / log n)^{5/4}."""
    if not n > 1:
        raise DomainError("needs n > 1")
    return params.c1 * (n / math.log(n)) ** 1.25


def log_spencer_lower(m: int, n: float, params: BoundParams = DEFAULT) -> float:
    if m < 3:
        raise DomainError("stated for m >= 3")
    if not n > 1:
        raise DomainError("needs n > 1")
    c = params.c4 if m == 4 else params.cm
    return math.log(c) + (m + 1) / 2 * (math.log(n) - math.log(math.log(n)))


def spencer_lower(m: int, n: float, params: BoundParams = DEFAULT) -> float:
    """c_m (n / log n)^{(m+1)/2}; c4 is used for m = 4, cm otherwise."""
    return math.exp(log_spencer_lower(m, n, params))


def log_ratio_t4_r4(n: float, params: BoundParams = DEFAULT) -> float:
    if not n > 1:
        raise DomainError("needs n > 1")
    ln = math.log(n)
    return math.log(4 / 9) + params.log_c2 - math.log(params.c4) + 2.5 * math.log(ln) - 0.25 * ln


def ratio_t4_r4(n: float, params: BoundParams = DEFAULT) -> float:
    """4 c2 (log n)^{5/2} / (9 c4 n^{1/4}); may overflow to inf for moderate n."""
    try:
        return math.exp(log_ratio_t4_r4(n, params))
    except OverflowError:
        return math.inf


def check_ratio_decreasing_log(log_grid: Iterable[float], params: BoundParams = DEFAULT) -> SuiteResult:
    """Strict decrease of the ratio across consecutive points given as log n values."""
    res = SuiteResult("ratio-decreasing")
    prev = None
    for L in log_grid:
        cur = log_ratio_t4_r4(math.exp(L), params) if L < 700 else _log_ratio_from_log(L, params)
        if prev is not None:
            res.checks.append(Check(math.exp(L) if L < 700 else math.inf, cur, prev, prev - cur, cur < prev, "ratio-decreasing", f"log n = {L:.6g}"))
        prev = cur
    return res


def _log_ratio_from_log(L: float, params: BoundParams) -> float:
    return math.log(4 / 9) + params.log_c2 - math.log(params.c4) + 2.5 * math.log(L) - 0.25 * L


def check_ratio_below(log_n: float, eps: float, params: BoundParams = DEFAULT) -> Check:
    """ratio_t4_r4(e^{log_n}) < eps, evaluated in log space."""
    v = _log_ratio_from_log(log_n, params)
    b = math.log(eps)
    return Check(math.exp(log_n) if log_n < 700 else math.inf, v, b, b - v, v < b, "ratio-below",
                 f"log scale, log n = {log_n:g}")


def ratio_threshold(eps: float, params: BoundParams = DEFAULT) -> float:
    """Smallest log n >= 10 past which the ratio stays below eps (bisection; the ratio decreases there)."""
    target = math.log(eps)
    lo = 10.0
    if _log_ratio_from_log(lo, params) < target:
        return lo
    hi = 20.0
    while _log_ratio_from_log(hi, params) >= target:
        hi *= 2
    while hi - lo > 1e-12 * hi:
        mid = 0.5 * (lo + hi)
        if _log_ratio_from_log(mid, params) >= target:
            lo = mid
        else:
            hi = mid
    return hi


# ----------------------------------------------------------------------------
# the sum over t(3,k)


@dataclass
class RecurrenceReport:
    """Sum of the t(3,k) upper bounds for k = 1..n against (4/9) C [(n+1)^{9/4} - 1].

    The k = 1 term is the exact value t(3,1) = 1 (the closed-form bound has
    log 1 = 0 in its denominator).  Values are natural logs.
    """

    n: int
    log_sum: float
    log_closed_form: float
    constant: float
    variant: str
    terms: int

    @property
    def dominates(self) -> bool:
        return self.log_closed_form >= self.log_sum

    @property
    def margin(self) -> float:
        return self.log_closed_form - self.log_sum


def _log_closed_form(n: int, log_c: float) -> float:
    return math.log(4 / 9) + log_c + math.log(math.expm1(2.25 * math.log1p(n))) if n > 0 else -math.inf


def recurrence_sum_bound(n: int, params: BoundParams = DEFAULT, constant: float = E8) -> RecurrenceReport:
    if n < 1:
        raise DomainError("needs n >= 1")
    logs = [0.0]
    logs += [log_upper_bound_t3(k, params) for k in range(2, n + 1)]
    top = max(logs)
    log_sum = top + math.log(math.fsum(math.exp(v - top) for v in logs))
    return RecurrenceReport(n, log_sum, _log_closed_form(n, math.log(constant)), constant, params.variant_name, len(logs))


def power_sum_bound(n_max: int) -> Check:
    """sum_{k<=n} k^{5/4} <= (4/9)[(n+1)^{9/4} - 1] for every n <= n_max; reports the worst relative margin."""
    k = np.arange(1, n_max + 1, dtype=np.float64)
    sums = np.cumsum(k**1.25)
    closed = (4 / 9) * np.expm1(2.25 * np.log1p(k))
    rel = (closed - sums) / closed
    i = int(np.argmin(rel))
    return Check(i + 1, float(sums[i]), float(closed[i]), float(rel[i]), bool(np.all(closed >= sums)), "power-sum")


def term_step_failures(n: int, params: BoundParams = DEFAULT) -> list[int]:
    """k in 2..n where c2 k^{5/4}/(log k)^{1/4} <= e^8 k^{5/4} fails."""
    lc = params.log_c2
    return [k for k in range(2, n + 1) if lc - 0.25 * math.log(math.log(k)) > 8]


# ----------------------------------------------------------------------------
# named suites (shared by the CLI and the acceptance tests)

DEFAULT_HI = 1e12
DEFAULT_POINTS = 10_000


def _grid(lo=E8, hi=DEFAULT_HI, points=DEFAULT_POINTS):
    return [float(v) for v in GridSpec(lo, hi, points).values()]


def suite_inequality_1(params=DEFAULT):
    return [check_inequality_1(n, params) for n in range(3, math.floor(E8) + 1)]


def suite_inequality_5_6(params=DEFAULT):
    return [check_inequality_5_6(n, params) for n in _grid()]


def suite_a_monotone(params=DEFAULT):
    return check_A_monotone(GridSpec(E8, DEFAULT_HI, DEFAULT_POINTS), params).checks


def suite_a_below_one(params=DEFAULT):
    out = []
    for n in _grid():
        gap = one_minus_A(n, params)
        out.append(Check(n, 1 - gap, 1.0, gap, gap > 0, "a-below-one"))
    return out


def suite_taylor(params=DEFAULT):
    return [check_taylor(DEFAULT_HI, params)]


def suite_f_lower(params=DEFAULT):
    pts = GridSpec(E2, 1e9, 1001).values()[1:]
    return [f_lower_estimate_holds(float(x)) for x in pts]


def suite_f_decreasing(params=DEFAULT):
    pts = [float(v) for v in GridSpec(1e-6, 1e6, 2001).values()]
    out = []
    for a, b in zip(pts, pts[1:]):
        fa, fb = shearer_f(a), shearer_f(b)
        out.append(Check(b, fb, fa, fa - fb, fb < fa, "f-decreasing"))
    return out


def suite_ratio_decreasing(params=DEFAULT):
    return check_ratio_decreasing_log(np.linspace(10.0, 1000.0, 1000), params).checks


def suite_ratio_below(params=DEFAULT):
    return [check_ratio_below(300.0, 1e-3, params)]


def suite_case2(params=DEFAULT):
    return [check_case2(n, params) for n in _grid(points=1000)]


def suite_contradiction(params=DEFAULT):
    return [check_contradiction(n, params) for n in _grid(points=1000)]


def suite_recurrence(params=DEFAULT):
    out = []
    for n in (1, 10, 100, 1000, 10_000):
        r = recurrence_sum_bound(n, params)
        out.append(Check(n, r.log_sum, r.log_closed_form, r.margin, r.dominates, "recurrence",
                         f"log scale, variant {r.variant}"))
    return out


def suite_power_sum(params=DEFAULT):
    return [power_sum_bound(100_000)]


def suite_term_step(params=DEFAULT):
    lc = params.log_c2
    out = []
    for k in range(2, 101):
        lhs = lc - 0.25 * math.log(math.log(k))
        out.append(Check(k, lhs, 8.0, 8.0 - lhs, lhs <= 8.0, "term-step", "log of the per-term constant"))
    return out


def suite_shearer(params=DEFAULT, max_order=9):
    from .search import Constraints, enumerate_good

    cons = Constraints(clique=3)
    out = []
    for k in range(1, max_order + 1):
        for g in enumerate_good(cons, k):
            out.append(shearer_bound_holds(g))
    return out


SUITES = {
    "inequality-1": suite_inequality_1,
    "inequality-5-6": suite_inequality_5_6,
    "a-monotone": suite_a_monotone,
    "a-below-one": suite_a_below_one,
    "taylor": suite_taylor,
    "f-lower": suite_f_lower,
    "f-decreasing": suite_f_decreasing,
    "ratio-decreasing": suite_ratio_decreasing,
    "ratio-below": suite_ratio_below,
    "case-2": suite_case2,
    "contradiction": suite_contradiction,
    "recurrence": suite_recurrence,
    "power-sum": suite_power_sum,
    "term-step": suite_term_step,
    "shearer": suite_shearer,
}

# the suites whose inequalities are claimed to hold
CLAIMED = ("inequality-1", "inequality-5-6", "a-monotone", "a-below-one", "taylor", "f-lower",
           "f-decreasing", "ratio-decreasing", "ratio-below", "case-2", "contradiction", "power-sum")


def run_suite(name: str, params: BoundParams = DEFAULT) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise DomainError(f"unknown suite {name!r}") from None
    return SuiteResult(name, list(fn(params)))
