"""Acceptance criteria, one test (and one summary line) per criterion.

Set IRRAMSEY_EXTENDED=1 to run the long exhaustions of criterion 3 with the
full budget (IRRAMSEY_EXTENDED_BUDGET seconds each, default 24 h); without
it they run with a short budget and are reported as unresolved.
"""

import math
import os
import random
import time
from collections import Counter

import pytest

from irramsey import bounds
from irramsey.canon import automorphism_group_order
from irramsey.certificate import Certificate, certificate_failure, parse_certificate, stored_certificates
from irramsey.cli import main
from irramsey.construct import circulant_witness, polycirculant_search
from irramsey.graph import Graph, complement, contains_triangle, independence_number, members
from irramsey.irredundance import (
    TwoColoring, blue_has_3_irredundant_direct, blue_has_3_irredundant_via_red, check_hattingh,
    has_irredundant_set, is_irredundant,
)
from irramsey.search import Constraints, Problem, chain_check, compute_number, enumerate_good, find_witness, good_coloring

import oracles

EXTENDED = os.environ.get("IRRAMSEY_EXTENDED") == "1"
SHORT_BUDGET = float(os.environ.get("IRRAMSEY_SHORT_BUDGET", "20"))
LONG_BUDGET = float(os.environ.get("IRRAMSEY_EXTENDED_BUDGET", str(24 * 3600)))


def _labeled_graphs(n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph.trusted(n, adj)


@pytest.fixture(scope="module")
def sweep7():
    """One pass over all 2^21 labeled graphs on 7 vertices.

    Records the two blue 3-irredundance routes and, from the definitions,
    labeled counts of good colorings for s, t, r with m = 3, n in {3, 4}.
    """
    t0 = time.monotonic()
    mismatches = 0
    counts = Counter()
    for g in _labeled_graphs(7):
        c = TwoColoring(g)
        blue3 = blue_has_3_irredundant_direct(c)
        if blue3 != blue_has_3_irredundant_via_red(c):
            mismatches += 1
        alpha = independence_number(g)
        tri = contains_triangle(g)
        for n in (3, 4):
            if not blue3 and alpha < n:
                counts["t", n] += 1
            if not tri and alpha < n:
                counts["r", n] += 1
            if not blue3 and not has_irredundant_set(g, n):
                counts["s", n] += 1
    return mismatches, counts, time.monotonic() - t0


def test_criterion_1_characterization_oracle(sweep7, record):
    mismatches, _, elapsed = sweep7
    # and on every isomorphism class of 8-vertex graphs
    classes = 0
    bad8 = 0
    for g in enumerate_good(Constraints(), 8):
        c = TwoColoring(g)
        classes += 1
        bad8 += blue_has_3_irredundant_direct(c) != blue_has_3_irredundant_via_red(c)
    ok = mismatches == 0 and bad8 == 0 and classes == 12346 and elapsed <= 600
    record(1, ok, f"2^21 colorings of K7: {mismatches} mismatches in {elapsed:.0f}s; "
                  f"{classes} classes on 8 vertices: {bad8} mismatches")
    assert ok


def test_criterion_2_small_values(sweep7, record):
    _, labeled7, _ = sweep7
    t0 = time.monotonic()
    # orbit-weighted canonical counts against labeled brute force, N <= 7
    count_bad = []
    for kind in "str":
        for n in (3, 4):
            p = Problem(kind, 3, n)
            for order in range(1, 8):
                canon = sum(math.factorial(order) // automorphism_group_order(g) for g in enumerate_good(p, order))
                if order < 7:
                    brute = oracles.labeled_count(kind, 3, n, order)
                else:
                    brute = labeled7[kind, n]
                if canon != brute:
                    count_bad.append(f"{p}@{order}")
    values = {}
    chains = {}
    for n in (3, 4, 5, 6):
        chains[n] = {k: compute_number(Problem(k, 3, n), 15) for k in "str"}
        for k, res in chains[n].items():
            values[f"{k}(3,{n})"] = res.value if res.solved else f">={res.lower_bound}"
    elapsed = time.monotonic() - t0
    ok = (not count_bad and values["r(3,3)"] == 6 and values["r(3,4)"] == 9
          and all(chain_check(chains[n]) for n in chains) and elapsed <= 1800)
    shown = ", ".join(f"{k}={v}" for k, v in values.items())
    record(2, ok, f"{shown}; brute-force count mismatches: {count_bad or 'none'}; {elapsed:.0f}s")
    assert ok


EXTENDED_TARGETS = [(Problem("t", 3, 7), 18), (Problem("t", 3, 8), 22), (Problem("s", 3, 8), 21)]


def test_criterion_3_known_values(record):
    notes = []
    ok = True
    # stored witnesses, re-verified from the files and by the naive definitions
    stored = stored_certificates()
    for p, value in EXTENDED_TARGETS:
        name = f"{p.kind}_{p.m}_{p.n}_witness_{value - 1}.irx"
        cert = stored.get(name)
        good = cert is not None and certificate_failure(cert) is None and oracles.good(p.kind, p.m, p.n, cert.witness)
        ok &= good
        notes.append(f"{p}>{value - 1} witness {'verified' if good else 'MISSING/BAD'}")
    # and regenerated live with the package constructions
    live = {
        "t(3,7)": find_witness(Problem("t", 3, 7), 17, budget=300),
        "s(3,8)": (circulant_witness(Problem("s", 3, 8), 20) or (None, None))[1],
        "t(3,8)": polycirculant_search(Problem("t", 3, 8), 7, 3, seed=1, budget=600),
    }
    for (p, value), g in zip(EXTENDED_TARGETS, (live["t(3,7)"], live["t(3,8)"], live["s(3,8)"])):
        good = g is not None and g.order == value - 1 and good_coloring(p, g)
        ok &= good
    notes.append("live regeneration " + ("ok" if ok else "FAILED"))
    # exhaustions: solved with the expected value, or explicitly unresolved
    budget = LONG_BUDGET if EXTENDED else SHORT_BUDGET
    for p, value in EXTENDED_TARGETS:
        res = compute_number(p, 22, budget=budget)
        if res.solved:
            good = res.value == value
            notes.append(f"{p}={res.value} exhausted")
        else:
            good = res.reason in ("cap", "budget") and res.lower_bound >= 1
            notes.append(f"{p} unresolved ({res.reason}, {budget:.0f}s budget, engine lower bound {res.lower_bound})")
        ok &= good
    record(3, ok, "; ".join(notes))
    assert ok


def test_criterion_4_hattingh(record):
    total = 0
    bad = 0
    for n in range(2, 6):
        p = Problem("t", 3, n)
        for order in range(1, 12):
            for g in enumerate_good(p, order):
                total += 1
                bad += not check_hattingh(TwoColoring(g))
    ok = bad == 0 and total > 0
    record(4, ok, f"{total} good colorings for t(3,n), n<=5; {bad} counterexamples")
    assert ok


def test_criterion_5_shearer(record):
    t0 = time.monotonic()
    res = bounds.run_suite("shearer")
    elapsed = time.monotonic() - t0
    bad = sum(1 for c in res.checks if not c)
    worst = min(c.margin for c in res.checks)
    ok = bad == 0 and len(res.checks) == 1 + 2 + 3 + 7 + 14 + 38 + 107 + 410 + 1897 and elapsed <= 300
    record(5, ok, f"{len(res.checks)} triangle-free classes, {bad} failures, min slack {worst:.4f}, {elapsed:.1f}s")
    assert ok


# criterion 6 splits into the parts that hold and two that do not

SIX_HOLDING = {
    "inequality-1 on 3..2980": "inequality-1",
    "inequalities (5)-(6) on 10^4-point log grid [e^8, 10^12]": "inequality-5-6",
    "A monotone on the same grid": "a-monotone",
    "f lower estimate on 10^3-point grid (e^2, 10^9]": "f-lower",
    "ratio decreasing for log n in [10, 1000]": "ratio-decreasing",
}
SIX_FAILING = {
    "n^(3/4)(1-A(n)) within 1% of 5/4 at n=10^12": "taylor",
    "ratio < 10^-3 at n=e^300": "ratio-below",
}
_six = {}


def _run_six(name):
    t0 = time.monotonic()
    res = bounds.run_suite(name)
    _six[name] = (res, time.monotonic() - t0)
    return res


@pytest.mark.parametrize("label", list(SIX_HOLDING))
def test_criterion_6_holding_parts(label):
    res = _run_six(SIX_HOLDING[label])
    assert res.passed, [c for c in res.checks if not c][:3]


@pytest.mark.parametrize("label", list(SIX_FAILING))
@pytest.mark.xfail(strict=True, reason="false at the stated point; see README, 'Known failing criteria'")
def test_criterion_6_failing_parts(label):
    res = _run_six(SIX_FAILING[label])
    c = res.checks[0]
    print(f"{label}: value {c.value:.6g}, bound {c.bound:.6g}, margin {c.margin:.6g}")
    assert res.passed


def test_criterion_6_summary(record):
    for name in list(SIX_HOLDING.values()) + list(SIX_FAILING.values()):
        if name not in _six:
            _run_six(name)
    total = sum(t for _, t in _six.values())
    parts = []
    for label, name in {**SIX_HOLDING, **SIX_FAILING}.items():
        res, _ = _six[name]
        extra = ""
        if name == "taylor":
            c = res.checks[0]
            extra = f" (got {c.value:.5f}, {abs(c.value - 1.25) / 1.25:.2%} off)"
        if name == "ratio-below":
            extra = f" (log ratio {res.checks[0].value:+.2f})"
        parts.append(f"{label}: {'ok' if res.passed else 'FAIL'}{extra}")
    ok = all(r.passed for r, _ in _six.values()) and total <= 60
    record(6, ok, "; ".join(parts) + f"; {total:.1f}s")
    # the failing parts are asserted (as strict xfails) above; here only the ones claimed to hold
    assert all(_six[n][0].passed for n in SIX_HOLDING.values()) and total <= 60


def test_criterion_7_heredity(record):
    rng = random.Random(7)
    # good-coloring heredity on sampled enumerated graphs of order <= 8
    pool = []
    for p in [Problem(k, 3, n) for k in "str" for n in (3, 4, 5)]:
        for order in range(2, 9):
            pool.extend((p, g) for g in enumerate_good(p, order))
    her_bad = 0
    for _ in range(10_000):
        p, g = rng.choice(pool)
        v = rng.randrange(g.order)
        her_bad += not good_coloring(p, g.delete_vertex(v))
    # downward irredundance on random irredundant sets
    irr_bad = 0
    done = 0
    while done < 10_000:
        n = rng.randint(1, 8)
        g = Graph.from_triangle_bits(n, rng.getrandbits(n * (n - 1) // 2))
        s = rng.getrandbits(n)
        if not is_irredundant(g, s):
            continue
        done += 1
        sub = s & rng.getrandbits(n)
        irr_bad += not is_irredundant(g, sub)
        irr_bad += any(not is_irredundant(g, s & ~(1 << v)) for v in members(s))
    ok = her_bad == 0 and irr_bad == 0
    record(7, ok, f"heredity: 10^4 deletions, {her_bad} violations; irredundance: 10^4 sets, {irr_bad} violations")
    assert ok


def test_criterion_8_determinism(tmp_path, record, capsys):
    runs = []
    for i in range(2):
        out = tmp_path / f"run{i}"
        for kind, n in (("r", 3), ("t", 4), ("s", 5)):
            assert main(["search", "--kind", kind, "--n", str(n), "--out", str(out)]) == 0
        runs.append({f.name: f.read_bytes() for f in sorted(out.iterdir())})
    identical = runs[0] == runs[1]
    accepted = all(main(["verify", str(f)]) == 0 for f in sorted((tmp_path / "run0").iterdir()))
    # the three standard tamperings
    wit = parse_certificate(runs[0]["t_3_4_witness_8.irx"].decode())
    g = wit.witness
    rejected = 0
    for u in range(g.order):
        for v in range(u + 1, g.order):
            edges = set(g.edges()) ^ {(u, v)}
            bad = Certificate(wit.problem, "witness", wit.order, witness=Graph.from_edges(g.order, edges))
            rejected += certificate_failure(parse_certificate(bad.to_text())) is not None
    flips = g.order * (g.order - 1) // 2
    exh = runs[0]["t_3_4_exhaustion_9.irx"].decode()
    count_edit = exh.replace("count 5 9", "count 5 10")
    header_edit = runs[0]["r_3_3_witness_5.irx"].decode().replace("kind=r m=3 n=3", "kind=r m=3 n=2")
    tamper = {
        "edge flip": rejected == flips,
        "count edit": certificate_failure(parse_certificate(count_edit)) is not None,
        "header edit": certificate_failure(parse_certificate(header_edit)) is not None,
    }
    capsys.readouterr()
    ok = identical and accepted and all(tamper.values())
    record(8, ok, f"byte-identical: {identical}; all accepted: {accepted}; rejected "
                  + ", ".join(f"{k}: {v}" for k, v in tamper.items())
                  + f" ({rejected}/{flips} edge flips)")
    assert ok
