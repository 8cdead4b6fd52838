"""Quick oracle checks behind ``irramsey selftest``.

Each check compares the fast machinery with a naive brute-force version on
small orders; the whole run takes a few seconds.
"""

from __future__ import annotations

import itertools
import math
import random

from .canon import automorphism_group_order, canonical_code
from .certificate import Certificate, certificate_failure, parse_certificate
from .graph import Graph, complement, cycle_graph
from .irredundance import TwoColoring, blue_has_3_irredundant_direct, blue_has_3_irredundant_via_red, is_irredundant
from .search import Problem, compute_number, enumerate_good, good_coloring


def _naive_irredundant(g: Graph, s) -> bool:
    s = set(s)
    for v in s:
        others = s - {v}
        if not any(g.adj[v] >> w & 1 for w in others):
            continue
        priv = [u for u in range(g.order) if u not in s and g.adj[v] >> u & 1
                and not any(g.adj[w] >> u & 1 for w in others)]
        if not priv:
            return False
    return True


def _naive_good(p: Problem, g: Graph) -> bool:
    n = g.order
    vs = range(n)

    def edge(a, b):
        return g.adj[a] >> b & 1

    def indep(s):
        return all(not edge(a, b) for a, b in itertools.combinations(s, 2))

    if n >= p.m and any(all(edge(a, b) for a, b in itertools.combinations(s, 2)) for s in itertools.combinations(vs, p.m)):
        return False
    if p.kind != "r":
        blue = complement(g)
        if any(_naive_irredundant(blue, s) for s in itertools.combinations(vs, p.m)):
            return False
    if p.kind == "s":
        return not any(_naive_irredundant(g, s) for s in itertools.combinations(vs, p.n))
    return not any(indep(s) for s in itertools.combinations(vs, p.n))


def _all_graphs(n: int):
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_triangle_bits(n, bits)


def check_labeled_counts(max_order: int = 5) -> tuple[bool, str]:
    problems = [Problem(k, 3, n) for k in "str" for n in (3, 4)]
    bad = []
    for n in range(1, max_order + 1):
        graphs = list(_all_graphs(n))
        for p in problems:
            brute = sum(1 for g in graphs if _naive_good(p, g))
            canon = sum(math.factorial(n) // automorphism_group_order(g) for g in enumerate_good(p, n))
            if brute != canon:
                bad.append(f"{p}@{n}: {brute} vs {canon}")
    return not bad, "; ".join(bad) or f"orders 1..{max_order}, {len(problems)} problems"


def check_three_irredundant(max_order: int = 6) -> tuple[bool, str]:
    bad = 0
    total = 0
    for n in range(3, max_order + 1):
        for g in _all_graphs(n):
            c = TwoColoring(g)
            total += 1
            if blue_has_3_irredundant_direct(c) != blue_has_3_irredundant_via_red(c):
                bad += 1
    return bad == 0, f"{total} colorings, {bad} mismatches"


def check_irredundance(samples: int = 2000, seed: int = 1) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        n = rng.randint(1, 8)
        g = Graph.from_triangle_bits(n, rng.getrandbits(n * (n - 1) // 2))
        s = [v for v in range(n) if rng.random() < 0.5]
        if is_irredundant(g, s) != _naive_irredundant(g, s):
            bad += 1
    return bad == 0, f"{samples} random sets, {bad} mismatches"


def check_canonical(samples: int = 300, seed: int = 2) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(samples):
        n = rng.randint(1, 9)
        g = Graph.from_triangle_bits(n, rng.getrandbits(n * (n - 1) // 2))
        perm = list(range(n))
        rng.shuffle(perm)
        if canonical_code(g) != canonical_code(g.relabel(perm)):
            bad += 1
    classes = len({canonical_code(g) for g in _all_graphs(5)})
    return bad == 0 and classes == 34, f"{samples} relabelings, {bad} mismatches, {classes} classes on 5 vertices"


def check_small_numbers() -> tuple[bool, str]:
    got = {}
    for kind in "str":
        got[kind] = compute_number(Problem(kind, 3, 3), 7).value
    r34 = compute_number(Problem("r", 3, 4), 10).value
    ok = got == {"s": 6, "t": 6, "r": 6} and r34 == 9
    return ok, f"(s,t,r)(3,3) = ({got['s']},{got['t']},{got['r']}), r(3,4) = {r34}"


def check_certificates() -> tuple[bool, str]:
    res = compute_number(Problem("r", 3, 3), 7)
    wit = res.witness.to_text()
    exh = res.exhaustion.to_text()
    ok = certificate_failure(parse_certificate(wit)) is None and certificate_failure(parse_certificate(exh)) is None
    ok = ok and good_coloring(Problem("r", 3, 3), cycle_graph(5))
    # flipping any edge of a 5-vertex witness breaks it
    g = res.witness.witness
    flipped = Graph.from_triangle_bits(5, g.triangle_bits() ^ 1)
    tampered = Certificate(res.problem, "witness", 5, witness=flipped).to_text()
    ok = ok and certificate_failure(parse_certificate(tampered)) is not None
    return ok, "round trip and tampering"


CHECKS = [
    ("labeled-counts", check_labeled_counts),
    ("three-irredundant", check_three_irredundant),
    ("irredundance", check_irredundance),
    ("canonical-code", check_canonical),
    ("small-numbers", check_small_numbers),
    ("certificates", check_certificates),
]


def run_selftest(progress=None) -> list[tuple[str, bool, str]]:
    out = []
    for name, fn in CHECKS:
        if progress:
            progress(f"selftest {name}")
        ok, detail = fn()
        out.append((name, ok, detail))
    return out
