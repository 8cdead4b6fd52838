"""Structured witness constructions for orders beyond exhaustive reach.

Two generators: a scan over circulant graphs, and a seeded local search
over polycirculants (k orbits of Z_p with rotation-invariant connections).
Anything they return is re-checked with :func:`search.violation`.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .graph import Graph, circulant_graph
from .search import Problem, violation


def circulant_witness(p: Problem, order: int) -> tuple[tuple[int, ...], Graph] | None:
    """First circulant good coloring, scanning jump sets by size then lexicographically."""
    half = order // 2
    for r in range(1, half + 1):
        for jumps in itertools.combinations(range(1, half + 1), r):
            g = circulant_graph(order, jumps)
            if violation(p, g) is None:
                return jumps, g
    return None


@dataclass(frozen=True)
class Polycirculant:
    """Vertices a*p + i for orbit a and i in Z_p; ``conn[(a, b)]`` are the offsets d with a_i ~ b_{i+d}."""

    p: int
    orbits: int
    conn: tuple[tuple[tuple[int, int], frozenset[int]], ...]

    def graph(self) -> Graph:
        p = self.p
        n = p * self.orbits
        adj = [0] * n
        for (a, b), offs in self.conn:
            for d in offs:
                for i in range(p):
                    u, v = a * p + i, b * p + (i + d) % p
                    if u != v:
                        adj[u] |= 1 << v
                        adj[v] |= 1 << u
        return Graph.trusted(n, adj)


def _triangles(adj) -> int:
    t = 0
    for u, row in enumerate(adj):
        x = row >> (u + 1)
        v = u + 1
        while x:
            if x & 1:
                t += (adj[u] & adj[v]).bit_count()
            x >>= 1
            v += 1
    return t // 3


def _induced_c6(adj) -> int:
    # chordless 6-cycles of a triangle-free graph, each found from its least vertex in two directions
    n = len(adj)
    cnt = 0
    for a in range(n):
        hi = ~((1 << (a + 1)) - 1)
        stack = [(1, 1 << a, a)]
        while stack:
            k, blocked, last = stack.pop()
            cand = adj[last] & hi & ~blocked
            while cand:
                lo = cand & -cand
                v = lo.bit_length() - 1
                cand ^= lo
                if k < 5:
                    if k > 1 and adj[v] >> a & 1:
                        continue
                    stack.append((k + 1, blocked | lo | (adj[last] if k > 1 else 0), v))
                elif adj[v] >> a & 1:
                    cnt += 1
    return cnt // 2


def _independent_sets(adj, k: int, cap: int) -> int:
    n = len(adj)
    cnt = 0
    stack = [((1 << n) - 1, k)]
    while stack and cnt < cap:
        cand, need = stack.pop()
        if need == 0:
            cnt += 1
            continue
        while cand and cand.bit_count() >= need:
            lo = cand & -cand
            cand ^= lo
            stack.append((cand & ~adj[lo.bit_length() - 1], need - 1))
    return cnt


def _score(g: Graph, n: int) -> tuple[int, int, int]:
    adj = g.adj
    t = _triangles(adj)
    if t:
        return t, 10**9, 10**9
    return 0, _induced_c6(adj), _independent_sets(adj, n, 5000)


def polycirculant_search(p_: Problem, p: int, orbits: int, seed: int = 1, budget: float = 600.0,
                         steps: int = 200, density: float = 0.3) -> Graph | None:
    """Steepest-descent with random restarts on (triangles, induced C6s, independent n-sets).

    Only kind t with m = 3 is scored; the result is re-checked with the
    full predicate before being returned.
    """
    if p_.kind != "t" or p_.m != 3:
        raise ValueError("polycirculant search scores t(3,n) only")
    rng = random.Random(seed)
    keys = [(a, b) for a in range(orbits) for b in range(a, orbits)]
    moves = [(k, d) for k in keys for d in (range(1, p // 2 + 1) if k[0] == k[1] else range(p))]

    def make(conn):
        return Polycirculant(p, orbits, tuple((k, frozenset(conn[k])) for k in keys))

    def flip(conn, key, d):
        out = {k: set(v) for k, v in conn.items()}
        out[key] ^= {d, (-d) % p} if key[0] == key[1] else {d}
        return out

    deadline = time.monotonic() + budget
    while time.monotonic() < deadline:
        conn = {k: set() for k in keys}
        for key, d in moves:
            if rng.random() < density:
                conn = flip(conn, key, d)
        cur = _score(make(conn).graph(), p_.n)
        for _ in range(steps):
            order = moves[:]
            rng.shuffle(order)
            best = None
            for key, d in order:
                cand = flip(conn, key, d)
                s = _score(make(cand).graph(), p_.n)
                if best is None or s < best[0]:
                    best = (s, cand)
            if best[0] <= cur:
                cur, conn = best
            else:
                key, d = rng.choice(moves)
                conn = flip(conn, key, d)
                cur = _score(make(conn).graph(), p_.n)
            if cur == (0, 0, 0):
                g = make(conn).graph()
                if violation(p_, g) is None:
                    return g
            if time.monotonic() > deadline:
                break
    return None
