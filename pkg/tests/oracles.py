"""Naive reference implementations straight from the definitions.

Deliberately slow and free of bit tricks; tests compare the package
against these.
"""

import itertools
import math

from irramsey.graph import Graph


def edges_of(g):
    return {(u, v) for u in range(g.order) for v in range(u + 1, g.order) if g.adj[u] >> v & 1}


def adjacent(g, u, v):
    return bool(g.adj[u] >> v & 1)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pr for k, pr in enumerate(pairs) if bits >> k & 1])


def has_triangle(g):
    return any(adjacent(g, a, b) and adjacent(g, b, c) and adjacent(g, a, c)
               for a, b, c in itertools.combinations(range(g.order), 3))


def has_induced_c6(g):
    for s in itertools.combinations(range(g.order), 6):
        present = sum(adjacent(g, a, b) for a, b in itertools.combinations(s, 2))
        if present != 6:
            continue
        first = s[0]
        for rest in itertools.permutations(s[1:]):
            cyc = (first,) + rest
            if all(adjacent(g, cyc[i], cyc[(i + 1) % 6]) for i in range(6)):
                return True
    return False


def is_independent(g, s):
    return all(not adjacent(g, a, b) for a, b in itertools.combinations(s, 2))


def alpha(g):
    for k in range(g.order, -1, -1):
        if any(is_independent(g, s) for s in itertools.combinations(range(g.order), k)):
            return k
    return 0


def has_clique(g, k):
    return any(all(adjacent(g, a, b) for a, b in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.order), k))


def private(g, s, v):
    s = set(s)
    return {u for u in range(g.order) if u not in s and adjacent(g, u, v)
            and not any(adjacent(g, u, w) for w in s - {v})}


def irredundant(g, s):
    s = set(s)
    for v in s:
        isolated = not any(adjacent(g, v, w) for w in s - {v})
        if not isolated and not private(g, s, v):
            return False
    return True


def has_irredundant(g, k):
    return any(irredundant(g, s) for s in itertools.combinations(range(g.order), k))


def complement(g):
    n = g.order
    return Graph.from_edges(n, [(a, b) for a, b in itertools.combinations(range(n), 2) if not adjacent(g, a, b)])


def good(kind, m, n, g):
    """Definitions read directly: blue side first, then red side."""
    if kind == "r":
        if has_clique(g, m):
            return False
    elif has_irredundant(complement(g), m):
        return False
    if kind == "s":
        return not has_irredundant(g, n)
    return alpha(g) < n


def is_isomorphic(g, h):
    if g.order != h.order or len(edges_of(g)) != len(edges_of(h)):
        return False
    eh = edges_of(h)
    for perm in itertools.permutations(range(g.order)):
        if all(tuple(sorted((perm[u], perm[v]))) in eh for u, v in edges_of(g)):
            return True
    return False


def automorphisms(g):
    e = edges_of(g)
    return sum(1 for perm in itertools.permutations(range(g.order))
               if {tuple(sorted((perm[u], perm[v]))) for u, v in e} == e)


def labeled_count(kind, m, n, order):
    return sum(1 for g in all_graphs(order) if good(kind, m, n, g))


def orbit_weight(g):
    return math.factorial(g.order) // automorphisms(g)
