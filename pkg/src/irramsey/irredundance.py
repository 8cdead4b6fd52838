"""Irredundant sets, the red-structure test for blue 3-irredundance, and the
bipartite-neighborhood structure of colorings without one."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    as_mask,
    complement,
    find_induced_c6,
    find_triangle,
    induced_subgraph,
    is_bipartite,
    iter_bits,
    members,
)


class HypothesisError(GraphError):
    """The coloring violates the hypothesis of a structure check.

    ``witness`` holds the offending red triangle or induced 6-cycle.
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class TwoColoring:
    """Red/blue coloring of K_N; only the red graph is stored."""

    red: Graph

    @property
    def order(self) -> int:
        return self.red.order

    @property
    def blue(self) -> Graph:
        return complement(self.red)

    def red_neighbors(self, v: int) -> int:
        return self.red.adj[v]

    def blue_neighbors(self, v: int) -> int:
        return self.red.full & ~self.red.adj[v] & ~(1 << v)

    def red_degree(self, v: int) -> int:
        return self.red.adj[v].bit_count()

    def blue_degree(self, v: int) -> int:
        return self.order - 1 - self.red_degree(v)


@dataclass(frozen=True)
class D2Partition:
    v: int
    d2: int
    dgt2: int


def private_neighbors(g: Graph, s: VertexSet | Iterable[int], v: int) -> int:
    """Vertices outside ``s`` adjacent to ``v`` and to no other member of ``s``."""
    m = as_mask(s)
    if not m >> v & 1:
        raise GraphError(f"vertex {v} is not in the set")
    others = 0
    for w in iter_bits(m & ~(1 << v)):
        others |= g.adj[w]
    return g.adj[v] & ~others & ~m


def is_irredundant(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    m = as_mask(s)
    adj = g.adj
    once = twice = 0
    for w in iter_bits(m):
        twice |= once & adj[w]
        once |= adj[w]
    for x in iter_bits(m):
        ax = adj[x]
        if ax & m and not ax & ~twice & ~m:
            return False
    return True


def _irr_search(adj, cand: int, chosen: int, once: int, twice: int, need: int) -> int:
    # extends ``chosen`` (irredundant) by vertices of ``cand``; returns a found set or 0
    if need == 0:
        return chosen
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        w = low.bit_length() - 1
        cand ^= low
        aw = adj[w]
        new = chosen | low
        tw = twice | (once & aw)
        on = once | aw
        ok = True
        for x in iter_bits(new):
            ax = adj[x]
            if ax & new and not ax & ~tw & ~new:
                ok = False
                break
        if ok:
            found = _irr_search(adj, cand, new, on, tw, need - 1)
            if found:
                return found
    return 0


def find_irredundant_set(g: Graph, k: int, within: int | None = None) -> int | None:
    """Some irredundant k-set, as a mask, or None.

    Subsets are extended in increasing vertex order; an extension that is
    not irredundant is abandoned along with all of its supersets.
    With ``within`` only members from that set are used (private neighbors
    may lie anywhere).
    """
    if k <= 0:
        return 0
    cand = g.full if within is None else within
    found = _irr_search(g.adj, cand, 0, 0, 0, k)
    return found or None


def has_irredundant_set(g: Graph, k: int) -> bool:
    return find_irredundant_set(g, k) is not None


def find_irredundant_set_through(g: Graph, k: int, v: int) -> int | None:
    """An irredundant k-set of ``g`` that contains ``v`` or has ``v`` as a private neighbor.

    These are the only irredundant sets of ``g`` that can fail to be
    irredundant in ``g - v``.
    """
    adj = g.adj
    rest = g.full & ~(1 << v)
    av = adj[v]
    if k <= 0:
        return None
    # sets containing v
    found = _irr_search(adj, rest, 1 << v, av, 0, k - 1) if k >= 1 else 0
    if found:
        return found
    # sets avoiding v with exactly one member adjacent to v
    for x in iter_bits(av):
        ax = adj[x]
        chosen = 1 << x
        cand = rest & ~av & ~chosen
        found = _irr_search(adj, cand, chosen, ax, 0, k - 1)
        if found:
            return found
    return None


def blue_has_3_irredundant_direct(c: TwoColoring) -> bool:
    if c.order < 3:
        return False
    return has_irredundant_set(c.blue, 3)


def blue_has_3_irredundant_via_red(c: TwoColoring) -> bool:
    """Red contains a triangle or an induced 6-cycle."""
    if c.order < 3:
        return False
    return find_triangle(c.red) is not None or find_induced_c6(c.red) is not None


def red_distances(c: TwoColoring, v: int) -> list[int | None]:
    """Breadth-first distances from ``v`` in the red graph (None when unreachable)."""
    adj = c.red.adj
    dist: list[int | None] = [None] * c.order
    dist[v] = 0
    seen = frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        for u in iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def d2_partition(c: TwoColoring, v: int) -> D2Partition:
    """Split the blue neighborhood of ``v`` by red distance: exactly 2 versus more (or unreachable)."""
    if not 0 <= v < c.order:
        raise GraphError(f"vertex {v} outside coloring")
    adj = c.red.adj
    second = 0
    for u in iter_bits(adj[v]):
        second |= adj[u]
    blue = c.blue_neighbors(v)
    d2 = second & blue
    return D2Partition(v, d2, blue & ~d2)


def hattingh_counterexample(c: TwoColoring) -> tuple[int, int] | None:
    """First ``(v, X)`` with X = D2(v) or D2(v) + one vertex of D>2(v) whose red graph is not bipartite."""
    tri = find_triangle(c.red)
    if tri is not None:
        raise HypothesisError("red K3 present; blue has a 3-element irredundant set", tri)
    c6 = find_induced_c6(c.red)
    if c6 is not None:
        raise HypothesisError("red induced C6 present; blue has a 3-element irredundant set", c6)
    for v in range(c.order):
        part = d2_partition(c, v)
        if not is_bipartite(induced_subgraph(c.red, part.d2)):
            return v, part.d2
        for u in iter_bits(part.dgt2):
            x = part.d2 | (1 << u)
            if not is_bipartite(induced_subgraph(c.red, x)):
                return v, x
    return None


def check_hattingh(c: TwoColoring) -> bool:
    return hattingh_counterexample(c) is None


__all__ = [
    "D2Partition",
    "HypothesisError",
    "TwoColoring",
    "blue_has_3_irredundant_direct",
    "blue_has_3_irredundant_via_red",
    "check_hattingh",
    "d2_partition",
    "find_irredundant_set",
    "find_irredundant_set_through",
    "hattingh_counterexample",
    "has_irredundant_set",
    "is_irredundant",
    "members",
    "private_neighbors",
    "red_distances",
]
