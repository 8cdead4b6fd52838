"""Isomorph-free generation of good colorings and exact small Ramsey-type numbers.

A coloring is identified with its red graph.  Every avoidance constraint
used here is closed under induced subgraphs, so the good graphs on N
vertices are exactly the one-vertex extensions of good graphs on N-1
vertices.  Generation is canonical augmentation: the new vertex must have
maximum degree and lie in the automorphism orbit of the last vertex of
the canonical labeling (computed under the refined degree partition).
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import refine, search_labeling
from .graph import (
    Graph,
    GraphError,
    complement,
    empty_graph,
    find_induced_c6,
    find_triangle,
    has_clique,
    has_independent_set,
    independent_sets_of_size,
    induced_subgraph,
    iter_bits,
)
from .irredundance import find_irredundant_set, find_irredundant_set_through

log = logging.getLogger(__name__)

KINDS = ("s", "t", "r")
CORE_CAP = 15
EXTENDED_CAP = 22
SLOW_PATH_CAP = 12


@dataclass(frozen=True)
class Problem:
    """s, t or r with parameters (m, n).

    t: avoid a blue irredundant m-set and a red independent n-set.
    s: avoid a blue irredundant m-set and a red irredundant n-set.
    r: avoid a blue independent m-set (red K_m) and a red independent n-set.
    """

    kind: str
    m: int
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.m < 3:
            raise ValueError("m must be at least 3")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    def __str__(self):
        return f"{self.kind}({self.m},{self.n})"

    @property
    def fast_path(self) -> bool:
        return self.m == 3 or self.kind == "r"

    def constraints(self) -> "Constraints":
        m, n = self.m, self.n
        if self.kind == "r":
            return Constraints(clique=m, independent=n)
        if m == 3:
            # blue 3-irredundance is equivalent to a red K3 or induced C6
            return Constraints(clique=3, induced_c6=True, independent=n, irredundant=n if self.kind == "s" else None)
        # red K_m is a blue independent, hence irredundant, m-set
        return Constraints(
            clique=m, independent=n, irredundant=n if self.kind == "s" else None, blue_irredundant=m
        )


@dataclass(frozen=True)
class Constraints:
    """Hereditary forbidden red structures.

    ``clique``: red K_q; ``induced_c6``: chordless red 6-cycle (requires
    ``clique == 3``); ``independent`` / ``irredundant``: red sets of that
    size; ``blue_irredundant``: blue irredundant set of that size.
    """

    clique: int | None = None
    induced_c6: bool = False
    independent: int | None = None
    irredundant: int | None = None
    blue_irredundant: int | None = None

    def __post_init__(self):
        if self.induced_c6 and self.clique != 3:
            raise ValueError("the induced C6 rule is implemented for triangle-free graphs only")

    def violation(self, g: Graph) -> str | None:
        """Name of the first violated constraint, or None."""
        if self.clique is not None:
            if self.clique == 3:
                if find_triangle(g) is not None:
                    return "red K3"
            elif g.order >= self.clique and has_clique(g, self.clique):
                return f"red K{self.clique}"
        if self.induced_c6 and find_induced_c6(g) is not None:
            return "red induced C6"
        if self.independent is not None and has_independent_set(g, self.independent):
            return f"red independent {self.independent}-set"
        if self.irredundant is not None and find_irredundant_set(g, self.irredundant) is not None:
            return f"red irredundant {self.irredundant}-set"
        if self.blue_irredundant is not None and find_irredundant_set(complement(g), self.blue_irredundant) is not None:
            return f"blue irredundant {self.blue_irredundant}-set"
        return None


def violation(p: Problem, red: Graph) -> str | None:
    """Name of the structure that makes ``red`` a bad coloring for ``p`` (None if good).

    For m > 3 and kinds s, t the blue side is evaluated from the definition.
    """
    if p.m == 3 and p.kind != "r":
        c = Constraints(clique=3, induced_c6=True)
        why = c.violation(red)
        if why:
            return why
    elif p.kind == "r":
        why = Constraints(clique=p.m).violation(red)
        if why:
            return why
    else:
        if find_irredundant_set(complement(red), p.m) is not None:
            return f"blue irredundant {p.m}-set"
    if p.kind == "s":
        if find_irredundant_set(red, p.n) is not None:
            return f"red irredundant {p.n}-set"
    elif has_independent_set(red, p.n):
        return f"red independent {p.n}-set"
    return None


def good_coloring(p: Problem, red: Graph) -> bool:
    return violation(p, red) is None


# ----------------------------------------------------------------------------
# one-vertex extension


@dataclass
class Node:
    graph: Graph
    # None until known; True when Aut(graph) is trivial
    rigid: bool | None = None


def _rigid(g: Graph) -> bool:
    _, _, autos = search_labeling(g.adj, g.order)
    return not autos


def _degree_cells(degs: list[int]) -> list[list[int]]:
    by: dict[int, list[int]] = {}
    for v, d in enumerate(degs):
        by.setdefault(d, []).append(v)
    return [by[d] for d in sorted(by)]


def _cells_mask(cells):
    return [sum(1 << v for v in c) for c in cells]


class Extender:
    """Generates the canonical good children of a good graph."""

    def __init__(self, cons: Constraints):
        self.cons = cons
        self.candidates = 0

    # -- candidate neighborhoods ----------------------------------------------

    def neighborhoods(self, g: Graph) -> list[int]:
        """Masks S such that g + (vertex joined to S) passes the local cheap tests.

        Cheap tests: clique, induced C6, independent set, and the new vertex
        having maximum degree.
        """
        cons = self.cons
        k = g.order
        adj = g.adj
        deg = [row.bit_count() for row in adj]
        by_max: list[list[int]] = [[] for _ in range(k)]
        if cons.independent is not None:
            if cons.independent - 1 <= 0:
                return []
            for s in independent_sets_of_size(g, cons.independent - 1):
                by_max[s.bit_length() - 1].append(s)
        out: list[int] = []
        if cons.clique == 3:
            tab = self._c6_table(g) if cons.induced_c6 else None
            # suffix counts of vertices for the degree bound
            self._gen_indep(adj, deg, by_max, tab, k, out)
        else:
            self._gen_generic(g, deg, by_max, out)
        out.sort()
        self.candidates += len(out)
        return out

    @staticmethod
    def _c6_table(g: Graph) -> list[list[int]]:
        """tab[a][b]: vertices q that close an induced C6 v-a-p-q-r-b if missing from N(v)."""
        adj = g.adj
        k = g.order
        tab = [[0] * k for _ in range(k)]
        for a in range(k):
            for b in range(a + 1, k):
                if adj[a] >> b & 1:
                    continue
                pa = adj[a] & ~adj[b]
                rb = adj[b] & ~adj[a]
                if not pa or not rb:
                    continue
                na = 0
                for p in iter_bits(pa):
                    na |= adj[p]
                nb = 0
                for r in iter_bits(rb):
                    nb |= adj[r]
                t = na & nb
                tab[a][b] = tab[b][a] = t
        return tab

    def _gen_indep(self, adj, deg, by_max, tab, k, out):
        # depth-first over vertices 0..k-1 deciding membership in S (independent)
        def rec(i, s, size, blocked, req, need):
            # blocked: vertices adjacent to S; req: vertices forced into S by the C6 rule
            # need: lower bound on the final |S| from the max-degree rule
            if i == k:
                if size >= need:
                    out.append(s)
                return
            bit = 1 << i
            # remaining vertices that could still join
            avail = ((1 << k) - 1) >> i << i & ~blocked
            if size + avail.bit_count() < need:
                return
            # include i
            if not blocked & bit:
                r2 = req
                if tab is not None:
                    row = tab[i]
                    for a in iter_bits(s):
                        r2 |= row[a]
                undecided_ok = not (r2 & ~s & ~bit & (bit - 1 | bit))
                if undecided_ok and not (r2 & (blocked | adj[i])):
                    s2 = s | bit
                    ok = True
                    for I in by_max[i]:
                        if not I & s2:
                            ok = False
                            break
                    if ok:
                        rec(i + 1, s2, size + 1, blocked | adj[i], r2, max(need, deg[i] + 1))
            # exclude i
            if not req & bit:
                ok = True
                for I in by_max[i]:
                    if not I & s:
                        ok = False
                        break
                if ok:
                    rec(i + 1, s, size, blocked, req, max(need, deg[i]))

        rec(0, 0, 0, 0, 0, 0)

    def _gen_generic(self, g: Graph, deg, by_max, out):
        k = g.order
        q = self.cons.clique

        def rec(i, s, size, need):
            if i == k:
                if size >= need:
                    out.append(s)
                return
            if size + (k - i) < need:
                return
            bit = 1 << i
            s2 = s | bit
            # S + i must stay free of K_{q-1}: S & N(i) has no K_{q-2}
            if q is None or not has_clique(induced_subgraph(g, s & g.adj[i]), q - 2):
                if all(I & s2 for I in by_max[i]):
                    rec(i + 1, s2, size + 1, max(need, deg[i] + 1))
            if all(I & s for I in by_max[i]):
                rec(i + 1, s, size, max(need, deg[i]))

        rec(0, 0, 0, 0)

    # -- children ------------------------------------------------------------

    def expensive_ok(self, child: Graph) -> bool:
        cons = self.cons
        v = child.order - 1
        if cons.irredundant is not None and find_irredundant_set_through(child, cons.irredundant, v) is not None:
            return False
        if cons.blue_irredundant is not None:
            blue = complement(child)
            if find_irredundant_set_through(blue, cons.blue_irredundant, v) is not None:
                return False
        return True

    def children(self, node: Node) -> list[Node]:
        g = node.graph
        k = g.order
        if node.rigid is None:
            node.rigid = _rigid(g)
        out: list[Node] = []
        seen: set = set()
        for s in self.neighborhoods(g):
            child = g.add_vertex(s)
            adj = child.adj
            cells = _degree_cells([row.bit_count() for row in adj])
            cells = refine(adj, cells, _cells_mask(cells))
            last = cells[-1]
            if k not in last:
                continue
            if not self.expensive_ok(child):
                continue
            if len(last) == 1 and node.rigid:
                # sole candidate vertex, and a rigid parent yields no isomorphic siblings
                out.append(Node(child))
                continue
            code, lab, autos = search_labeling(adj, k + 1, cells, refined=True)
            if lab[-1] != k and not _same_orbit(adj, k + 1, cells, k, lab[-1], autos):
                continue
            if not node.rigid:
                key = (tuple(len(c) for c in cells), code)
                if key in seen:
                    continue
                seen.add(key)
            out.append(Node(child, rigid=not autos))
        return out


def _same_orbit(adj, n, cells, v, w, autos) -> bool:
    from .canon import orbits

    if autos:
        orb = orbits(n, autos)
        if orb[v] == orb[w]:
            return True
    last = cells[-1]
    cv = cells[:-1] + [[x for x in last if x != v], [v]]
    cw = cells[:-1] + [[x for x in last if x != w], [w]]
    cv = refine(adj, cv, [1 << v])
    cw = refine(adj, cw, [1 << w])
    if [len(c) for c in cv] != [len(c) for c in cw]:
        return False
    return search_labeling(adj, n, cv, refined=True)[0] == search_labeling(adj, n, cw, refined=True)[0]


# ----------------------------------------------------------------------------
# traversal


@dataclass
class ExhaustionReport:
    """Per-order counts of canonical good graphs; ``counts[i]`` is for order ``i+1``."""

    counts: list[tuple[int, int]]
    elapsed: float = 0.0
    node_count: int = 0


@dataclass
class Traversal:
    counts: dict[int, int] = field(default_factory=dict)
    first: dict[int, Graph] = field(default_factory=dict)
    nodes: int = 0
    reached_cap: bool = False
    out_of_budget: bool = False


def _dfs(ext: Extender, node: Node, cap: int, tr: Traversal, stop_at_cap: bool, deadline: float | None,
         visit: Callable[[Graph], None] | None = None) -> bool:
    """Returns True when the traversal must stop."""
    stack = [iter([node])]
    while stack:
        try:
            cur = next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        tr.nodes += 1
        n = cur.graph.order
        if n > 0:
            tr.counts[n] = tr.counts.get(n, 0) + 1
            tr.first.setdefault(n, cur.graph)
        if visit is not None:
            visit(cur.graph)
        if n >= cap:
            if stop_at_cap:
                tr.reached_cap = True
                return True
            continue
        if deadline is not None and tr.nodes % 64 == 0 and time.monotonic() > deadline:
            tr.out_of_budget = True
            return True
        stack.append(iter(ext.children(cur)))
    return False


def enumerate_good(p: Problem | Constraints, order: int) -> Iterator[Graph]:
    """One red graph per isomorphism class of good colorings on ``order`` vertices."""
    cons = p.constraints() if isinstance(p, Problem) else p
    if order == 0:
        if cons.violation(empty_graph(0)) is None:
            yield empty_graph(0)
        return
    ext = Extender(cons)
    stack = [iter([Node(empty_graph(0), rigid=True)])]
    while stack:
        try:
            cur = next(stack[-1])
        except StopIteration:
            stack.pop()
            continue
        if cur.graph.order == order:
            yield cur.graph
            continue
        stack.append(iter(ext.children(cur)))


def count_good(p: Problem | Constraints, max_order: int) -> list[int]:
    """Counts of canonical good graphs for orders 1..max_order."""
    cons = p.constraints() if isinstance(p, Problem) else p
    tr = Traversal()
    _dfs(Extender(cons), Node(empty_graph(0), rigid=True), max_order, tr, False, None)
    return [tr.counts.get(k, 0) for k in range(1, max_order + 1)]


# ----------------------------------------------------------------------------
# parallel subtrees


def _seed_nodes(ext: Extender, depth: int) -> tuple[list[Node], Traversal]:
    tr = Traversal()
    level = [Node(empty_graph(0), rigid=True)]
    for _ in range(depth):
        nxt = []
        for node in level:
            tr.nodes += 1
            for ch in ext.children(node):
                nxt.append(ch)
        level = nxt
        if level:
            k = level[0].graph.order
            tr.counts[k] = len(level)
            tr.first[k] = level[0].graph
        if not level:
            break
    return level, tr


def _subtree_task(args):
    cons, adj, order, cap, stop_at_cap, deadline = args
    g = Graph.trusted(order, adj)
    tr = Traversal()
    ext = Extender(cons)
    # the seed itself was already counted by the caller
    tr.nodes -= 1
    _dfs(ext, Node(g), cap, tr, stop_at_cap, deadline)
    tr.counts[order] -= 1
    if tr.counts[order] == 0:
        del tr.counts[order]
    tr.first.pop(order, None)
    return tr


def _traverse(cons: Constraints, cap: int, stop_at_cap: bool, threads: int, budget: float | None) -> Traversal:
    deadline = None if budget is None else time.monotonic() + budget
    ext = Extender(cons)
    if threads <= 1:
        tr = Traversal()
        _dfs(ext, Node(empty_graph(0), rigid=True), cap, tr, stop_at_cap, deadline)
        return tr
    from concurrent.futures import ProcessPoolExecutor

    # seeds are expanded in the same order the sequential DFS would visit them
    depth = min(cap, max(1, cap // 2))
    seeds, total = _seed_nodes(ext, depth)
    if seeds and seeds[0].graph.order >= cap:
        total.reached_cap = stop_at_cap
        # sequential DFS would have stopped at its first cap-order graph
        if stop_at_cap:
            return _traverse(cons, cap, stop_at_cap, 1, budget)
        return total
    if not seeds:
        return total
    # order the seeds as the sequential DFS meets them and merge in that order
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_subtree_task, (cons, s.graph.adj, s.graph.order, cap, stop_at_cap, deadline))
                   for s in seeds]
        for fut in futures:
            tr = fut.result()
            total.nodes += tr.nodes
            for k, c in tr.counts.items():
                total.counts[k] = total.counts.get(k, 0) + c
            for k, g in tr.first.items():
                total.first.setdefault(k, g)
            if tr.out_of_budget:
                total.out_of_budget = True
            if tr.reached_cap:
                total.reached_cap = True
                for f in futures:
                    f.cancel()
                break
    return total


# ----------------------------------------------------------------------------
# exact numbers


@dataclass
class Result:
    """Outcome of :func:`compute_number`.

    ``value`` is the number when solved.  When unresolved, ``lower_bound``
    is the best proven strict lower bound plus one (a witness exists at
    ``lower_bound - 1``) and ``reason`` says why the search stopped.
    """

    problem: Problem
    value: int | None
    lower_bound: int
    witness: "Certificate | None"
    exhaustion: "Certificate | None"
    report: ExhaustionReport
    reason: str = ""
    cap: int = 0

    @property
    def solved(self) -> bool:
        return self.value is not None


def default_cap(p: Problem, tier: str = "core") -> int:
    cap = CORE_CAP if tier == "core" else EXTENDED_CAP
    if not p.fast_path:
        cap = min(cap, SLOW_PATH_CAP)
    return cap


def compute_number(p: Problem, n_cap: int, threads: int = 1, budget: float | None = None) -> Result:
    """Least N <= n_cap with no good coloring of K_N, with certificates.

    When good colorings exist at every order up to ``n_cap`` (or the time
    budget runs out) the result is unresolved; nothing is guessed.
    """
    from .certificate import Certificate

    if not p.fast_path and n_cap > SLOW_PATH_CAP:
        raise GraphError(f"m > 3 problems are capped at N <= {SLOW_PATH_CAP}")
    t0 = time.monotonic()
    cons = p.constraints()
    # one vertex beyond the cap would only be needed to prove the cap itself
    tr = _traverse(cons, n_cap, True, threads, budget)
    elapsed = time.monotonic() - t0
    top = max(tr.counts) if tr.counts else 0
    if tr.reached_cap or tr.out_of_budget:
        counts = [(k, tr.counts.get(k, 0)) for k in range(1, top + 1)]
        wit = Certificate(p, "witness", top, witness=tr.first[top]) if top else None
        reason = "cap" if tr.reached_cap else "budget"
        return Result(p, None, top + 1, wit, None, ExhaustionReport(counts, elapsed, tr.nodes), reason, n_cap)
    value = top + 1
    counts = [(k, tr.counts.get(k, 0)) for k in range(1, value + 1)]
    wit_graph = tr.first[top] if top else empty_graph(0)
    wit = Certificate(p, "witness", top, witness=wit_graph)
    exh = Certificate(p, "exhaustion", value, counts=counts)
    return Result(p, value, value, wit, exh, ExhaustionReport(counts, elapsed, tr.nodes), "", n_cap)


def find_witness(p: Problem, order: int, budget: float | None = None) -> Graph | None:
    """First good coloring on ``order`` vertices in depth-first generation order."""
    tr = _traverse(p.constraints(), order, True, 1, budget)
    if tr.reached_cap:
        return tr.first[order]
    return None


def chain_check(results: dict[str, "Result | int"]) -> bool:
    """True unless the computed values provably break s <= t <= r.

    Entries are exact ints or :class:`Result` objects.  An unresolved
    result contributes only its lower bound, which is enough to show it
    is not exceeded by a smaller-side value but never proves a violation
    as the larger side.
    """

    def bounds(x):
        if isinstance(x, int):
            return x, x
        if x.solved:
            return x.value, x.value
        return x.lower_bound, None

    keys = [k for k in ("s", "t", "r") if k in results]
    for a, b in zip(keys, keys[1:]):
        alo, _ = bounds(results[a])
        blo, bhi = bounds(results[b])
        if bhi is not None and alo > bhi:
            return False
    return True
