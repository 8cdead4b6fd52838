"""Canonical labeling by ordered-partition refinement and individualization.

The canonical code of a graph is the lexicographically smallest
upper-triangle bit string over the leaves of the refinement search tree.
Because refinement and target-cell selection depend only on cell positions,
the set of leaves is an isomorphism invariant and so is its minimum.
Subtrees are skipped only when a discovered automorphism maps them onto
an explored one, which never changes the minimum.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, iter_bits


def refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Splits every cell by neighbor count into each splitter (in queue order);
    fragments are ordered by increasing count and all of them are queued.
    """
    q = deque(splitters)
    nontrivial = sum(1 for c in cells if len(c) > 1)
    while q and nontrivial:
        w = q.popleft()
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                k = (adj[v] & w).bit_count()
                g = groups.get(k)
                if g is None:
                    groups[k] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            nontrivial -= 1
            for k in sorted(groups):
                frag = groups[k]
                out.append(frag)
                m = 0
                for v in frag:
                    m |= 1 << v
                q.append(m)
                if len(frag) > 1:
                    nontrivial += 1
        cells = out
    return cells


def _mask(cell: list[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


class _Search:
    __slots__ = ("adj", "n", "best_rows", "best_lab", "best_path", "first_rows", "first_lab", "first_path", "autos")

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.best_rows: list[int] | None = None
        self.best_lab: list[int] = []
        self.best_path: list[int] = []
        self.first_rows: list[int] | None = None
        self.first_lab: list[int] = []
        self.first_path: list[int] = []
        self.autos: list[list[int]] = []

    def rows(self, lab: list[int]) -> list[int]:
        n = self.n
        adj = self.adj
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        out = []
        for i, v in enumerate(lab):
            r = 0
            for u in iter_bits(adj[v]):
                p = pos[u]
                if p > i:
                    r |= 1 << (n - 1 - p)
            out.append(r)
        return out

    def leaf(self, cells: list[list[int]], path: list[int]) -> int:
        """Process a discrete partition; return the depth to unwind to, or -1."""
        lab = [c[0] for c in cells]
        rows = self.rows(lab)
        if self.first_rows is None:
            self.first_rows = self.best_rows = rows
            self.first_lab = self.best_lab = lab
            self.first_path = self.best_path = list(path)
            return -1
        if rows == self.first_rows:
            self._record(self.first_lab, lab)
            return _common_prefix(path, self.first_path)
        if rows == self.best_rows:
            self._record(self.best_lab, lab)
            return _common_prefix(path, self.best_path)
        if rows < self.best_rows:
            self.best_rows = rows
            self.best_lab = lab
            self.best_path = list(path)
        return -1

    def _record(self, lab1: list[int], lab2: list[int]) -> None:
        # the automorphism sends lab2[i] to lab1[i]
        gamma = [0] * self.n
        for a, b in zip(lab2, lab1):
            gamma[a] = b
        self.autos.append(gamma)

    def visit(self, cells: list[list[int]], path: list[int]) -> int:
        target = -1
        size = self.n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
                if size == 2:
                    break
        if target < 0:
            return self.leaf(cells, path)
        tc = cells[target]
        depth = len(path)
        explored: list[int] = []
        parent = list(range(self.n))
        used = 0

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v in tc:
            if explored:
                autos = self.autos
                while used < len(autos):
                    g = autos[used]
                    used += 1
                    if all(g[p] == p for p in path):
                        for x in range(self.n):
                            a, b = find(x), find(g[x])
                            if a != b:
                                parent[a] = b
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            rest = [x for x in tc if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = refine(self.adj, child, [1 << v])
            path.append(v)
            ret = self.visit(child, path)
            path.pop()
            explored.append(v)
            if 0 <= ret < depth:
                return ret
        return -1


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def search_labeling(
    adj: Sequence[int], n: int, cells: list[list[int]] | None = None, refined: bool = False
) -> tuple[int, list[int], list[list[int]]]:
    """Return ``(code, lab, autos)``.

    ``lab[i]`` is the vertex placed at position ``i``; ``autos`` are the
    automorphisms met during the search (empty exactly when the colored
    graph has no nontrivial automorphism, since nothing is pruned before
    the first one is found).  ``cells`` is an optional ordered partition the
    labeling must respect; codes are comparable only between partitions
    with the same sequence of cell sizes.
    """
    if n == 0:
        return 0, [], []
    if cells is None:
        cells = [list(range(n))]
    if not refined:
        cells = refine(adj, [list(c) for c in cells], [_mask(c) for c in cells])
    s = _Search(adj, n)
    s.visit(cells, [])
    code = 0
    for i, r in enumerate(s.best_rows):
        code = (code << (n - 1 - i)) | r
    return code, s.best_lab, s.autos


def canonical_labeling(adj: Sequence[int], n: int, cells: list[list[int]] | None = None) -> tuple[int, list[int]]:
    code, lab, _ = search_labeling(adj, n, cells)
    return code, lab


def orbits(n: int, autos: list[list[int]]) -> list[int]:
    """Orbit representative (smallest member) of each vertex under the group the autos generate."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def automorphism_group_order(g: Graph) -> int:
    """|Aut(g)| by exhaustive paired individualization, without pruning."""
    n = g.order
    if n == 0:
        return 1
    adj = g.adj
    base = refine(adj, [list(range(n))], [(1 << n) - 1])

    def count(cells_a, cells_b):
        if [len(c) for c in cells_a] != [len(c) for c in cells_b]:
            return 0
        for i, c in enumerate(cells_a):
            if len(c) > 1:
                v = c[0]
                ca = refine(adj, cells_a[:i] + [[v], c[1:]] + cells_a[i + 1:], [1 << v])
                total = 0
                for w in cells_b[i]:
                    rest = [x for x in cells_b[i] if x != w]
                    cb = refine(adj, cells_b[:i] + [[w], rest] + cells_b[i + 1:], [1 << w])
                    total += count(ca, cb)
                return total
        perm = [0] * n
        for a, b in zip(cells_a, cells_b):
            perm[a[0]] = b[0]
        return int(all(_image(adj[v], perm) == adj[perm[v]] for v in range(n)))

    return count(base, base)


def _image(mask: int, perm: list[int]) -> int:
    out = 0
    for u in iter_bits(mask):
        out |= 1 << perm[u]
    return out


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-complete code: order byte followed by the minimal upper-triangle bits."""
    code, _ = canonical_labeling(g.adj, g.order)
    npairs = g.order * (g.order - 1) // 2
    return bytes([g.order]) + code.to_bytes((npairs + 7) // 8, "big")


def canonical_form(g: Graph) -> Graph:
    """The representative of the isomorphism class of ``g`` whose triangle bits are the canonical code."""
    _, lab = canonical_labeling(g.adj, g.order)
    perm = [0] * g.order
    for i, v in enumerate(lab):
        perm[v] = i
    return g.relabel(perm)
