"""Small simple graphs stored as per-vertex neighbor bitmasks.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means ``v`` is a
member).  Every public function that takes a vertex set also accepts an
iterable of vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
SUBGRAPH_MAX_ORDER = 16

VertexSet = int


class GraphError(ValueError):
    pass


class UnsupportedSize(GraphError):
    pass


def as_mask(s: VertexSet | Iterable[int]) -> int:
    if isinstance(s, int):
        return s
    m = 0
    for v in s:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0 .. order-1``."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbors beyond order")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")

    @classmethod
    def trusted(cls, order: int, adj: Sequence[int]) -> "Graph":
        """Build without validation; callers guarantee the invariants."""
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @classmethod
    def from_triangle_bits(cls, order: int, bits: int) -> "Graph":
        """Inverse of :meth:`triangle_bits`."""
        adj = [0] * order
        k = order * (order - 1) // 2
        for i in range(order):
            for j in range(i + 1, order):
                k -= 1
                if bits >> k & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return cls.trusted(order, adj)

    def triangle_bits(self) -> int:
        """Upper-triangle bits, pair (0,1) most significant, row-major."""
        bits = 0
        adj = self.adj
        for i in range(self.order):
            row = adj[i]
            for j in range(i + 1, self.order):
                bits = (bits << 1) | (row >> j & 1)
        return bits

    @property
    def full(self) -> int:
        return (1 << self.order) - 1

    def vertices(self) -> range:
        return range(self.order)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def average_degree(self) -> float:
        if self.order == 0:
            return 0.0
        return 2 * self.num_edges() / self.order

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def neighborhood(self, s: VertexSet | Iterable[int]) -> int:
        """N(X): union of the open neighborhoods of the members of ``s``."""
        out = 0
        for v in iter_bits(as_mask(s)):
            out |= self.adj[v]
        return out

    def closed_neighborhood(self, s: VertexSet | Iterable[int]) -> int:
        m = as_mask(s)
        return self.neighborhood(m) | m

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        adj = [0] * self.order
        for v, row in enumerate(self.adj):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            adj[perm[v]] = new
        return Graph.trusted(self.order, adj)

    def add_vertex(self, nbrs: int) -> "Graph":
        """Append one vertex adjacent to the vertex set ``nbrs``."""
        n = self.order
        bit = 1 << n
        adj = [row | bit if nbrs >> v & 1 else row for v, row in enumerate(self.adj)]
        adj.append(nbrs)
        return Graph.trusted(n + 1, adj)

    def delete_vertex(self, v: int) -> "Graph":
        return induced_subgraph(self, self.full & ~(1 << v))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


# ----------------------------------------------------------------------------
# constructors

def empty_graph(n: int) -> Graph:
    return Graph.trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.trusted(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def crown_graph(k: int) -> Graph:
    """K_{k,k} with a perfect matching removed; side A is 0..k-1, i matched to k+i."""
    return Graph.from_edges(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    js = {j % n for j in jumps} | {(-j) % n for j in jumps}
    js.discard(0)
    return Graph.from_edges(n, [(i, (i + j) % n) for i in range(n) for j in js if i < (i + j) % n])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    adj = list(g.adj) + [row << shift for row in h.adj]
    return Graph.trusted(g.order + h.order, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Graph join: disjoint union plus every edge between the two parts."""
    shift = g.order
    hmask = ((1 << h.order) - 1) << shift
    adj = [row | hmask for row in g.adj] + [(row << shift) | g.full for row in h.adj]
    return Graph.trusted(g.order + h.order, adj)


# ----------------------------------------------------------------------------
# basic operations

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph.trusted(g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """G[S], vertices renumbered by increasing original index."""
    verts = members(as_mask(s))
    if verts and verts[-1] >= g.order:
        raise GraphError("vertex set exceeds graph order")
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph.trusted(len(verts), adj)


def is_independent(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    m = as_mask(s)
    return all(not (g.adj[v] & m) for v in iter_bits(m))


def is_clique(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    m = as_mask(s)
    return all((g.adj[v] | (1 << v)) & m == m for v in iter_bits(m))


# ----------------------------------------------------------------------------
# forbidden-structure predicates

def contains_triangle(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.order):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if adj[v] & higher:
                return True
    return False


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    adj = g.adj
    for u in range(g.order):
        higher = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            common = adj[v] & higher
            if common:
                return u, v, (common & -common).bit_length() - 1
    return None


def find_induced_c6(g: Graph) -> tuple[int, ...] | None:
    """Return the vertices of a chordless 6-cycle in cyclic order, or None.

    Cycles are grown as induced paths from their smallest vertex ``a``:
    every path vertex after the second must avoid the neighborhoods of
    all earlier non-consecutive path vertices.
    """
    adj = g.adj
    n = g.order
    if n < 6:
        return None
    for a in range(n):
        above = g.full >> (a + 1) << (a + 1)
        na = adj[a] & above
        for b in iter_bits(na):
            # f is fixed as the larger neighbor of a to count each cycle once
            for f in iter_bits(na & ~adj[b] & ~((1 << (b + 1)) - 1)):
                nab = adj[a] | adj[b]
                for c in iter_bits(adj[b] & above & ~adj[a] & ~adj[f] & ~(1 << f)):
                    for d in iter_bits(adj[c] & above & ~nab & ~adj[f]):
                        # e closes the cycle: adjacent to d and f only
                        cand = adj[d] & adj[f] & above & ~nab & ~adj[c]
                        cand &= ~((1 << b) | (1 << c) | (1 << f))
                        if cand:
                            e = (cand & -cand).bit_length() - 1
                            return a, b, c, d, e, f
    return None


def has_induced_c6(g: Graph) -> bool:
    return find_induced_c6(g) is not None


def is_bipartite(g: Graph) -> bool:
    """Two-color each component by breadth-first layers."""
    adj = g.adj
    unseen = g.full
    while unseen:
        root = unseen & -unseen
        side = [root, 0]
        frontier = root
        seen = root
        k = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            if nxt & side[k]:
                return False
            nxt &= ~seen
            k ^= 1
            side[k] |= nxt
            seen |= nxt
            frontier = nxt
        if side[0] & side[1]:
            return False
        unseen &= ~seen
    return True


# ----------------------------------------------------------------------------
# independence number

def _clique_cover_bound(adj: Sequence[int], p: int) -> int:
    """Greedy cover of ``p`` by cliques of the graph; upper bound on alpha(G[p])."""
    count = 0
    while p:
        v = (p & -p).bit_length() - 1
        cand = p & adj[v]
        p &= ~(1 << v)
        while cand:
            u = (cand & -cand).bit_length() - 1
            p &= ~(1 << u)
            cand &= adj[u]
        count += 1
    return count


def _mis(adj: Sequence[int], p: int, size: int, best: list[int], goal: int) -> bool:
    # returns True once an independent set of size ``goal`` is found
    if not p:
        if size > best[0]:
            best[0] = size
        return best[0] >= goal
    if size + p.bit_count() <= best[0]:
        return False
    # vertices isolated inside p always join the set
    iso = 0
    for v in iter_bits(p):
        if not adj[v] & p:
            iso |= 1 << v
    if iso:
        return _mis(adj, p & ~iso, size + iso.bit_count(), best, goal)
    if size + _clique_cover_bound(adj, p) <= best[0]:
        return False
    v = -1
    dv = -1
    for u in iter_bits(p):
        d = (adj[u] & p).bit_count()
        if d > dv:
            v, dv = u, d
    if _mis(adj, p & ~adj[v] & ~(1 << v), size + 1, best, goal):
        return True
    return _mis(adj, p & ~(1 << v), size, best, goal)


def independence_number(g: Graph) -> int:
    best = [0]
    _mis(g.adj, g.full, 0, best, g.order + 1)
    return best[0]


def has_independent_set(g: Graph, k: int, within: int | None = None) -> bool:
    """True iff G (restricted to ``within`` if given) has an independent k-set."""
    if k <= 0:
        return True
    p = g.full if within is None else within
    if p.bit_count() < k:
        return False
    best = [k - 1]
    return _mis(g.adj, p, 0, best, k)


def maximum_independent_set(g: Graph) -> int:
    """An explicit maximum independent set, found by brute extension of alpha."""
    target = independence_number(g)
    adj = g.adj

    def grow(p, chosen, need):
        if need == 0:
            return chosen
        for v in iter_bits(p):
            rest = p & ~adj[v] & ~((1 << (v + 1)) - 1)
            if has_independent_set(g, need - 1, rest):
                return grow(rest, chosen | (1 << v), need - 1)
        return None

    return grow(g.full, 0, target)


def independent_sets_of_size(g: Graph, k: int, within: int | None = None) -> list[int]:
    """All independent k-subsets of ``within`` (default: all vertices), as masks."""
    adj = g.adj
    out: list[int] = []
    p0 = g.full if within is None else within

    def rec(p, chosen, need):
        if need == 0:
            out.append(chosen)
            return
        while p and p.bit_count() >= need:
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            rec(p & ~adj[v], chosen | low, need - 1)

    rec(p0, 0, k)
    return out


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))


def has_clique(g: Graph, k: int) -> bool:
    return has_independent_set(complement(g), k)


# ----------------------------------------------------------------------------
# family of forced red structures

@dataclass(frozen=True)
class FamilyMember:
    k: int | None
    label: str
    graph: Graph


def family_f_members(m: int) -> list[FamilyMember]:
    """K_m, K_{m-k} joined with the crown on 2k vertices (3 <= k <= m-1), and the crown on 2m vertices.

    ``k`` is ``m`` for the crown member and ``None`` for K_m.
    """
    if m < 3:
        raise GraphError("family is defined for m >= 3")
    out = [FamilyMember(None, f"K{m}", complete_graph(m))]
    for k in range(3, m):
        out.append(FamilyMember(k, f"K{m - k}+(K{k},{k}-{k}K2)", join(complete_graph(m - k), crown_graph(k))))
    out.append(FamilyMember(m, f"K{m},{m}-{m}K2", crown_graph(m)))
    return out


# ----------------------------------------------------------------------------
# subgraph containment

def contains_subgraph(g: Graph, h: Graph) -> bool:
    """True iff ``h`` is isomorphic to a (not necessarily induced) subgraph of ``g``."""
    if g.order > SUBGRAPH_MAX_ORDER:
        raise UnsupportedSize(f"exact subgraph search supports at most {SUBGRAPH_MAX_ORDER} vertices")
    if h.order > g.order:
        return False
    if h.num_edges() > g.num_edges():
        return False
    gdeg = g.degrees()
    hdeg = h.degrees()
    if any(a > b for a, b in zip(sorted(hdeg, reverse=True), sorted(gdeg, reverse=True))):
        return False
    # place pattern vertices in an order that keeps each new vertex attached
    order: list[int] = []
    left = set(range(h.order))
    while left:
        placed = as_mask(order)
        best = max(left, key=lambda v: ((h.adj[v] & placed).bit_count(), hdeg[v], -v))
        order.append(best)
        left.remove(best)
    back = [[u for u in order[:i] if h.adj[order[i]] >> u & 1] for i in range(len(order))]
    img = [0] * h.order
    gadj = g.adj

    def rec(i, used):
        if i == len(order):
            return True
        v = order[i]
        cand = g.full & ~used
        for u in back[i]:
            cand &= gadj[img[u]]
        for w in iter_bits(cand):
            if gdeg[w] < hdeg[v]:
                continue
            img[v] = w
            if rec(i + 1, used | (1 << w)):
                return True
        return False

    return rec(0, 0)


def contains_induced_subgraph(g: Graph, h: Graph) -> bool:
    from .canon import canonical_code

    if h.order > g.order:
        return False
    target = canonical_code(h)
    return any(canonical_code(induced_subgraph(g, s)) == target for s in combinations(range(g.order), h.order))


# ----------------------------------------------------------------------------
# IRX graph line

def encode_graph(g: Graph) -> str:
    """``n=<N> <hex>``: upper-triangle bits, MSB first, zero-padded to whole hex digits."""
    npairs = g.order * (g.order - 1) // 2
    if npairs == 0:
        return f"n={g.order}"
    pad = (-npairs) % 4
    digits = (npairs + pad) // 4
    return f"n={g.order} {g.triangle_bits() << pad:0{digits}x}"


def decode_graph(line: str) -> Graph:
    parts = line.split()
    if not parts or not parts[0].startswith("n="):
        raise GraphError("graph line must start with n=<N>")
    try:
        n = int(parts[0][2:])
    except ValueError:
        raise GraphError(f"bad order token {parts[0]!r}") from None
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [0, {MAX_ORDER}]")
    npairs = n * (n - 1) // 2
    pad = (-npairs) % 4
    digits = (npairs + pad) // 4
    hexpart = parts[1] if len(parts) > 1 else ""
    if len(parts) > 2:
        raise GraphError("trailing tokens after graph encoding")
    if len(hexpart) != digits:
        raise GraphError(f"expected {digits} hex digits for n={n}, got {len(hexpart)}")
    if digits == 0:
        return empty_graph(n)
    if hexpart != hexpart.lower():
        raise GraphError("hex digits must be lowercase")
    try:
        value = int(hexpart, 16)
    except ValueError:
        raise GraphError("invalid hex digits") from None
    if value & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits")
    return Graph.from_triangle_bits(n, value >> pad)
