"""Immutable simple undirected graphs and the transforms used everywhere else.

Vertices are 0..n-1; adjacency is stored as one bitmask per vertex so that
neighbourhood operations, enumeration and canonical labelling stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations


class ParameterDomainError(ValueError):
    """A family or operation parameter is outside its documented domain."""


class GrowthLimitError(RuntimeError):
    """An iterated construction exceeded the configured vertex cap."""


class SizeLimitError(ValueError):
    """Input is larger than the exact algorithm is rated for."""


class ArityError(ValueError):
    """Mismatched number of arguments (e.g. join parts vs pattern order)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: order `n`, one adjacency bitmask per vertex.

    The name is a display label only; it does not take part in equality.
    """

    n: int
    rows: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("order must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError("adjacency rows must match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} references vertices >= {self.n}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")

    @staticmethod
    def from_edges(n: int, edges, name: str | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows), name)

    def validate(self) -> None:
        """Full symmetry check; constructors already guarantee it."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j) & 1 != (self.rows[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency at ({i},{j})")

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.rows[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[v]
        return [u for u in range(self.n) if (row >> u) & 1]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list in lexicographic (i, j), i < j order."""
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def with_name(self, name: str | None) -> "Graph":
        return Graph(self.n, self.rows, name)

    def relabel(self, perm) -> "Graph":
        """Image under `perm`: vertex v of self becomes perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = self.rows[v]
            new = 0
            for u in range(self.n):
                if (row >> u) & 1:
                    new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows), self.name)

    def __repr__(self):
        label = self.name or f"graph<{self.n},{self.m}>"
        return f"Graph({label}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class StructureReport:
    """Connectivity, bipartiteness and degree extremes of one graph."""

    order: int
    size: int
    is_connected: bool
    is_bipartite: bool
    min_degree: int | None
    max_degree: int | None
    min_edge_degree_sum: int | None
    regular_degree: int | None

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class HJoin:
    """An H-join together with the block structure it was built from."""

    graph: Graph
    pattern: Graph
    parts: tuple[Graph, ...]
    blocks: tuple[tuple[int, ...], ...]


# -- transforms ---------------------------------------------------------


@lru_cache(maxsize=4096)
def line_graph(G: Graph) -> Graph:
    """Graph on the edges of G; edges sharing an endpoint become adjacent."""
    edge_list = G.edges()
    index = {e: k for k, e in enumerate(edge_list)}
    rows = [0] * len(edge_list)
    for v in range(G.n):
        incident = [index[(u, v) if u < v else (v, u)] for u in G.neighbors(v)]
        for a, b in combinations(incident, 2):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    name = f"L({G.name})" if G.name else None
    return Graph(len(edge_list), tuple(rows), name)


def line_graph_tower(G: Graph, k: int, cap: int = 5000) -> list[Graph]:
    """[G, L(G), ..., L^k(G)], refusing to expand past `cap` vertices."""
    if k < 0:
        raise ParameterDomainError("iteration depth must be >= 0")
    tower = [G]
    for level in range(1, k + 1):
        nxt_order = tower[-1].m
        if nxt_order > cap:
            raise GrowthLimitError(
                f"line graph level {level} would have {nxt_order} vertices "
                f"(cap {cap}); reached level {level - 1}"
            )
        tower.append(line_graph(tower[-1]))
    return tower


def iterated_line_graph(G: Graph, k: int, cap: int = 5000):
    """L^k(G) plus the (order, size) growth table for levels 0..k."""
    tower = line_graph_tower(G, k, cap)
    growth = [(H.n, H.m) for H in tower]
    return tower[-1], growth


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    rows = tuple((~G.rows[v] & full) & ~(1 << v) for v in range(G.n))
    name = f"co-{G.name}" if G.name else None
    return Graph(G.n, rows, name)


def delete_vertices(G: Graph, drop) -> Graph:
    """Induced subgraph on the kept vertices, relabelled contiguously."""
    drop = set(drop)
    for v in drop:
        if not (0 <= v < G.n):
            raise IndexError(f"vertex {v} out of range for order {G.n}")
    keep = [v for v in range(G.n) if v not in drop]
    pos = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        row = 0
        for u in G.neighbors(v):
            if u in pos:
                row |= 1 << pos[u]
        rows[pos[v]] = row
    return Graph(len(keep), tuple(rows), G.name)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.n
    name = " + ".join(g.name or "?" for g in graphs) if graphs else None
    return Graph(n, tuple(rows), name)


def h_join(pattern: Graph, parts) -> HJoin:
    """Replace vertex i of `pattern` by `parts[i]`; join blocks along edges."""
    parts = tuple(parts)
    if len(parts) != pattern.n:
        raise ArityError(
            f"pattern has order {pattern.n} but {len(parts)} parts were given"
        )
    offsets = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.n
    edges: list[tuple[int, int]] = []
    for i, part in enumerate(parts):
        base = offsets[i]
        edges.extend((base + u, base + v) for u, v in part.edges())
    for i, j in pattern.edges():
        for u in range(parts[i].n):
            for v in range(parts[j].n):
                edges.append((offsets[i] + u, offsets[j] + v))
    blocks = tuple(
        tuple(range(offsets[i], offsets[i] + parts[i].n)) for i in range(len(parts))
    )
    pat = pattern.name or f"G{pattern.n}"
    name = f"{pat}[{', '.join(p.name or '?' for p in parts)}]"
    graph = Graph.from_edges(total, edges, name)
    return HJoin(graph=graph, pattern=pattern, parts=parts, blocks=blocks)


def extended_bipartite_double(G: Graph) -> Graph:
    """Bipartite double cover with the identity matching added.

    X block keeps ids 0..n-1, Y block is n..2n-1; x_i ~ y_j iff i = j or
    v_i v_j is an edge of G.
    """
    n = G.n
    edges = [(i, n + i) for i in range(n)]
    for u, v in G.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    name = f"Ebd({G.name})" if G.name else None
    return Graph.from_edges(2 * n, edges, name)


# -- structure queries ---------------------------------------------------


def _component_mask(rows, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        v = 0
        while f:
            if f & 1:
                nxt |= rows[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    return _component_mask(G.rows, 0) == (1 << G.n) - 1


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in G.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def structure_queries(G: Graph) -> StructureReport:
    degs = G.degrees()
    if G.n == 0:
        return StructureReport(0, 0, True, True, None, None, None, None)
    dmin, dmax = min(degs), max(degs)
    edge_sums = [degs[u] + degs[v] for u, v in G.edges()]
    return StructureReport(
        order=G.n,
        size=G.m,
        is_connected=is_connected(G),
        is_bipartite=is_bipartite(G),
        min_degree=dmin,
        max_degree=dmax,
        min_edge_degree_sum=min(edge_sums) if edge_sums else None,
        regular_degree=dmin if dmin == dmax else None,
    )


# -- independence number -------------------------------------------------


def _greedy_clique_cover_bound(rows, avail: int) -> int:
    """Number of cliques in a greedy cover of `avail`; upper bound on alpha."""
    cliques = 0
    rest = avail
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        cand = rest & rows[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= rows[u]
        rest &= ~clique
        cliques += 1
    return cliques


def _mis_size(rows, avail: int, best_floor: int) -> int:
    """Exact max independent set size within `avail` (branch and bound)."""
    if avail == 0:
        return 0
    # safe reductions: isolated or degree-1 vertices always join the set
    v = 0
    a = avail
    while a:
        if a & 1:
            deg_mask = rows[v] & avail
            if deg_mask == 0:
                return 1 + _mis_size(rows, avail & ~(1 << v), best_floor - 1)
            if bin(deg_mask).count("1") == 1:
                return 1 + _mis_size(
                    rows, avail & ~(1 << v) & ~deg_mask, best_floor - 1
                )
        a >>= 1
        v += 1
    if _greedy_clique_cover_bound(rows, avail) <= best_floor:
        return best_floor  # cannot beat what the caller already has
    # branch on a maximum-degree vertex
    bestv, bestdeg = -1, -1
    a, v = avail, 0
    while a:
        if a & 1:
            d = bin(rows[v] & avail).count("1")
            if d > bestdeg:
                bestv, bestdeg = v, d
        a >>= 1
        v += 1
    without = _mis_size(rows, avail & ~(1 << bestv), best_floor)
    best = max(best_floor, without)
    with_v = 1 + _mis_size(rows, avail & ~(1 << bestv) & ~rows[bestv], best - 1)
    return max(best, with_v)


def independence_number(G: Graph, cap: int = 40) -> int:
    """Exact alpha(G) for orders up to `cap`."""
    if G.n > cap:
        raise SizeLimitError(
            f"order {G.n} exceeds the exact solver cap {cap}; "
            "use independence_at_most for a bound check"
        )
    return _mis_size(G.rows, (1 << G.n) - 1, 0)


def independence_at_most(G: Graph, bound: int) -> bool:
    """True iff alpha(G) <= bound; same search with an early cutoff."""

    def search(avail: int, picked: int) -> bool:
        # returns True as soon as an independent set of size bound+1 exists
        if picked > bound:
            return True
        if avail == 0:
            return False
        if picked + _greedy_clique_cover_bound(G.rows, avail) <= bound:
            return False
        v = (avail & -avail).bit_length() - 1
        if search(avail & ~(1 << v) & ~G.rows[v], picked + 1):
            return True
        return search(avail & ~(1 << v), picked)

    return not search((1 << G.n) - 1, 0)


def is_isomorphic(G1: Graph, G2: Graph, cap: int = 10) -> bool:
    """Exact isomorphism by canonical-form equality (orders <= cap)."""
    if G1.n > cap or G2.n > cap:
        raise SizeLimitError(f"isomorphism test capped at order {cap}")
    if G1.n != G2.n or G1.m != G2.m:
        return False
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return False
    from .census import canonical_form

    return canonical_form(G1) == canonical_form(G2)
