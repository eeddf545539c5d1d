"""Simple undirected graphs on vertices ``0..n-1`` and their combinatorial invariants.

Graphs are immutable: adjacency is stored as one neighbour bitmask per vertex,
and every mutating operation returns a new :class:`Graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64
CANONICAL_MAX_ORDER = 8


class ScaleError(ValueError):
    """Raised when an exact (exponential) routine is asked to go beyond its size cap."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ScaleError(f"graphs are limited to {MAX_ORDER} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one bitmask per vertex")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full or mask >> v & 1:
                raise ValueError(f"invalid neighbour set for vertex {v}")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    # -- basic accessors -------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adj)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edge list with ``u < v``."""
        return tuple((u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)]

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return graph_from_edges(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return graph_from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate pairs collapse, loops are rejected."""
    if not 0 <= n <= MAX_ORDER:
        raise ScaleError(f"graphs are limited to {MAX_ORDER} vertices, got {n}")
    adj = [0] * n
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"invalid vertex pair {e}")
    if g.has_edge(u, v):
        raise ValueError(f"{e} is already an edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(g.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return graph_from_edges(offset, edges)


# -- connectivity and colouring ------------------------------------------


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v] == 0]


def k2_components(g: Graph) -> list[frozenset[int]]:
    """Components that are a single edge."""
    return [c for c in components(g) if len(c) == 2]


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Return a bipartition ``(X, Y)`` with every edge crossing, or ``None``."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    x = frozenset(v for v in range(g.n) if color[v] == 0)
    return x, frozenset(range(g.n)) - x


def has_bipartite_component(g: Graph) -> bool:
    """True when some component with at least one edge is bipartite."""
    for comp in components(g):
        if len(comp) >= 2 and is_bipartite(g.induced(sorted(comp))) is not None:
            return True
    return False


# -- exact exponential invariants ----------------------------------------

EXACT_MAX_ORDER = 12


def circumference(g: Graph) -> int:
    """Length of a longest cycle, 0 for forests.

    Exact backtracking over simple paths; intended for ``n <= 12`` (the search
    is exponential and is refused beyond that).
    """
    if g.n > EXACT_MAX_ORDER:
        raise ScaleError(f"circumference is exact only up to n={EXACT_MAX_ORDER}")
    if is_forest(g):
        return 0
    best = 0
    # each cycle is found from its smallest vertex, walking only through larger ones
    for s in range(g.n):
        allowed = ((1 << g.n) - 1) & ~((1 << (s + 1)) - 1)
        if (allowed | 1 << s).bit_count() <= best:
            break
        stack = [(s, 1 << s, 1)]
        while stack:
            v, used, length = stack.pop()
            if length >= 3 and g.has_edge(v, s) and length > best:
                best = length
                if best == g.n:
                    return best
            for u in _bits(g.adj[v] & allowed & ~used):
                stack.append((u, used | 1 << u, length + 1))
    return best


def matching_number(g: Graph) -> int:
    """Size of a maximum matching by exact search over vertex subsets (``n <= 12``)."""
    if g.n > EXACT_MAX_ORDER:
        raise ScaleError(f"matching_number is exact only up to n={EXACT_MAX_ORDER}")
    memo: dict[int, int] = {}

    def solve(free: int) -> int:
        if free in memo:
            return memo[free]
        # drop vertices with no free neighbour
        while free:
            v = (free & -free).bit_length() - 1
            if g.adj[v] & free:
                break
            free &= ~(1 << v)
        if not free:
            return 0
        rest = free & ~(1 << v)
        best = solve(rest)
        for u in _bits(g.adj[v] & rest):
            best = max(best, 1 + solve(rest & ~(1 << u)))
        memo[free] = best
        return best

    return solve((1 << g.n) - 1)


def pendant_counts(g: Graph) -> tuple[int, int]:
    """``(p, q)``: number of pendant vertices and of vertices adjacent to one."""
    pendant = [v for v in range(g.n) if g.degree(v) == 1]
    quasi = 0
    for v in pendant:
        quasi |= g.adj[v]
    return len(pendant), quasi.bit_count()


def twin_classes(g: Graph) -> list[tuple[str, tuple[int, ...]]]:
    """Maximal vertex classes with identical closed ("clique") or open ("independent")
    neighbourhoods, size at least two."""
    out = []
    for kind, key in (("clique", lambda v: g.adj[v] | 1 << v), ("independent", lambda v: g.adj[v])):
        groups: dict[int, list[int]] = {}
        for v in range(g.n):
            groups.setdefault(key(v), []).append(v)
        out.extend((kind, tuple(vs)) for vs in groups.values() if len(vs) >= 2)
    return out


# -- canonical form --------------------------------------------------------


def _pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs read column by column: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def canonical_form(g: Graph) -> str:
    """Lexicographically least upper-triangle bitstring over all vertex orderings.

    Pairs are listed column by column, so placing the vertex at position ``j``
    fixes bits ``(0,j) .. (j-1,j)``.  Orderings are grown one position at a
    time keeping only those whose prefix is minimal, which yields the exact
    global minimum without visiting all ``n!`` orderings for most graphs.
    """
    n = g.n
    if n > CANONICAL_MAX_ORDER:
        raise ScaleError(f"canonical_form is limited to n <= {CANONICAL_MAX_ORDER}")
    if n <= 1:
        return ""
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    verts = np.arange(n)
    partial = verts[:, None]
    used = np.eye(n, dtype=bool)
    chunks = []
    for j in range(1, n):
        k = len(partial)
        parent = np.repeat(np.arange(k), n)
        cand = np.tile(verts, k)
        keep = ~used[parent, cand]
        parent, cand = parent[keep], cand[keep]
        cols = a[partial[parent], cand[:, None]]
        codes = cols @ (1 << np.arange(j - 1, -1, -1))
        best = codes.min()
        sel = codes == best
        parent, cand = parent[sel], cand[sel]
        partial = np.hstack([partial[parent], cand[:, None]])
        used = used[parent].copy()
        used[np.arange(len(cand)), cand] = True
        chunks.append(format(int(best), f"0{j}b"))
    return "".join(chunks)


def graph_from_canonical(n: int, code: str) -> Graph:
    pairs = _pair_order(n)
    if len(code) != len(pairs):
        raise ValueError(f"code of length {len(code)} does not fit n={n}")
    return graph_from_edges(n, [p for p, bit in zip(pairs, code) if bit == "1"])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and sorted(g.degrees) == sorted(h.degrees) and canonical_form(g) == canonical_form(h)


# -- edge-list text format -------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise ValueError(f"header announces {m} edges, found {len(edges)}")
    return graph_from_edges(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])
