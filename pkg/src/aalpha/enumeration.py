"""Pairwise non-isomorphic graphs of small order.

Graphs of order n are grown from the representatives of order n-1 by adding a
vertex joined to every subset of the old vertices.  Every graph arises this way
from the deletion of a minimum-degree vertex, so candidates whose new vertex is
not of minimum degree are skipped.  Candidates are deduplicated by canonical
form and emitted in sorted canonical order, each relabelled to its canonical
labelling.
"""

from __future__ import annotations

import logging
from enum import Enum
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterator

from .graph import (
    CANONICAL_MAX_ORDER,
    Graph,
    ScaleError,
    canonical_form,
    graph_from_canonical,
    is_bipartite,
    is_connected,
    is_forest,
    is_tree,
)

log = logging.getLogger(__name__)

MAX_ORDER = CANONICAL_MAX_ORDER


class GraphClass(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    TREE = "tree"
    FOREST = "forest"
    BIPARTITE = "bipartite"
    NO_ISOLATED = "no-isolated"
    REGULAR = "regular"


PREDICATES: dict[GraphClass, Callable[[Graph], bool]] = {
    GraphClass.ALL: lambda g: True,
    GraphClass.CONNECTED: is_connected,
    GraphClass.TREE: is_tree,
    GraphClass.FOREST: is_forest,
    GraphClass.BIPARTITE: lambda g: is_bipartite(g) is not None,
    GraphClass.NO_ISOLATED: lambda g: all(g.degrees),
    GraphClass.REGULAR: lambda g: g.is_regular(),
}

# classes closed under deleting a minimum-degree vertex can be grown within themselves
_HEREDITARY = {GraphClass.ALL, GraphClass.FOREST, GraphClass.TREE}


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if n > MAX_ORDER:
        raise ScaleError(f"enumeration is limited to n <= {MAX_ORDER}, got {n}")


def _extend(parent: Graph, neighbours: tuple[int, ...]) -> Graph | None:
    """Add vertex ``n`` adjacent to ``neighbours``; None unless it has minimum degree."""
    n = parent.n
    d = len(neighbours)
    mask = 0
    adj = list(parent.adj)
    for u in neighbours:
        mask |= 1 << u
        adj[u] |= 1 << n
    adj.append(mask)
    if any(m.bit_count() < d for m in adj[:n]):
        return None
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _codes(n: int, base: GraphClass) -> tuple[str, ...]:
    """Sorted canonical codes of the hereditary class ``base`` at order n."""
    if n == 1:
        return ("",)
    parents = [graph_from_canonical(n - 1, c) for c in _codes(n - 1, base)]
    if base is GraphClass.TREE:
        sizes = [1]
    elif base is GraphClass.FOREST:
        sizes = [0, 1]
    else:
        sizes = range(n)
    pred = PREDICATES[base]
    seen: set[str] = set()
    for p in parents:
        for d in sizes:
            for nbrs in combinations(range(n - 1), d):
                g = _extend(p, nbrs)
                if g is not None and pred(g):
                    seen.add(canonical_form(g))
    log.debug("order %d (%s): %d classes", n, base.value, len(seen))
    return tuple(sorted(seen))


def _class_codes(n: int, cls: GraphClass, cache_dir: Path | None) -> tuple[str, ...]:
    if cache_dir is not None:
        path = Path(cache_dir) / f"{cls.value}-{n}.txt"
        if path.exists():
            return tuple(path.read_text().splitlines())
    if cls in _HEREDITARY:
        codes = _codes(n, cls)
    else:
        pred = PREDICATES[cls]
        codes = tuple(c for c in _codes(n, GraphClass.ALL) if pred(graph_from_canonical(n, c)))
    if cache_dir is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(c + "\n" for c in codes))
    return codes


def enumerate_graphs(n: int, cls: GraphClass | str = GraphClass.ALL, cache_dir: str | Path | None = None) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class in ``cls``,
    in ascending canonical order.  ``cache_dir`` optionally stores one canonical
    bitstring per line per (n, class); it is regenerated when missing."""
    cls = GraphClass(cls)
    _check_order(n)
    for code in _class_codes(n, cls, Path(cache_dir) if cache_dir is not None else None):
        yield graph_from_canonical(n, code)


def count(n: int, cls: GraphClass | str = GraphClass.ALL) -> int:
    cls = GraphClass(cls)
    _check_order(n)
    return len(_class_codes(n, cls, None))
