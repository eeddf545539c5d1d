"""Named graph families: K_n, C_n, P_n, stars, K_{a,b}, complete split graphs, K_n - e."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, empty_graph, graph_from_edges


class Family(str, Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete-bipartite"
    COMPLETE_SPLIT = "complete-split"
    COMPLETE_MINUS_EDGE = "complete-minus-edge"
    EMPTY = "empty"


_ARITY = {
    Family.COMPLETE: 1,
    Family.CYCLE: 1,
    Family.PATH: 1,
    Family.STAR: 1,
    Family.COMPLETE_BIPARTITE: 2,
    Family.COMPLETE_SPLIT: 2,
    Family.COMPLETE_MINUS_EDGE: 1,
    Family.EMPTY: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A family member.  ``params`` is ``(n,)`` except ``(a, b)`` for
    complete-bipartite and ``(a, n)`` for complete-split (clique size, order)."""

    kind: Family
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Family(self.kind))
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if len(self.params) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind.value} takes {_ARITY[self.kind]} parameter(s), got {self.params}")
        problem = _infeasible(self.kind, self.params)
        if problem:
            raise ValueError(f"infeasible {self.kind.value}{self.params}: {problem}")

    @property
    def order(self) -> int:
        if self.kind is Family.COMPLETE_BIPARTITE:
            return self.params[0] + self.params[1]
        if self.kind is Family.COMPLETE_SPLIT:
            return self.params[1]
        return self.params[0]

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"cycle:4"``, ``"complete-bipartite:2,3"``, ``"complete-split:2,5"`` ..."""
        name, _, args = text.partition(":")
        try:
            kind = Family(name.strip().lower().replace("_", "-"))
        except ValueError:
            known = ", ".join(f.value for f in Family)
            raise ValueError(f"unknown family {name!r} (known: {known})") from None
        try:
            params = tuple(int(p) for p in args.split(",")) if args else ()
        except ValueError:
            raise ValueError(f"family parameters must be integers: {args!r}") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind.value}:{','.join(map(str, self.params))}"


def _infeasible(kind: Family, p: tuple[int, ...]) -> str | None:
    if kind is Family.CYCLE and p[0] < 3:
        return "a cycle needs n >= 3"
    if kind is Family.STAR and p[0] < 2:
        return "a star needs n >= 2"
    if kind is Family.COMPLETE_BIPARTITE and min(p) < 1:
        return "both parts need at least one vertex"
    if kind is Family.COMPLETE_SPLIT and not 1 <= p[0] <= p[1] - 1:
        return "clique size a must satisfy 1 <= a <= n-1"
    if kind is Family.COMPLETE_MINUS_EDGE and p[0] < 2:
        return "K_n - e needs n >= 2"
    if kind in (Family.COMPLETE, Family.PATH) and p[0] < 1:
        return "order must be at least 1"
    if kind is Family.EMPTY and p[0] < 0:
        return "order must be non-negative"
    return None


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_family(FamilySpec(Family.CYCLE, (n,)))


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}; vertices ``0..a-1`` form the first part."""
    return graph_from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def complete_split_graph(a: int, n: int) -> Graph:
    """CS_{a,n-a} = K_a joined to (n-a)K_1; the clique is ``0..a-1``."""
    return graph_from_edges(n, [(u, v) for u in range(a) for v in range(u + 1, n)])


def build_family(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind is Family.COMPLETE:
        return complete_graph(p[0])
    if kind is Family.CYCLE:
        n = p[0]
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind is Family.PATH:
        return path_graph(p[0])
    if kind is Family.STAR:
        return star_graph(p[0])
    if kind is Family.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(*p)
    if kind is Family.COMPLETE_SPLIT:
        return complete_split_graph(*p)
    if kind is Family.COMPLETE_MINUS_EDGE:
        # the removed edge is (n-2, n-1)
        n = p[0]
        return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) != (n - 2, n - 1)])
    return empty_graph(p[0])
