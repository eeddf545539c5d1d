"""Claim registry: which checker runs over which enumerated graph class."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import closed_forms as cf
from . import theorems as th
from .enumeration import GraphClass, enumerate_graphs
from .families import complete_graph, complete_split_graph
from .graph import Graph, complement, twin_classes
from .spectra import alpha_matrix, alpha_spectrum, spectrum

DEFAULT_ALPHAS = (0.5, 0.6, 0.75, 0.9)

InstanceRunner = Callable[[Graph, Sequence[float]], Iterable[th.Verdict]]


@dataclass(frozen=True)
class Claim:
    claim_id: str
    graph_class: GraphClass | None
    description: str
    run: InstanceRunner
    min_order: int = 1


def _thm1_1(g, alphas):
    for e in g.non_edges():
        for a in alphas:
            yield th.check_edge_monotonicity(g, e, a)


def _lemma2_1(g, alphas):
    # the decomposition A_alpha(G) + A_alpha(G^c) = A_alpha(K_n)
    n = g.n
    for a in alphas:
        ma, mb = alpha_matrix(g, a), alpha_matrix(complement(g), a)
        specs = spectrum(ma + mb, True), spectrum(ma, True), spectrum(mb, True)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                v = th.check_weyl(ma, mb, i, j, specs)
                v.graph, v.alpha = g, a
                yield v


def _thm1_2(g, alphas):
    for a in alphas:
        for k in range(2, g.n + 1):
            yield th.check_kth_extremal(g, a, k)


def _thm1_3(g, alphas):
    for a in alphas:
        for k in range(1, g.n + 1):
            yield th.check_circumference_bound(g, a, k)


def _thm3_3(g, alphas):
    for a in alphas:
        yield th.check_matching_bound(g, a)


def _lemma3_2(g, alphas):
    for lo, hi in combinations(sorted(set(alphas)), 2):
        yield th.check_alpha_monotonicity(g, lo, hi)


def _per_alpha(check):
    def run(g, alphas):
        for a in alphas:
            yield check(g, a)

    return run


def _prop2_2(g, alphas):
    for _, verts in twin_classes(g):
        for a in alphas:
            yield th.check_multiplicity_construction(g, verts, a)


def _cor2_3(g, alphas):
    """Formula against solver for every complete split graph of the same order."""
    n = g.n
    for a_size in range(1, n):
        cs = complete_split_graph(a_size, n)
        for a in alphas:
            formula = cf.complete_split_spectrum(a_size, n, a).eigenvalues
            solver = alpha_spectrum(cs, a).eigenvalues
            err = float(np.max(np.abs(formula - solver)))
            status = th.Status.EQUALITY if err <= th.EQ_TOL else th.Status.VIOLATED
            witness = {"formula": [float(x) for x in formula], "solver": [float(x) for x in solver]}
            yield th.Verdict("cor2.3", cs, a, status, {"a": a_size}, -err, witness)


def _alpha0(g, alphas):
    if g.m:
        yield th.check_alpha0_regular(g)


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("thm1.1", GraphClass.ALL, "adding an edge never lowers an eigenvalue", _thm1_1),
        Claim("lemma2.1", GraphClass.ALL, "Weyl inequalities on A(G) + A(G^c) = A(K_n)", _lemma2_1),
        Claim("prop2.2", GraphClass.ALL, "twin classes force eigenvalue multiplicities", _prop2_2),
        Claim("cor2.3", None, "complete split spectrum formula (one complete graph per order)", _cor2_3, 2),
        Claim("cor2.4", GraphClass.FOREST, "alpha has multiplicity >= p - q in forests", _per_alpha(th.check_forest_multiplicity)),
        Claim("thm1.2", GraphClass.ALL, "lambda_k = alpha*n - 1 iff k vertices of degree n-1", _thm1_2),
        Claim("thm1.3", GraphClass.CONNECTED, "circumference bounds from lambda_k", _thm1_3),
        Claim("thm3.3", GraphClass.CONNECTED, "matching-number eigenvalue bounds", _thm3_3),
        Claim("lemma3.2", GraphClass.ALL, "eigenvalues are non-decreasing in alpha", _lemma3_2),
        Claim("thm1.6", GraphClass.NO_ISOLATED, "lambda_n >= 2alpha - 1, equality iff K_2 component", _per_alpha(th.check_min_lower_bound)),
        Claim("lemma4.1", GraphClass.TREE, "tree version of the 2alpha - 1 bound", _per_alpha(th.check_tree_bound)),
        Claim("cor4.2", GraphClass.ALL, "isolated vertices and edges give 0 and 2alpha - 1", _per_alpha(th.check_isolated_multiplicities)),
        Claim("thm4.4", GraphClass.ALL, "lambda_n <= alpha*n - 1, equality iff complete", _per_alpha(th.check_min_upper_bound)),
        Claim("thm4.5", GraphClass.BIPARTITE, "balanced complete bipartite maximises lambda_n", _per_alpha(th.check_bipartite_extremal)),
        Claim("alpha0", GraphClass.ALL, "PSD threshold: regular formula and bipartite rule", _alpha0),
    ]
}


def resolve_claims(names: Iterable[str] | None) -> list[Claim]:
    names = list(names or ["all"])
    if "all" in names:
        return list(CLAIMS.values())
    unknown = [c for c in names if c not in CLAIMS]
    if unknown:
        raise ValueError(f"unknown claim(s) {unknown}; known: {', '.join(CLAIMS)}")
    return [CLAIMS[c] for c in names]


def claim_graphs(claim: Claim, n: int, cache_dir=None) -> Iterator[Graph]:
    if n < claim.min_order:
        return
    if claim.graph_class is None:
        yield complete_graph(n)
    else:
        yield from enumerate_graphs(n, claim.graph_class, cache_dir)


def run_claim(claim: Claim, orders: Iterable[int], alphas: Sequence[float], cache_dir=None) -> Iterator[th.Verdict]:
    for n in orders:
        for g in claim_graphs(claim, n, cache_dir):
            yield from claim.run(g, alphas)


def tally(verdicts: Iterable[th.Verdict]) -> dict[str, int]:
    counts = Counter(v.status for v in verdicts)
    return {
        "checked": sum(counts.values()),
        "holds": counts[th.Status.HOLDS],
        "equality": counts[th.Status.EQUALITY],
        "tight": counts[th.Status.TIGHT],
        "not-applicable": counts[th.Status.NOT_APPLICABLE],
        "violated": counts[th.Status.VIOLATED],
    }
