"""Numerical checkers for the A_alpha spectral claims.

Each checker looks at one concrete instance and returns a :class:`Verdict`.
Hypotheses that are not met give a ``not-applicable`` verdict instead of being
skipped, so that the coverage of a scan can be audited.  Malformed input (an
edge that is already present, a disconnected graph where connectivity is a
precondition, ...) raises ``ValueError``.

Tolerances: two eigenvalue quantities are equal when they differ by at most
``EQ_TOL``; a strict inequality is only asserted with a margin above
``STRICT_TOL``, gaps in between are reported as ``numerically-tight``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from . import closed_forms as cf
from .enumeration import GraphClass, enumerate_graphs
from .families import complete_bipartite_graph, star_graph
from .graph import (
    Graph,
    ScaleError,
    add_edge,
    canonical_form,
    circumference,
    has_bipartite_component,
    is_bipartite,
    is_connected,
    is_forest,
    is_tree,
    isolated_vertices,
    k2_components,
    matching_number,
    pendant_counts,
)
from .spectra import (
    alpha_matrix,
    alpha_spectrum,
    check_alpha,
    eigen_residual,
    multiplicity_of,
    psd_threshold,
    spectrum,
)

EQ_TOL = 1e-9
STRICT_TOL = 1e-6
EIGVEC_TOL = 1e-7
ALPHA0_TOL = 1e-6


class Status(str, Enum):
    HOLDS = "holds"
    EQUALITY = "holds-with-equality"
    VIOLATED = "violated"
    TIGHT = "numerically-tight"
    NOT_APPLICABLE = "not-applicable"


_SEVERITY = [Status.VIOLATED, Status.TIGHT, Status.EQUALITY, Status.HOLDS, Status.NOT_APPLICABLE]


def worst(statuses: Iterable[Status]) -> Status:
    statuses = list(statuses)
    return min(statuses, key=_SEVERITY.index) if statuses else Status.NOT_APPLICABLE


def set_tolerance(eq_tol: float) -> None:
    """Override the equality tolerance used by every checker (default 1e-9)."""
    global EQ_TOL
    if not 0 < eq_tol < STRICT_TOL:
        raise ValueError(f"tolerance must lie in (0, {STRICT_TOL}), got {eq_tol}")
    EQ_TOL = eq_tol


def classify(margin: float, eq_tol: float | None = None, strict_tol: float | None = None) -> Status:
    """Status of ``lhs >= rhs`` given ``margin = lhs - rhs``."""
    eq_tol = EQ_TOL if eq_tol is None else eq_tol
    strict_tol = STRICT_TOL if strict_tol is None else strict_tol
    if margin < -eq_tol:
        return Status.VIOLATED
    if margin <= eq_tol:
        return Status.EQUALITY
    if margin <= strict_tol:
        return Status.TIGHT
    return Status.HOLDS


def classify_strict(margin: float) -> Status:
    """Status of ``lhs > rhs``: a tie within EQ_TOL contradicts the claim."""
    status = classify(margin)
    return Status.VIOLATED if status is Status.EQUALITY else status


def classify_characterized(margin: float, extremal: bool) -> Status:
    """``lhs >= rhs`` with equality exactly when ``extremal`` holds."""
    status = classify(margin)
    if status is Status.VIOLATED:
        return status
    if status is Status.EQUALITY:
        return Status.EQUALITY if extremal else Status.VIOLATED
    if extremal:
        # a gap inside the tight band cannot be told apart from equality
        return Status.TIGHT if status is Status.TIGHT else Status.VIOLATED
    return status


@dataclass
class Verdict:
    claim_id: str
    graph: Graph | None
    alpha: float | None
    status: Status
    params: dict = field(default_factory=dict)
    margin: float | None = None
    witness: dict = field(default_factory=dict)

    @property
    def canonical(self) -> str | None:
        if self.graph is None or self.graph.n > 8:
            return None
        return canonical_form(self.graph)

    @property
    def ok(self) -> bool:
        return self.status is not Status.VIOLATED

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "graph_n": None if self.graph is None else self.graph.n,
            "graph_edges": None if self.graph is None else [list(e) for e in self.graph.edges],
            "canonical": self.canonical,
            "alpha": self.alpha,
            "params": self.params,
            "status": self.status.value,
            "margin": self.margin,
            "witness": self.witness,
        }


def _floats(values) -> list[float]:
    return [float(x) for x in values]


def _not_applicable(claim: str, g: Graph | None, alpha: float | None, reason: str, **params) -> Verdict:
    return Verdict(claim, g, alpha, Status.NOT_APPLICABLE, params, None, {"reason": reason})


# -- Theorem: adding an edge does not decrease any eigenvalue (alpha >= 1/2) ----


def check_edge_monotonicity(g: Graph, e: tuple[int, int], alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    ge = add_edge(g, e)  # raises if e is already an edge
    before = alpha_spectrum(g, alpha).eigenvalues
    after = alpha_spectrum(ge, alpha).eigenvalues
    diffs = after - before
    idx = int(np.argmin(diffs))
    margin = float(diffs[idx])
    witness = {"min_index": idx + 1, "before": _floats(before), "after": _floats(after)}
    params = {"edge": list(e)}
    if alpha < 0.5:
        witness["reason"] = "alpha < 1/2"
        witness["inequality_holds"] = margin >= -EQ_TOL
        return Verdict("thm1.1", g, alpha, Status.NOT_APPLICABLE, params, margin, witness)
    return Verdict("thm1.1", g, alpha, classify(margin), params, margin, witness)


# -- Weyl inequalities with the common-eigenvector equality condition ----------


def _eigenspace(spec, k: int, tol: float = EIGVEC_TOL) -> np.ndarray:
    """Orthonormal basis of the eigenvectors whose eigenvalue clusters with lambda_k."""
    w = spec.eigenvalues
    lo = hi = k - 1
    while lo > 0 and w[lo - 1] - w[lo] <= tol:
        lo -= 1
    while hi < len(w) - 1 and w[hi] - w[hi + 1] <= tol:
        hi += 1
    return spec.eigenvectors[:, lo : hi + 1]


def common_eigenvector(mats: Sequence[np.ndarray], specs, indices: Sequence[int]) -> tuple[np.ndarray, list[float]]:
    """Best unit vector in the first matrix's eigenspace that is also an eigenvector
    of the others for their indexed eigenvalues; returns it with its residuals."""
    basis = _eigenspace(specs[0], indices[0])
    n = basis.shape[0]
    blocks = [(m - spec[k] * np.eye(n)) @ basis for m, spec, k in zip(mats[1:], specs[1:], indices[1:])]
    stacked = np.vstack(blocks) if blocks else np.zeros((1, basis.shape[1]))
    _, _, vt = np.linalg.svd(stacked)
    x = basis @ vt[-1]
    x /= np.linalg.norm(x)
    resid = [eigen_residual(m, spec[k], x) for m, spec, k in zip(mats, specs, indices)]
    return x, resid


def check_weyl(a: np.ndarray, b: np.ndarray, i: int, j: int, spectra=None) -> Verdict:
    """Check lambda_i(A+B) <= lambda_j(A) + lambda_{i-j+1}(B) when i >= j and
    lambda_i(A+B) >= lambda_j(A) + lambda_{i-j+n}(B) when i <= j.

    On equality a common eigenvector of the three matrices for the three involved
    eigenvalues must exist; a strict inequality must admit none.  ``spectra`` may
    carry precomputed ``(spec(A+B), spec(A), spec(B))`` with eigenvectors.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("A and B must be square matrices of the same size")
    n = a.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) outside 1..{n}")
    c = a + b
    if spectra is None:
        spectra = spectrum(c, True), spectrum(a, True), spectrum(b, True)
    sc, sa, sb = spectra
    parts = {}
    statuses = []
    margins = []
    for kind, k in (("upper", i - j + 1), ("lower", i - j + n)):
        if (kind == "upper" and i < j) or (kind == "lower" and i > j):
            continue
        bound = sa[j] + sb[k]
        margin = bound - sc[i] if kind == "upper" else sc[i] - bound
        status = classify(margin)
        _, resid = common_eigenvector([c, a, b], [sc, sa, sb], [i, j, k])
        shared = max(resid) <= EIGVEC_TOL
        if status is Status.EQUALITY and not shared:
            status = Status.VIOLATED
        elif status is Status.HOLDS and shared:
            status = Status.VIOLATED
        parts[kind] = {
            "b_index": k,
            "lambda_c": sc[i],
            "lambda_a": sa[j],
            "lambda_b": sb[k],
            "margin": margin,
            "common_eigenvector": shared,
            "residuals": resid,
        }
        statuses.append(status)
        margins.append(margin)
    return Verdict("lemma2.1", None, None, worst(statuses), {"i": i, "j": j, "n": n}, min(margins), parts)


# -- Theorem: lambda_k = alpha*n - 1 iff k vertices of degree n-1 -------------------


def check_kth_extremal(g: Graph, alpha: float, k: int) -> Verdict:
    alpha = check_alpha(alpha)
    n = g.n
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in 2..{n}, got {k}")
    if alpha <= 0.5:
        return _not_applicable("thm1.2", g, alpha, "alpha <= 1/2", k=k)
    lam = alpha_spectrum(g, alpha)[k]
    target = alpha * n - 1
    gap = target - lam
    full = sum(1 for d in g.degrees if d == n - 1)
    eig_side = abs(gap) <= EQ_TOL
    deg_side = full >= k
    witness = {"lambda_k": lam, "target": target, "full_degree_vertices": full, "eigen_side": eig_side, "degree_side": deg_side}
    if eig_side != deg_side:
        status = Status.VIOLATED
    elif eig_side:
        status = Status.EQUALITY
    elif abs(gap) <= STRICT_TOL:
        status = Status.TIGHT
    else:
        status = Status.HOLDS
    if gap < -EQ_TOL:
        status = Status.VIOLATED  # lambda_k above alpha*n - 1 breaks the upper bound itself
    return Verdict("thm1.2", g, alpha, status, {"k": k}, gap, witness)


# -- Theorem: circumference bounds from lambda_k versus 2*alpha -------------------


def check_circumference_bound(g: Graph, alpha: float, k: int) -> Verdict:
    alpha = check_alpha(alpha)
    if not is_connected(g):
        raise ValueError("circumference bound needs a connected graph")
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in 1..{g.n}, got {k}")
    if alpha < 0.5:
        return _not_applicable("thm1.3", g, alpha, "alpha < 1/2", k=k)
    lam = alpha_spectrum(g, alpha)[k]
    gap = lam - 2 * alpha
    if k % 2 == 0:
        if abs(gap) <= EQ_TOL:
            case, bound = "I-1", 2 * k
        elif gap < 0:
            case, bound = "I-2", 2 * k - 1
        else:
            return _not_applicable("thm1.3", g, alpha, "lambda_k > 2alpha", k=k)
    elif gap <= EQ_TOL:
        case, bound = "II", 2 * k - 2
    else:
        return _not_applicable("thm1.3", g, alpha, "lambda_k > 2alpha", k=k)
    c = circumference(g)
    slack = bound - c
    witness = {"case": case, "lambda_k": lam, "two_alpha": 2 * alpha, "circumference": c, "bound": bound}
    if slack < 0:
        # the case was selected from a gap too small to trust
        status = Status.TIGHT if EQ_TOL < abs(gap) <= STRICT_TOL else Status.VIOLATED
    else:
        status = Status.EQUALITY if slack == 0 else Status.HOLDS
    return Verdict("thm1.3", g, alpha, status, {"k": k}, float(slack), witness)


# -- Theorem: matching number bounds ----------------------------------------------


def check_matching_bound(g: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if not is_connected(g):
        raise ValueError("matching bound needs a connected graph")
    if alpha < 0.5:
        return _not_applicable("thm3.3", g, alpha, "alpha < 1/2")
    mu = matching_number(g)
    n = g.n
    if n > 2 * mu:
        index = mu
    else:
        index = mu - 1
    if index < 1:
        return _not_applicable("thm3.3", g, alpha, f"eigenvalue index {index} undefined", mu=mu)
    lam = alpha_spectrum(g, alpha)[index]
    margin = lam - 1.0
    witness = {"case": "I" if n > 2 * mu else "II", "lambda": lam}
    return Verdict("thm3.3", g, alpha, classify_strict(margin), {"mu": mu, "index": index}, margin, witness)


# -- Lemma: each eigenvalue is non-decreasing in alpha ---------------------------


def check_alpha_monotonicity(g: Graph, lo: float, hi: float) -> Verdict:
    lo, hi = check_alpha(lo, "lo"), check_alpha(hi, "hi")
    if hi <= lo:
        raise ValueError(f"need hi > lo, got lo={lo}, hi={hi}")
    w_lo = alpha_spectrum(g, lo).eigenvalues
    w_hi = alpha_spectrum(g, hi).eigenvalues
    diffs = w_hi - w_lo
    if len(diffs) == 0:
        return _not_applicable("lemma3.2", g, None, "empty graph", lo=lo, hi=hi)
    idx = int(np.argmin(diffs))
    margin = float(diffs[idx])
    witness = {"min_index": idx + 1, "at_lo": _floats(w_lo), "at_hi": _floats(w_hi)}
    return Verdict("lemma3.2", g, None, classify(margin), {"lo": lo, "hi": hi}, margin, witness)


# -- Least eigenvalue lower bound 2*alpha - 1 -------------------------------------


def check_min_lower_bound(g: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if alpha <= 0.5:
        return _not_applicable("thm1.6", g, alpha, "alpha <= 1/2")
    if g.n == 0 or isolated_vertices(g):
        return _not_applicable("thm1.6", g, alpha, "isolated vertex present (lambda_n = 0)")
    lam = alpha_spectrum(g, alpha).least
    margin = lam - (2 * alpha - 1)
    has_k2 = bool(k2_components(g))
    witness = {"lambda_n": lam, "bound": 2 * alpha - 1, "has_k2_component": has_k2}
    return Verdict("thm1.6", g, alpha, classify_characterized(margin, has_k2), {}, margin, witness)


def check_tree_bound(t: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if not is_tree(t):
        raise ValueError("tree bound needs a tree")
    if not 0.5 < alpha < 1:
        return _not_applicable("lemma4.1", t, alpha, "alpha outside (1/2, 1)")
    if t.n < 2:
        return _not_applicable("lemma4.1", t, alpha, "tree of order 1")
    lam = alpha_spectrum(t, alpha).least
    margin = lam - (2 * alpha - 1)
    is_k2 = t.n == 2
    witness = {"lambda_n": lam, "bound": 2 * alpha - 1, "is_k2": is_k2}
    return Verdict("lemma4.1", t, alpha, classify_characterized(margin, is_k2), {}, margin, witness)


# -- Least eigenvalue upper bounds -------------------------------------------------


def check_min_upper_bound(g: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if not 0.5 < alpha < 1:
        return _not_applicable("thm4.4", g, alpha, "alpha outside (1/2, 1)")
    if g.n < 2:
        # K_1 has lambda_1 = 0 > alpha - 1; the bound is about n >= 2
        return _not_applicable("thm4.4", g, alpha, "order < 2")
    lam = alpha_spectrum(g, alpha).least
    bound = alpha * g.n - 1
    margin = bound - lam
    complete = g.is_complete()
    witness = {"lambda_n": lam, "bound": bound, "is_complete": complete}
    return Verdict("thm4.4", g, alpha, classify_characterized(margin, complete), {}, margin, witness)


def balanced_bipartite(n: int) -> Graph:
    return complete_bipartite_graph((n + 1) // 2, n // 2)


def check_bipartite_extremal(g: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if is_bipartite(g) is None:
        raise ValueError("bipartite extremal check needs a bipartite graph")
    if not 0.5 < alpha < 1:
        return _not_applicable("thm4.5", g, alpha, "alpha outside (1/2, 1)")
    if g.n < 2:
        return _not_applicable("thm4.5", g, alpha, "order < 2")
    a, b = (g.n + 1) // 2, g.n // 2
    bound = cf.complete_bipartite_min_eigenvalue(a, b, alpha)
    lam = alpha_spectrum(g, alpha).least
    margin = bound - lam
    extremal = canonical_form(g) == canonical_form(balanced_bipartite(g.n))
    witness = {"lambda_n": lam, "bound": bound, "parts": [a, b], "is_extremal": extremal}
    return Verdict("thm4.5", g, alpha, classify_characterized(margin, extremal), {}, margin, witness)


# -- Multiplicity constructions ----------------------------------------------------


def check_multiplicity_construction(g: Graph, v1: Iterable[int], alpha: float) -> Verdict:
    """Vertices of ``v1`` share degree d and their neighbourhood outside ``v1``; if
    ``v1`` is a clique, (d+1)alpha - 1 has multiplicity >= |v1| - 1, if independent,
    d*alpha does."""
    alpha = check_alpha(alpha)
    verts = sorted(set(int(v) for v in v1))
    k = len(verts)
    if k < 2:
        raise ValueError("V1 needs at least two vertices")
    if any(not 0 <= v < g.n for v in verts):
        raise ValueError("V1 has a vertex outside the graph")
    degs = {g.degree(v) for v in verts}
    if len(degs) != 1:
        raise ValueError(f"vertices of V1 have different degrees {sorted(degs)}")
    mask = sum(1 << v for v in verts)
    outside = {g.adj[v] & ~mask for v in verts}
    if len(outside) != 1:
        raise ValueError("vertices of V1 have different neighbourhoods in V2")
    inside = [g.adj[v] & mask for v in verts]
    if all(inside[i] == mask & ~(1 << v) for i, v in enumerate(verts)):
        kind = "clique"
    elif not any(inside):
        kind = "independent"
    else:
        raise ValueError("V1 induces neither a clique nor an independent set")
    d = degs.pop()
    target = (d + 1) * alpha - 1 if kind == "clique" else d * alpha
    m = alpha_matrix(g, alpha)
    mult = multiplicity_of(spectrum(m), target, EQ_TOL)
    resid = []
    for v in verts[1:]:
        x = np.zeros(g.n)
        x[verts[0]], x[v] = 1.0, -1.0
        resid.append(eigen_residual(m, target, x))
    witness = {"kind": kind, "degree": d, "eigenvalue": target, "multiplicity": mult, "max_residual": max(resid)}
    margin = mult - (k - 1)
    if margin < 0 or max(resid) > EQ_TOL:
        status = Status.VIOLATED
    else:
        status = Status.EQUALITY if margin == 0 else Status.HOLDS
    return Verdict("prop2.2", g, alpha, status, {"V1": verts, "k": k}, float(margin), witness)


def check_forest_multiplicity(f: Graph, alpha: float) -> Verdict:
    alpha = check_alpha(alpha)
    if not is_forest(f):
        raise ValueError("forest multiplicity check needs a forest")
    p, q = pendant_counts(f)
    need = p - q
    mult = multiplicity_of(alpha_spectrum(f, alpha), alpha, EQ_TOL)
    witness = {"p": p, "q": q, "multiplicity": mult, "vacuous": need <= 0}
    margin = mult - need
    if need <= 0:
        status = Status.HOLDS
    elif margin < 0:
        status = Status.VIOLATED
    else:
        status = Status.EQUALITY if margin == 0 else Status.HOLDS
    return Verdict("cor2.4", f, alpha, status, {"p": p, "q": q}, float(margin), witness)


def check_isolated_multiplicities(g: Graph, alpha: float) -> Verdict:
    """0 has multiplicity >= #isolated vertices and 2alpha - 1 has multiplicity >=
    #isolated edges; exact counts are recorded in the witness."""
    alpha = check_alpha(alpha)
    if not 0.5 < alpha < 1:
        return _not_applicable("cor4.2", g, alpha, "alpha outside (1/2, 1)")
    k = len(isolated_vertices(g))
    l = len(k2_components(g))
    spec = alpha_spectrum(g, alpha)
    m0 = multiplicity_of(spec, 0.0, EQ_TOL)
    m1 = multiplicity_of(spec, 2 * alpha - 1, EQ_TOL)
    margin = min(m0 - k, m1 - l)
    witness = {"isolated_vertices": k, "isolated_edges": l, "mult_zero": m0, "mult_2alpha_minus_1": m1}
    if margin < 0:
        status = Status.VIOLATED
    else:
        status = Status.EQUALITY if m0 == k and m1 == l else Status.HOLDS
    return Verdict("cor4.2", g, alpha, status, {"k": k, "l": l}, float(margin), witness)


# -- PSD threshold -------------------------------------------------------------------


def regular_alpha0(g: Graph) -> float:
    """-lambda_min(A) / (d - lambda_min(A)) for a d-regular graph with an edge."""
    if not g.is_regular() or g.m == 0:
        raise ValueError("regular formula needs a regular graph with at least one edge")
    d = g.degrees[0]
    lmin = spectrum(g.adjacency_matrix()).least
    return -lmin / (d - lmin)


def check_alpha0_regular(g: Graph, tol: float = 1e-9) -> Verdict:
    if g.m == 0:
        raise ValueError("alpha_0 is degenerate for edgeless graphs")
    a0 = psd_threshold(g, tol)
    witness: dict = {"alpha0": a0}
    statuses = []
    margins = []
    if g.is_regular():
        formula = regular_alpha0(g)
        diff = abs(a0 - formula)
        witness.update(regular_formula=formula, regular_diff=diff)
        statuses.append(Status.EQUALITY if diff <= ALPHA0_TOL else Status.VIOLATED)
        margins.append(-diff)
    if has_bipartite_component(g):
        diff = abs(a0 - 0.5)
        witness.update(bipartite_rule=0.5, bipartite_diff=diff)
        statuses.append(Status.EQUALITY if diff <= ALPHA0_TOL else Status.VIOLATED)
        margins.append(-diff)
    if not statuses:
        witness["reason"] = "not regular and no bipartite component"
        return Verdict("alpha0", g, None, Status.NOT_APPLICABLE, {}, None, witness)
    return Verdict("alpha0", g, None, worst(statuses), {}, min(margins), witness)


# -- Conjecture: the star minimises lambda_n among connected graphs ----------------


@dataclass
class ScanSummary:
    n: int
    alpha: float
    graphs_scanned: int = 0
    violations: int = 0
    tight: int = 0
    equality: int = 0
    star_value: float = math.nan
    min_non_star: float = math.inf
    min_non_star_edges: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "graphs_scanned": self.graphs_scanned,
            "violations": self.violations,
            "tight": self.tight,
            "equality": self.equality,
            "star_value": self.star_value,
            "min_non_star": self.min_non_star,
            "min_non_star_edges": self.min_non_star_edges,
        }


def check_star_minimal(g: Graph, alpha: float, star_value: float | None = None, star_code: str | None = None) -> Verdict:
    alpha = check_alpha(alpha)
    if not is_connected(g) or g.n < 3:
        raise ValueError("star comparison needs a connected graph with n >= 3")
    if not 0.5 < alpha < 1:
        return _not_applicable("conj4.3", g, alpha, "alpha outside (1/2, 1)")
    if star_value is None:
        star_value = cf.star_min_eigenvalue(g.n, alpha)
    if star_code is None:
        star_code = canonical_form(star_graph(g.n))
    lam = alpha_spectrum(g, alpha).least
    margin = lam - star_value
    is_star = canonical_form(g) == star_code
    witness = {"lambda_n": lam, "star_value": star_value, "is_star": is_star}
    return Verdict("conj4.3", g, alpha, classify_characterized(margin, is_star), {}, margin, witness)


def conjecture_scan(n: int, alphas: Sequence[float]) -> tuple[list[Verdict], list[ScanSummary]]:
    """Compare lambda_n of every connected graph of order n with that of the star.

    A ``violated`` verdict here is a counterexample to an open conjecture, which
    is a legitimate finding rather than a harness failure.
    """
    if not 3 <= n <= 8:
        raise ScaleError(f"conjecture scan supports 3 <= n <= 8, got {n}")
    alphas = [check_alpha(a) for a in alphas]
    for a in alphas:
        if not 0.5 < a < 1:
            raise ValueError(f"conjecture scan needs alpha in (1/2, 1), got {a}")
    graphs = list(enumerate_graphs(n, GraphClass.CONNECTED))
    star_code = canonical_form(star_graph(n))
    verdicts = []
    summaries = []
    for a in alphas:
        star_value = cf.star_min_eigenvalue(n, a)
        summary = ScanSummary(n, a, star_value=star_value)
        for g in graphs:
            v = check_star_minimal(g, a, star_value, star_code)
            verdicts.append(v)
            summary.graphs_scanned += 1
            summary.violations += v.status is Status.VIOLATED
            summary.tight += v.status is Status.TIGHT
            summary.equality += v.status is Status.EQUALITY
            if not v.witness["is_star"] and v.witness["lambda_n"] < summary.min_non_star:
                summary.min_non_star = v.witness["lambda_n"]
                summary.min_non_star_edges = [list(e) for e in g.edges]
        summaries.append(summary)
    return verdicts, summaries
