"""The matrix A_alpha(G) = alpha*D(G) + (1-alpha)*A(G) and its spectrum.

Eigenvalues are always reported in descending order, lambda_1 >= ... >= lambda_n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graph import Graph

EIG_TOL = 1e-9
SPECTRUM_TOL = 1e-10
PSD_MAX_ITER = 60


class NumericError(ArithmeticError):
    """The eigensolver failed or produced results outside the residual contract."""


def check_alpha(alpha: float, name: str = "alpha") -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {alpha}")
    return alpha


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """Dense A_alpha(G): ``alpha*deg(u)`` on the diagonal, ``1-alpha`` on edges."""
    alpha = check_alpha(alpha)
    m = np.zeros((g.n, g.n))
    off = 1.0 - alpha
    for u, v in g.edges:
        m[u, v] = m[v, u] = off
    m[np.diag_indices(g.n)] = [alpha * d for d in g.degrees]
    return m


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G) = D(G) + A(G)."""
    return np.diag(np.asarray(g.degrees, dtype=float)) + g.adjacency_matrix()


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    tol: float = 0.0

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def __getitem__(self, k: int) -> float:
        """1-based access: ``spec[1]`` is the largest eigenvalue, ``spec[n]`` the least."""
        if not 1 <= k <= len(self.eigenvalues):
            raise IndexError(f"eigenvalue index {k} outside 1..{len(self.eigenvalues)}")
        return float(self.eigenvalues[k - 1])

    @property
    def largest(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def least(self) -> float:
        return float(self.eigenvalues[-1])

    def to_json(self) -> str:
        return "[" + ", ".join(format(float(x), ".17g") for x in self.eigenvalues) + "]"

    @staticmethod
    def from_json(text: str) -> Spectrum:
        return Spectrum(np.asarray(json.loads(text), dtype=float))


def spectrum(m: np.ndarray, want_vectors: bool = False) -> Spectrum:
    """Full spectrum of a dense real symmetric matrix, descending.

    Uses LAPACK's symmetric divide-and-conquer driver and then verifies the
    residual contract (``||Av - lambda v|| <= tol * max(1, ||A||_F)``, orthogonality,
    trace); a violation raises :class:`NumericError` rather than returning garbage.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix is not symmetric")
    n = m.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)) if want_vectors else None, SPECTRUM_TOL)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigensolver did not converge: {exc}") from exc
    w, v = w[::-1], v[:, ::-1]
    scale = max(1.0, float(np.linalg.norm(m)))
    resid = float(np.max(np.linalg.norm(m @ v - v * w, axis=0)))
    ortho = float(np.max(np.abs(v.T @ v - np.eye(n))))
    trace_err = abs(float(w.sum()) - float(np.trace(m)))
    if resid > SPECTRUM_TOL * scale or ortho > SPECTRUM_TOL or trace_err > SPECTRUM_TOL * scale:
        raise NumericError(f"eigensolver residual {resid:.3g}, orthogonality {ortho:.3g}, trace {trace_err:.3g}")
    return Spectrum(w.copy(), v.copy() if want_vectors else None, SPECTRUM_TOL)


def alpha_spectrum(g: Graph, alpha: float, want_vectors: bool = False) -> Spectrum:
    return spectrum(alpha_matrix(g, alpha), want_vectors)


def quadratic_forms(g: Graph, alpha: float, x) -> tuple[float, float, float]:
    """X^T A_alpha(G) X evaluated by three independent edge/degree sums.

    1. sum over edges of ``alpha*x_u^2 + 2(1-alpha)*x_u*x_v + alpha*x_v^2``
    2. ``(2alpha-1) * sum d_u x_u^2 + (1-alpha) * sum over edges (x_u + x_v)^2``
    3. ``alpha * sum d_u x_u^2 + 2(1-alpha) * sum over edges x_u*x_v``
    """
    alpha = check_alpha(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector has shape {x.shape}, graph has {g.n} vertices")
    deg_sum = sum(d * x[u] ** 2 for u, d in enumerate(g.degrees))
    f1 = sum(alpha * x[u] ** 2 + 2 * (1 - alpha) * x[u] * x[v] + alpha * x[v] ** 2 for u, v in g.edges)
    f2 = (2 * alpha - 1) * deg_sum + (1 - alpha) * sum((x[u] + x[v]) ** 2 for u, v in g.edges)
    f3 = alpha * deg_sum + 2 * (1 - alpha) * sum(x[u] * x[v] for u, v in g.edges)
    return float(f1), float(f2), float(f3)


def eigen_residual(m: np.ndarray, lam: float, x) -> float:
    """``||Mx - lam x|| / ||x||``; zero exactly for an eigenpair."""
    x = np.asarray(x, dtype=float)
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise ValueError("eigen_residual needs a nonzero vector")
    return float(np.linalg.norm(np.asarray(m) @ x - lam * x)) / norm


def multiplicity_of(spec: Spectrum | np.ndarray, value: float, tol: float = EIG_TOL) -> int:
    """Number of eigenvalues in the cluster around ``value``.

    The cluster starts with eigenvalues within ``tol`` of ``value`` and is grown
    transitively: any eigenvalue within ``tol`` of a member joins.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    w = np.sort(np.asarray(spec.eigenvalues if isinstance(spec, Spectrum) else spec, dtype=float))
    hits = np.flatnonzero(np.abs(w - value) <= tol)
    if hits.size == 0:
        return 0
    lo, hi = int(hits[0]), int(hits[-1])
    while lo > 0 and w[lo] - w[lo - 1] <= tol:
        lo -= 1
    while hi < len(w) - 1 and w[hi + 1] - w[hi] <= tol:
        hi += 1
    return hi - lo + 1


def psd_threshold(g: Graph, tol: float = 1e-8) -> float:
    """Smallest alpha with A_alpha(G) positive semidefinite, by bisection.

    lambda_n(A_alpha(G)) is non-decreasing in alpha, so the PSD set is an
    interval ``[alpha_0, 1]``.  For an edgeless graph A_alpha is the zero matrix
    for every alpha (so alpha_0 = 0 trivially); that degenerate input is rejected.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.m == 0:
        raise ValueError("psd_threshold needs at least one edge (edgeless graphs are PSD for every alpha)")
    lo, hi = 0.0, 1.0
    for _ in range(PSD_MAX_ITER):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if alpha_spectrum(g, mid).least >= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
