"""Closed-form A_alpha eigenvalues for named families.

Every formula here is cross-checked against the dense eigensolver in the test
suite.  Several of them are derived under ``1/2 < alpha < 1``; they are still
evaluated elsewhere, and :func:`in_stated_range` tells callers whether a given
alpha lies inside the range the formula was stated for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .families import Family, FamilySpec, build_family, complete_split_graph
from .spectra import Spectrum, alpha_spectrum, check_alpha


class FormulaDiscrepancy(ArithmeticError):
    """A closed-form expression cannot be evaluated (negative discriminant) or disagrees
    with the eigensolver.  Carries the formula inputs and the solver spectrum."""

    def __init__(self, message: str, inputs: dict, solver: np.ndarray | None = None):
        super().__init__(message)
        self.inputs = inputs
        self.solver = solver


# formulas whose derivation assumes 1/2 < alpha < 1
_HALF_OPEN = {"star_min", "complete_bipartite_min", "p4_min", "kn_minus_e_min"}


def in_stated_range(formula: str, alpha: float) -> bool:
    if formula in _HALF_OPEN:
        return 0.5 < alpha < 1.0
    return 0.0 <= alpha <= 1.0


def _spectrum(values) -> Spectrum:
    return Spectrum(np.sort(np.asarray(values, dtype=float))[::-1])


def cycle_spectrum(s: int, alpha: float) -> Spectrum:
    """lambda_i(C_s) = 2alpha + 2(1-alpha)cos(i*pi/s) for even i, cos((i-1)*pi/s) for odd i."""
    if s < 3:
        raise ValueError(f"cycle length must be at least 3, got {s}")
    alpha = check_alpha(alpha)
    vals = [2 * alpha + 2 * (1 - alpha) * math.cos((i if i % 2 == 0 else i - 1) * math.pi / s) for i in range(1, s + 1)]
    return _spectrum(vals)


def complete_graph_spectrum(n: int, alpha: float) -> Spectrum:
    if n < 1:
        raise ValueError("n must be at least 1")
    alpha = check_alpha(alpha)
    return _spectrum([n - 1.0] + [alpha * n - 1.0] * (n - 1))


def complete_split_spectrum(a: int, n: int, alpha: float) -> Spectrum:
    """Spectrum of CS_{a,n-a}: n*alpha-1 (a-1 times), a*alpha (n-a-1 times) and two
    roots of the quotient quadratic."""
    if not 1 <= a <= n - 1:
        raise ValueError(f"complete split graph needs 1 <= a <= n-1, got a={a}, n={n}")
    alpha = check_alpha(alpha)
    t = n * alpha + a - 1
    disc = t * t - 4 * a * a * alpha + 4 * a * alpha + 4 * a * (n - a) - 8 * a * (n - a) * alpha
    if disc < 0:
        g = complete_split_graph(a, n)
        raise FormulaDiscrepancy(
            f"negative discriminant {disc} for CS_{{{a},{n - a}}} at alpha={alpha}",
            {"a": a, "n": n, "alpha": alpha, "discriminant": disc},
            alpha_spectrum(g, alpha).eigenvalues,
        )
    r = math.sqrt(disc)
    vals = [n * alpha - 1] * (a - 1) + [a * alpha] * (n - a - 1) + [(t + r) / 2, (t - r) / 2]
    return _spectrum(vals)


def star_min_eigenvalue(n: int, alpha: float) -> float:
    """Least A_alpha eigenvalue of K_{1,n-1}: (alpha*n - sqrt(alpha^2 n^2 + 4(n-1)(1-2alpha))) / 2."""
    if n < 2:
        raise ValueError("a star needs n >= 2")
    alpha = check_alpha(alpha)
    disc = alpha * alpha * n * n + 4 * (n - 1) * (1 - 2 * alpha)
    if disc < 0:
        raise FormulaDiscrepancy(
            f"negative discriminant {disc} in the star formula",
            {"n": n, "alpha": alpha, "discriminant": disc},
        )
    return 0.5 * (alpha * n - math.sqrt(disc))


def complete_bipartite_min_eigenvalue(a: int, b: int, alpha: float) -> float:
    """(alpha*n - sqrt(alpha^2 n^2 + 4ab(1-2alpha))) / 2 with n = a + b."""
    if a < 1 or b < 1:
        raise ValueError("both parts need at least one vertex")
    alpha = check_alpha(alpha)
    n = a + b
    disc = alpha * alpha * n * n + 4 * a * b * (1 - 2 * alpha)
    if disc < 0:
        raise FormulaDiscrepancy(
            f"negative discriminant {disc} in the K_{{a,b}} formula",
            {"a": a, "b": b, "alpha": alpha, "discriminant": disc},
        )
    return 0.5 * (alpha * n - math.sqrt(disc))


def p4_min_eigenvalue(alpha: float) -> float:
    """min(alpha + 1/2 - sqrt(4a^2 - 8a + 5)/2, 2alpha - 1/2 - sqrt(8a^2 - 12a + 5)/2)."""
    alpha = check_alpha(alpha)
    d1 = 4 * alpha**2 - 8 * alpha + 5
    d2 = 8 * alpha**2 - 12 * alpha + 5
    # both quadratics have negative discriminant in alpha, hence are positive everywhere
    assert d1 > 0 and d2 > 0
    return min(alpha + 0.5 - 0.5 * math.sqrt(d1), 2 * alpha - 0.5 - 0.5 * math.sqrt(d2))


@dataclass(frozen=True)
class KnMinusEReport:
    """Stated K_n - e expression next to the eigensolver value (which is authoritative)."""

    n: int
    alpha: float
    discriminant: float
    formula_value: float | None
    solver_value: float
    difference: float | None
    tol: float = 1e-9

    @property
    def consistent(self) -> bool:
        return self.difference is not None and abs(self.difference) <= self.tol

    @property
    def value(self) -> float:
        return self.solver_value

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "discriminant": self.discriminant,
            "formula_value": self.formula_value,
            "solver_value": self.solver_value,
            "difference": self.difference,
            "consistent": self.consistent,
        }


def kn_minus_e_min_eigenvalue(n: int, alpha: float) -> KnMinusEReport:
    """Evaluate ``(na+n-3 - sqrt((na+n-3)^2 - 4(n-2)^2(a+an-2))) / 2`` for lambda_n(K_n - e).

    The expression is only evaluated when its discriminant is non-negative;
    the eigensolver value for K_n - e is always computed and is the one to use.
    """
    if n < 3:
        raise ValueError("K_n - e formula needs n >= 3")
    alpha = check_alpha(alpha)
    t = n * alpha + n - 3
    disc = t * t - 4 * (n - 2) ** 2 * (alpha + alpha * n - 2)
    formula = 0.5 * (t - math.sqrt(disc)) if disc >= 0 else None
    g = build_family(FamilySpec(Family.COMPLETE_MINUS_EDGE, (n,)))
    solver = alpha_spectrum(g, alpha).least
    diff = None if formula is None else formula - solver
    return KnMinusEReport(n, alpha, disc, formula, solver, diff)
