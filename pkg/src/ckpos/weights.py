"""Weight vectors in the open simplex and the optimal choice for the constructions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy as sp

from .constants import c_exact, optimal_first_weight
from .errors import BadWeights, ToleranceNotMet
from .functions import as_scalar, scalar_max


def check_simplex(lam: Sequence, n: int, name: str = "lambda") -> tuple:
    """Validate lam as a point of the open simplex of dimension n; returns normalized scalars."""
    lam = tuple(as_scalar(x) for x in lam)
    if len(lam) != n:
        raise BadWeights(f"{name} needs {n} weights, got {len(lam)}")
    if any(not x > 0 for x in lam):
        raise BadWeights(f"{name} weights must be positive")
    total = sum(lam, 0)
    if any(isinstance(x, float) for x in lam):
        ok = abs(float(total) - 1.0) <= 1e-12
    elif any(isinstance(x, sp.Basic) for x in lam):
        ok = sp.simplify(sp.sympify(total) - 1) == 0
    else:
        ok = total == 1
    if not ok:
        raise BadWeights(f"{name} weights sum to {total}, not 1")
    return lam


def parse_weights(text: str) -> tuple:
    """Comma-separated scalars such as ``1/2,1/2``."""
    try:
        return tuple(as_scalar(part) for part in text.split(",") if part.strip())
    except (ValueError, TypeError, sp.SympifyError) as exc:
        raise BadWeights(f"cannot read weights {text!r}") from exc


def objective(lam: Sequence) -> object:
    """max(2/l_1 - 1, 2/l_i + 1 for i >= 2): the inverse-norm bound of the weighted constructions."""
    lam = list(lam)
    if len(lam) == 1:
        return scalar_max([2 / lam[0] - 1])
    terms = [2 / lam[0] - 1] + [2 / x + 1 for x in lam[1:]]
    return scalar_max(terms)


def optimal_lambda(n: int) -> tuple[tuple[sp.Expr, ...], sp.Expr]:
    """Exact minimiser of :func:`objective` on the simplex and the minimum C(n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return (sp.Integer(1),), sp.Integer(1)
    x = optimal_first_weight(n)
    rest = sp.simplify((1 - x) / (n - 1))
    return (x,) + (rest,) * (n - 1), c_exact(n)


def numeric_min_C(n: int, tol: float = 1e-9, max_iter: int = 400) -> float:
    """Minimum over t in (0,1) of max(2/t - 1, 2(n-1)/(1-t) + 1) by bisection on the crossing.

    The first branch decreases and the second increases, so the minimum sits
    where they meet.  Raises ToleranceNotMet if the branches still differ by
    more than ``tol`` when the bracket can no longer shrink.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if tol <= 0:
        raise ValueError("tol must be positive")

    def falling(t: float) -> float:
        return 2.0 / t - 1.0

    def rising(t: float) -> float:
        return 2.0 * (n - 1) / (1.0 - t) + 1.0

    lo, hi = 0.0, 1.0
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if falling(mid) > rising(mid):
            lo = mid
        else:
            hi = mid
    gap = abs(falling(hi) - rising(lo))
    value = max(falling(hi), rising(hi))
    if gap > tol:
        raise ToleranceNotMet(f"branches differ by {gap} at the crossing, above {tol}")
    return value


def tk_lambda(k: int) -> tuple[sp.Expr, ...]:
    """Optimal weights for the k-summand construction; the distinguished weight sits last."""
    return tuple(reversed(optimal_lambda(k)[0]))


def uniform_lambda(n: int) -> tuple[Fraction, ...]:
    return (Fraction(1, n),) * n


__all__ = [
    "check_simplex",
    "parse_weights",
    "objective",
    "optimal_lambda",
    "numeric_min_C",
    "tk_lambda",
    "uniform_lambda",
]
