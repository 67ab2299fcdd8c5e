"""Closed-form distortion constants kept as exact symbolic expressions."""

from __future__ import annotations

import sympy as sp


def c_exact(n: int) -> sp.Expr:
    """n + sqrt((n-1)(n+3)), the optimal distortion of the weighted constructions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sp.Integer(n) + sp.sqrt(sp.Integer((n - 1) * (n + 3)))


def c_float(n: int) -> float:
    return n + ((n - 1) * (n + 3)) ** 0.5


def optimal_first_weight(n: int) -> sp.Expr:
    """Exact minimiser x = ((n+1) - sqrt((n-1)(n+3)))/2 of the weight objective."""
    return (sp.Integer(n + 1) - sp.sqrt(sp.Integer((n - 1) * (n + 3)))) / 2


TWO_PLUS_SQRT3 = sp.Integer(2) + sp.sqrt(3)
TWO_PLUS_SQRT5 = sp.Integer(2) + sp.sqrt(5)


def render(value: sp.Expr) -> str:
    """Compact text such as ``2+sqrt(5)`` or ``oo``."""
    if value == sp.oo:
        return "inf"
    value = sp.expand(value)
    head, rest = value.as_coeff_Add()
    if head == 0 or rest == 0:
        return str(value).replace(" ", "")
    tail = str(rest).replace(" ", "")
    return f"{head}{tail}" if tail.startswith("-") else f"{head}+{tail}"


def decimal(value: sp.Expr, digits: int = 10) -> str:
    if value == sp.oo:
        return "inf"
    return f"{float(sp.N(value, digits + 10)):.{digits}f}"
