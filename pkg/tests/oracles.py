"""Reference implementations written independently of the package code.

Ordinals below w^w are modelled as dicts {exponent: coefficient} with integer
exponents; that is enough to cross-check the general CNF algorithms.
"""

from __future__ import annotations

import math

from ckpos.ordinal import Ordinal


def poly_from(x: Ordinal) -> dict[int, int]:
    out = {}
    for e, c in x.terms:
        if not e.is_finite():
            raise ValueError("oracle only covers ordinals below w^w")
        out[int(e)] = c
    return out


def poly_to(p: dict[int, int]) -> Ordinal:
    return Ordinal([(Ordinal.of(e), c) for e, c in sorted(p.items(), reverse=True) if c])


def poly_key(p: dict[int, int]) -> tuple:
    return tuple(sorted(p.items(), reverse=True))


def poly_cmp(a: dict, b: dict) -> int:
    ka, kb = poly_key(a), poly_key(b)
    return (ka > kb) - (ka < kb)


def poly_add(a: dict, b: dict) -> dict:
    if not b:
        return dict(a)
    lead = max(b)
    out = {e: c for e, c in a.items() if e >= lead}
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return out


def poly_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    lead = max(a)
    total: dict = {}
    for e, c in sorted(b.items(), reverse=True):
        if e == 0:
            part = dict(a)
            part[lead] = a[lead] * c
        else:
            part = {lead + e: c}
        total = poly_add(total, part)
    return total


def truncated_limits(top_a: int, bound: int) -> set[tuple[int, int]]:
    """Limit points of [1, w*top_a] by brute force over {w*a+b : b <= bound}, as pairs (a, b).

    A point is isolated when its model predecessor is its true predecessor; a
    full column (b = bound) stands in for an unbounded one.
    """
    model = sorted((a, b) for a in range(top_a + 1) for b in range(bound + 1) if (a, b) != (0, 0))
    return {x for prev, x in zip(model, model[1:]) if prev[1] == bound}


def min_C_golden(n: int) -> float:
    """Golden-section search on max(2/t-1, 2(n-1)/(1-t)+1) over (0,1)."""

    def F(t):
        return max(2 / t - 1, 2 * (n - 1) / (1 - t) + 1)

    lo, hi = 1e-12, 1 - 1e-12
    g = (math.sqrt(5) - 1) / 2
    for _ in range(200):
        a, b = hi - g * (hi - lo), lo + g * (hi - lo)
        if F(a) < F(b):
            hi = b
        else:
            lo = a
    return F((lo + hi) / 2)
