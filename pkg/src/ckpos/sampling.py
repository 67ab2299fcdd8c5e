"""Seeded random ordinals with small Cantor-normal-form coefficients."""

from __future__ import annotations

import random

from .ordinal import ONE, ZERO, Ordinal, add, left_subtract, mul, omega_pow


def random_power_below(
    rng: random.Random, e: Ordinal, max_terms: int = 3, max_coeff: int = 3, _depth: int = 0
) -> Ordinal:
    """Random ordinal in [0, w^e)."""
    if e.is_zero():
        return ZERO
    count = rng.randint(0, max_terms)
    if count == 0:
        return ZERO
    if e.is_finite() or _depth >= 2:
        cap = int(e) if e.is_finite() else 3
        pool = list(range(min(cap, 6)))
        exps = {Ordinal.of(x) for x in rng.sample(pool, min(count, len(pool)))}
    else:
        exps = {random_below(rng, e, max_terms, max_coeff, _depth + 1) for _ in range(count)}
    terms = tuple((x, rng.randint(1, max_coeff)) for x in sorted(exps, reverse=True))
    return Ordinal._raw(terms)


def random_below(
    rng: random.Random, bound: Ordinal, max_terms: int = 3, max_coeff: int = 3, _depth: int = 0
) -> Ordinal:
    """Random ordinal in [0, bound)."""
    if bound.is_zero():
        raise ValueError("nothing below 0")
    terms = bound.terms
    i = rng.randrange(len(terms))
    e, c = terms[i]
    head = Ordinal._raw(terms[:i])
    base = add(head, mul(omega_pow(e), Ordinal.of(rng.randrange(c))))
    return add(base, random_power_below(rng, e, max_terms, max_coeff, _depth))


def random_between(
    rng: random.Random, lo: Ordinal, hi: Ordinal, edge_bias: float = 0.1, **kw
) -> Ordinal:
    """Random ordinal in [lo, hi], hitting either end with probability edge_bias each."""
    if hi < lo:
        raise ValueError("empty interval")
    u = rng.random()
    if u < edge_bias:
        return lo
    if u < 2 * edge_bias:
        return hi
    span = add(left_subtract(lo, hi), ONE)
    return add(lo, random_below(rng, span, **kw))


def strip_finite(x: Ordinal) -> Ordinal:
    """x minus its finite tail (0 stays 0)."""
    if x.terms and x.terms[-1][0].is_zero():
        return Ordinal._raw(x.terms[:-1])
    return x


def breakpoint_pool(
    rng: random.Random, top: Ordinal, size: int = 24, max_coeff: int = 3
) -> list[Ordinal]:
    """Sorted candidate breakpoints in [1, top): structural multiples plus random points."""
    pool: set[Ordinal] = set()
    for e, c in top.terms:
        unit = omega_pow(e)
        for j in range(1, max_coeff + 1):
            pool.add(mul(unit, Ordinal.of(j)))
            pool.add(add(mul(unit, Ordinal.of(j)), ONE))
    for j in range(1, 5):
        pool.add(Ordinal.of(j))
    for _ in range(size * 3):
        if len(pool) >= size * 2:
            break
        pool.add(random_below(rng, top, max_coeff=max_coeff))
    return sorted(x for x in pool if ONE <= x < top)


__all__ = [
    "random_power_below",
    "random_below",
    "random_between",
    "strip_finite",
    "breakpoint_pool",
]
