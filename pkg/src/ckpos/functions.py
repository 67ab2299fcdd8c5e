"""Step functions on ordinal intervals ``[1, top]``.

A step function takes value ``v_i`` on ``(b_(i-1), b_i]`` with
``0 = b_0 < b_1 < ... < b_r = top``.  Each such piece is clopen, so every
step function is continuous.  Values are exact ``Fraction`` by default; floats
and sympy numbers are accepted as well.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from fractions import Fraction
from numbers import Number
from typing import Callable, Iterable, Sequence

import sympy as sp

from .errors import DomainMismatch, OutOfDomain, PoolTooSmall
from .ordinal import ONE, Ordinal, OrdinalLike, ordinal, parse


def as_scalar(value):
    """Normalize a scalar: ints, rationals and rational text become Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except ValueError:
            return as_scalar(sp.sympify(text))
    if isinstance(value, sp.Basic):
        if value.is_Rational:
            return Fraction(int(value.p), int(value.q))
        return value
    if isinstance(value, (float, Number)):
        return value
    raise TypeError(f"unsupported scalar {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (Fraction, int, sp.Basic))


def scalar_abs(value):
    return sp.Abs(value) if isinstance(value, sp.Basic) else abs(value)


def scalar_max(values: Iterable):
    """Maximum that stays exact when the inputs are sympy numbers."""
    values = list(values)
    if not values:
        raise ValueError("empty maximum")
    if any(isinstance(v, float) for v in values):
        return max(float(v) for v in values)
    if any(isinstance(v, sp.Basic) for v in values):
        return as_scalar(sp.radsimp(sp.Max(*[sp.radsimp(sp.sympify(v)) for v in values])))
    return max(values)


def canonical(value):
    """Rationalized, expanded form of a sympy number; other scalars pass through."""
    if isinstance(value, sp.Basic):
        return as_scalar(sp.expand(sp.radsimp(value)))
    return value


def scalar_eq(a, b, tol: float = 0.0) -> bool:
    if isinstance(a, sp.Basic) or isinstance(b, sp.Basic):
        if isinstance(a, float) or isinstance(b, float):
            return abs(float(a) - float(b)) <= tol
        diff = sp.expand(sp.sympify(a) - sp.sympify(b))
        if diff == 0:
            return True
        if diff.is_number and abs(float(diff)) > 1e-12:
            return False
        return sp.simplify(diff) == 0
    if tol:
        return abs(a - b) <= tol
    return a == b


class StepFunction:
    __slots__ = ("domain_top", "breaks", "values")

    def __init__(self, domain_top: OrdinalLike, pieces: Iterable[tuple[OrdinalLike, object]]):
        top = ordinal(domain_top)
        if top.is_zero():
            raise ValueError("domain top must be at least 1")
        breaks: list[Ordinal] = []
        values: list = []
        for upto, value in pieces:
            upto = ordinal(upto)
            value = as_scalar(value)
            if breaks and upto <= breaks[-1]:
                raise ValueError("breakpoints must increase strictly")
            if upto.is_zero() or upto > top:
                raise ValueError(f"breakpoint {upto} outside [1, {top}]")
            if values and values[-1] == value:
                breaks[-1] = upto
            else:
                breaks.append(upto)
                values.append(value)
        if not breaks or breaks[-1] != top:
            raise ValueError("last breakpoint must equal the domain top")
        self.domain_top = top
        self.breaks = tuple(breaks)
        self.values = tuple(values)

    # constructors

    @classmethod
    def constant(cls, domain_top: OrdinalLike, value=1) -> "StepFunction":
        return cls(domain_top, [(domain_top, value)])

    @classmethod
    def indicator(cls, domain_top: OrdinalLike, after: OrdinalLike, upto: OrdinalLike) -> "StepFunction":
        """1 on (after, upto] and 0 elsewhere."""
        top, a, b = ordinal(domain_top), ordinal(after), ordinal(upto)
        if not a < b <= top:
            raise ValueError("need after < upto <= top")
        pieces = []
        if not a.is_zero():
            pieces.append((a, 0))
        pieces.append((b, 1))
        if b < top:
            pieces.append((top, 0))
        return cls(top, pieces)

    # evaluation

    def evaluate(self, x: OrdinalLike):
        x = ordinal(x)
        if x.is_zero() or x > self.domain_top:
            raise OutOfDomain(f"{x} is outside [1, {self.domain_top}]")
        return self.values[bisect_left(self.breaks, x)]

    __call__ = evaluate

    def pieces(self) -> list[tuple[Ordinal, object]]:
        return list(zip(self.breaks, self.values))

    def value_range(self, lo: Ordinal, hi: Ordinal, include_hi: bool = True) -> tuple:
        """(min, max) of the values taken on [lo, hi], or on [lo, hi) when include_hi is false."""
        first, last = bisect_left(self.breaks, lo), bisect_left(self.breaks, hi)
        if not include_hi:
            if hi <= lo:
                raise ValueError("empty range")
            # the piece holding hi contributes only if it has a point below hi
            if last > first and not self.breaks[last - 1] + ONE < hi:
                last -= 1
        vals = self.values[first : last + 1]
        return min(vals), max(vals)

    # algebra

    def _check(self, other: "StepFunction") -> None:
        if self.domain_top != other.domain_top:
            raise DomainMismatch(f"domains [1, {self.domain_top}] and [1, {other.domain_top}] differ")

    def combine(self, other: "StepFunction", op: Callable) -> "StepFunction":
        self._check(other)
        cuts = sorted(set(self.breaks) | set(other.breaks))
        return StepFunction(self.domain_top, [(c, op(self(c), other(c))) for c in cuts])

    def map(self, op: Callable) -> "StepFunction":
        return StepFunction(self.domain_top, [(b, op(v)) for b, v in self.pieces()])

    def __add__(self, other: "StepFunction") -> "StepFunction":
        return self.combine(other, lambda a, b: a + b)

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        return self.combine(other, lambda a, b: a - b)

    def __neg__(self) -> "StepFunction":
        return self.map(lambda v: -v)

    def scale(self, c) -> "StepFunction":
        c = as_scalar(c)
        return self.map(lambda v: c * v)

    def minimum(self, other: "StepFunction") -> "StepFunction":
        return self.combine(other, min)

    def maximum(self, other: "StepFunction") -> "StepFunction":
        return self.combine(other, max)

    def __abs__(self) -> "StepFunction":
        return self.map(abs)

    def sup_norm(self):
        return max(scalar_abs(v) for v in self.values)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def as_float(self) -> "StepFunction":
        return self.map(float)

    # comparison and serialization

    def __eq__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return (self.domain_top, self.breaks, self.values) == (
            other.domain_top,
            other.breaks,
            other.values,
        )

    def __hash__(self):
        return hash((self.domain_top, self.breaks, self.values))

    def __repr__(self):
        body = ", ".join(f"({b}, {v})" for b, v in self.pieces())
        return f"StepFunction({self.domain_top}; {body})"

    def to_json(self) -> dict:
        return {
            "domain_top": str(self.domain_top),
            "pieces": [{"upto": str(b), "value": str(v)} for b, v in self.pieces()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StepFunction":
        return cls(
            parse(data["domain_top"]),
            [(parse(p["upto"]), as_scalar(p["value"])) for p in data["pieces"]],
        )


def algebra(f: StepFunction, g: StepFunction | None, op: str, c=None) -> StepFunction:
    """Named pointwise operation: add, sub, scale, min, max, abs."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "scale":
        return f.scale(c)
    if op == "min":
        return f.minimum(g)
    if op == "max":
        return f.maximum(g)
    if op == "abs":
        return abs(f)
    raise ValueError(f"unknown operation {op!r}")


def sample_step(
    seed: int | random.Random,
    domain_top: OrdinalLike,
    r: int,
    pool: Sequence[Ordinal],
    denominator: int = 8,
    vanish_at_top: bool = False,
) -> StepFunction:
    """Seeded step function with exactly r pieces and rational values in [-1, 1]."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    top = ordinal(domain_top)
    if r < 1:
        raise ValueError("need at least one piece")
    candidates = sorted({x for x in pool if ONE <= x < top})
    if len(candidates) < r - 1:
        raise PoolTooSmall(f"{len(candidates)} candidate breakpoints, need {r - 1}")
    cuts = sorted(rng.sample(candidates, r - 1)) + [top]
    values: list[Fraction] = []
    for i in range(r):
        forced_zero = vanish_at_top and i == r - 1
        while True:
            v = Fraction(0) if forced_zero else Fraction(rng.randint(-denominator, denominator), denominator)
            if not values or values[-1] != v:
                break
            if forced_zero:
                values[-1] = Fraction(rng.choice([-1, 1]) * rng.randint(1, denominator), denominator)
                break
        values.append(v)
    return StepFunction(top, zip(cuts, values))


__all__ = [
    "StepFunction",
    "algebra",
    "sample_step",
    "as_scalar",
    "is_exact",
    "scalar_abs",
    "scalar_max",
    "scalar_eq",
    "canonical",
]
