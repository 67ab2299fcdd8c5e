"""Cantor-Bendixson derivatives, heights and the classification of C([1, a]) spaces."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FiniteSpace, UnsupportedBase
from .ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    OrdinalLike,
    add,
    divmod_base,
    gamma,
    left_subtract,
    mul,
    omega_pow,
    ordinal,
)


@dataclass(frozen=True)
class ClosedInterval:
    """The compact ordinal interval [lo, hi]."""

    lo: Ordinal
    hi: Ordinal

    def __post_init__(self):
        object.__setattr__(self, "lo", ordinal(self.lo))
        object.__setattr__(self, "hi", ordinal(self.hi))
        if not ONE <= self.lo <= self.hi:
            raise ValueError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def up_to(cls, hi: OrdinalLike) -> "ClosedInterval":
        return cls(ONE, ordinal(hi))

    def __contains__(self, x) -> bool:
        return self.lo <= ordinal(x) <= self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class DerivedSet:
    """``{multiplier * eta : 1 <= eta <= index_top}``; empty when index_top is 0."""

    multiplier: Ordinal
    index_top: Ordinal

    def __post_init__(self):
        if not self.multiplier.is_omega_power():
            raise ValueError("multiplier must be a power of omega")

    @property
    def exponent(self) -> Ordinal:
        return self.multiplier.leading_exponent

    @property
    def index_range(self) -> ClosedInterval | None:
        return None if self.is_empty() else ClosedInterval(ONE, self.index_top)

    def is_empty(self) -> bool:
        return self.index_top.is_zero()

    def count(self) -> int | None:
        """Number of points, or None when the set is infinite."""
        return int(self.index_top) if self.index_top.is_finite() else None

    def __contains__(self, x) -> bool:
        x = ordinal(x)
        if x.is_zero():
            return False
        q, r = divmod_base(x, self.exponent)
        return r.is_zero() and ONE <= q <= self.index_top

    def elements(self) -> list[Ordinal]:
        n = self.count()
        if n is None:
            raise ValueError("infinite derived set")
        return [mul(self.multiplier, Ordinal.of(i)) for i in range(1, n + 1)]

    def derive(self, order: OrdinalLike) -> "DerivedSet":
        """Derivative of the given order of this set (order-isomorphic to [1, index_top])."""
        order = ordinal(order)
        q, _ = divmod_base(self.index_top, order)
        return DerivedSet(omega_pow(add(self.exponent, order)), q)

    def __str__(self):
        if self.is_empty():
            return "{}"
        n = self.count()
        if n is not None and n <= 6:
            return "{" + ", ".join(str(e) for e in self.elements()) + "}"
        return f"{{{self.multiplier}*eta : eta in [1, {self.index_top}]}}"


def _interval(K) -> ClosedInterval:
    if isinstance(K, ClosedInterval):
        if K.lo != ONE:
            raise UnsupportedBase(f"only intervals starting at 1 are supported, got {K}")
        return K
    return ClosedInterval.up_to(K)


def cb_derivative(K, beta: OrdinalLike) -> DerivedSet:
    """Cantor-Bendixson derivative of order beta of [1, hi]."""
    K = _interval(K)
    beta = ordinal(beta)
    q, _ = divmod_base(K.hi, beta)
    return DerivedSet(omega_pow(beta), q)


def height(K) -> tuple[Ordinal, int]:
    """(height, number of points in the last non-empty derivative)."""
    K = _interval(K)
    alpha, n = K.hi.terms[0]
    return add(alpha, ONE), n


def ms_invariant(a: OrdinalLike) -> tuple[Ordinal, int]:
    """Leading exponent and coefficient: [1, a] is homeomorphic to [1, w^alpha * n]."""
    a = ordinal(a)
    if a.is_zero():
        raise FiniteSpace("the empty space has no invariant")
    return a.terms[0]


@dataclass(frozen=True)
class Classification:
    homeo: bool
    iso: bool
    pos_iso_a_to_b: bool
    pos_iso_b_to_a: bool

    def as_dict(self) -> dict:
        return {
            "homeo": self.homeo,
            "iso": self.iso,
            "pos_iso_a_to_b": self.pos_iso_a_to_b,
            "pos_iso_b_to_a": self.pos_iso_b_to_a,
        }


def _require_infinite(*xs: Ordinal) -> None:
    for x in xs:
        if x < OMEGA:
            raise FiniteSpace(f"{x} is finite; the classification needs infinite compacta")


def positive_iso_exists(a: OrdinalLike, b: OrdinalLike) -> bool:
    """Whether C([1,a]) admits a positive isomorphism onto C([1,b])."""
    a, b = ordinal(a), ordinal(b)
    _require_infinite(a, b)
    ha, hb = height(a)[0], height(b)[0]
    return ha <= hb < gamma(ha)


def classify(a: OrdinalLike, b: OrdinalLike) -> Classification:
    a, b = ordinal(a), ordinal(b)
    _require_infinite(a, b)
    ha, hb = height(a)[0], height(b)[0]
    return Classification(
        homeo=ms_invariant(a) == ms_invariant(b),
        iso=gamma(ha) == gamma(hb),
        pos_iso_a_to_b=ha <= hb < gamma(ha),
        pos_iso_b_to_a=hb <= ha < gamma(hb),
    )


def power_split(alpha: Ordinal, beta: Ordinal) -> tuple[int, Ordinal]:
    """For alpha <= beta < alpha*w return (n, d) with alpha*n + d = beta, n maximal."""
    if not (ONE <= alpha <= beta):
        raise ValueError("need 1 <= alpha <= beta")
    if beta >= mul(alpha, OMEGA):
        raise ValueError(f"{beta} is not below {alpha}*w")
    lead_c = alpha.terms[0][1]
    # beta and alpha share the leading exponent here
    n = max(1, beta.terms[0][1] // lead_c)
    while mul(alpha, Ordinal.of(n)) > beta:
        n -= 1
    while mul(alpha, Ordinal.of(n + 1)) <= beta:
        n += 1
    return n, left_subtract(mul(alpha, Ordinal.of(n)), beta)


__all__ = [
    "ClosedInterval",
    "DerivedSet",
    "Classification",
    "cb_derivative",
    "height",
    "ms_invariant",
    "classify",
    "positive_iso_exists",
    "power_split",
    "ZERO",
]
