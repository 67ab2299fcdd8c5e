"""Banach-Mazur distance bounds assembled from known results.

Each bound is an interval ``[lower, upper]`` of exact sympy numbers (``sympy.oo``
when no isomorphism exists).  Classical bounds are symmetric; positive bounds
are directed from ``C([1,a])`` to ``C([1,b])``.  The catalog only collects
stated results: the assembled interval is the max of the lower bounds and the
min of the upper bounds, where an upper bound for a chain of two catalogued
constructions is the product of their distortions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp

from .constants import TWO_PLUS_SQRT3, TWO_PLUS_SQRT5, c_exact, decimal, render
from .ordinal import ONE, Ordinal, OrdinalLike, ordinal
from .topology import classify, ms_invariant, positive_iso_exists, power_split

# citation anchors
BANACH_STONE = "Banach-Stone theorem"
BESSAGA_PELCZYNSKI = "Remark szlenkAndIso"
THM_CLASS = "Theorem thm:class"
GORDON = "Gordon (intro)"
SAME_HEIGHTS = "Theorem lower-estimate-same-heights"
OMEGA_TO_ALPHA = "Corollary estimatesForOmegaToAlpha"
EXACT_VALUES = "Theorem B(ii) exact values"
THEOREM_B_I = "Theorem B(i)"
BETTER_BOUND = "Prop. Construction-with-better-bound"
POWER_ISO = "Prop. constructing-the-isomorphism (ii)"
POWER_BETA_ISO = "Prop. constructing-the-isomorphism (i)"
OMEGA2_CASE = "Prop. cOmega2Case"
COMPOSITION = "composition of positive isomorphisms"
POSITIVE_DOMINATES = "d_BM <= d_BM^+"

OPEN_PER_PAPER = "open per paper"


@dataclass(frozen=True)
class DistanceBound:
    lower: sp.Expr
    upper: sp.Expr
    exact: sp.Expr | None
    citations: tuple[str, ...]
    directed: bool
    flags: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if bool(self.lower > self.upper):
            raise ValueError(f"inconsistent bound [{self.lower}, {self.upper}]")
        if self.exact is not None and not (self.lower == self.exact == self.upper):
            raise ValueError("exact value must coincide with both ends")

    @property
    def finite(self) -> bool:
        return self.upper != sp.oo

    def lower_float(self) -> float:
        return float(self.lower)

    def upper_float(self) -> float:
        return float(self.upper)

    def to_json(self) -> dict:
        def pack(v):
            return None if v is None else {"symbolic": render(v), "decimal": decimal(v)}

        return {
            "lower": pack(self.lower),
            "upper": pack(self.upper),
            "exact": pack(self.exact),
            "directed": self.directed,
            "citations": list(self.citations),
            "flags": list(self.flags),
        }

    def describe(self) -> str:
        if self.exact is not None:
            text = f"exact: {render(self.exact)} ({decimal(self.exact)})"
        else:
            text = (
                f"lower: {render(self.lower)} ({decimal(self.lower)}); "
                f"upper: {render(self.upper)} ({decimal(self.upper)})"
            )
        if self.flags:
            text += " [" + "; ".join(self.flags) + "]"
        return text + "\ncitations: " + "; ".join(self.citations)


@dataclass
class _Collector:
    lowers: list = field(default_factory=list)
    uppers: list = field(default_factory=list)

    def lower(self, value, cite):
        self.lowers.append((sp.nsimplify(value), cite))

    def upper(self, value, cite):
        self.uppers.append((sp.nsimplify(value), cite))

    def exact(self, value, cite):
        self.lower(value, cite)
        self.upper(value, cite)

    def assemble(self, directed: bool, flags: tuple[str, ...] = ()) -> DistanceBound:
        lower = max((v for v, _ in self.lowers), key=float, default=sp.Integer(1))
        upper = min((v for v, _ in self.uppers), key=float, default=sp.oo)
        cites: list[str] = []
        for v, c in self.lowers:
            if v == lower and c not in cites:
                cites.append(c)
        for v, c in self.uppers:
            if v == upper:
                for part in c if isinstance(c, tuple) else (c,):
                    if part not in cites:
                        cites.append(part)
        same = lower == upper or (upper != sp.oo and sp.simplify(lower - upper) == 0)
        return DistanceBound(lower, upper, lower if same else None, tuple(cites), directed, flags)


def _chain_upper(a: Ordinal, b: Ordinal) -> tuple[sp.Expr, tuple[str, ...]] | None:
    """Distortion of the catalogued construction chain C([1,a]) -> C([1,b])."""
    if not positive_iso_exists(a, b):
        return None
    alpha, k = ms_invariant(a)
    beta, m = ms_invariant(b)
    value = sp.Integer(1)
    cites: list[str] = []
    if k > 1:
        value *= c_exact(k)
        cites.append(BETTER_BOUND)
    if alpha == beta:
        if m > 1:
            if alpha == ONE and m == 2:
                value *= TWO_PLUS_SQRT3
                cites.append(OMEGA2_CASE)
            else:
                value *= TWO_PLUS_SQRT5
                cites.append(THEOREM_B_I)
    else:
        n, delta = power_split(alpha, beta)
        if delta.is_zero() and m == 1:
            value *= c_exact(n)
            cites.append(POWER_ISO)
        else:
            value *= c_exact(n + 1)
            cites.append(POWER_BETA_ISO)
    if len(cites) > 1:
        cites.append(COMPOSITION)
    return sp.expand(value), tuple(cites)


def _shared_lowers(col: _Collector, a: Ordinal, b: Ordinal) -> None:
    """Lower bounds that hold for the classical distance (hence also the positive one)."""
    ia, ib = ms_invariant(a), ms_invariant(b)
    col.lower(3, GORDON)
    (alpha, k), (beta, m) = sorted((ia, ib), key=lambda t: (t[0], t[1]))
    if k == 1 and m == 1 and alpha < beta:
        try:
            n, delta = power_split(alpha, beta)
        except ValueError:
            return
        if delta.is_zero():
            col.lower(2 * n - 1, OMEGA_TO_ALPHA)
            if alpha.is_omega_power():
                col.exact(c_exact(n), EXACT_VALUES)


def _gordon_pair(a: Ordinal, b: Ordinal) -> bool:
    return {ms_invariant(a), ms_invariant(b)} == {(ONE, 1), (ONE, 2)}


def distance_bounds(a: OrdinalLike, b: OrdinalLike, mode: str = "classical") -> DistanceBound:
    """Catalogue bounds for d_BM (``classical``) or d_BM^+ from a to b (``positive_directed``)."""
    a, b = ordinal(a), ordinal(b)
    cls = classify(a, b)
    if mode == "classical":
        col = _Collector()
        if not cls.iso:
            col.exact(sp.oo, BESSAGA_PELCZYNSKI)
            return col.assemble(False)
        if cls.homeo:
            col.exact(1, BANACH_STONE)
            return col.assemble(False)
        _shared_lowers(col, a, b)
        if _gordon_pair(a, b):
            col.upper(3, GORDON)
        for x, y in ((a, b), (b, a)):
            chain = _chain_upper(x, y)
            if chain is not None:
                col.upper(chain[0], chain[1] + (POSITIVE_DOMINATES,))
        return col.assemble(False)
    if mode not in ("positive", "positive_directed"):
        raise ValueError(f"unknown mode {mode!r}")
    col = _Collector()
    if not cls.pos_iso_a_to_b:
        col.exact(sp.oo, THM_CLASS)
        return col.assemble(True)
    if cls.homeo:
        col.exact(1, BANACH_STONE)
        return col.assemble(True)
    _shared_lowers(col, a, b)
    alpha, k = ms_invariant(a)
    beta, m = ms_invariant(b)
    if alpha == beta and m == 1 and k > 1:
        col.lower(2 * k - 1, SAME_HEIGHTS)
    chain = _chain_upper(a, b)
    col.upper(chain[0], chain[1])
    result = col.assemble(True)
    if result.exact is None and _gordon_pair(a, b):
        result = DistanceBound(
            result.lower, result.upper, None, result.citations, True, (OPEN_PER_PAPER,)
        )
    return result
