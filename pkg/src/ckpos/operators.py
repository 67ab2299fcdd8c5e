"""Operators between spaces of continuous functions on ordinal sets.

An operator ``T: C(K) -> C(L)`` is given by finitely many *regions* of ``L``.
On a region every row ``y -> sum_s w_s f(p_s(y))`` uses the same weights
``w_s``; only the evaluation points move with ``y``.  The operator norm is then
the largest region sum of ``|w_s|``, computed exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from .errors import (
    BadWitness,
    NonConstantUnitImage,
    NonPositiveUnitImage,
    NotInDomain,
    OutOfDomain,
    RegionInvariantViolated,
)
from .functions import StepFunction, as_scalar, canonical, scalar_abs, scalar_max
from .ordinal import ONE, Ordinal, OrdinalLike, ordinal
from .sampling import random_between, strip_finite

Sampler = Callable[[random.Random], Ordinal]


@dataclass(frozen=True)
class PointFunctional:
    """f -> sum of w * f(p) over the (weight, point) terms."""

    terms: tuple[tuple[object, Ordinal], ...]

    def __post_init__(self):
        points = [p for _, p in self.terms]
        if len(set(points)) != len(points):
            raise RegionInvariantViolated(f"repeated evaluation point in {points}")

    def __call__(self, f: StepFunction):
        total = 0
        for w, p in self.terms:
            total = total + w * f(p)
        return total

    @property
    def weights(self) -> tuple:
        return tuple(w for w, _ in self.terms)

    @property
    def points(self) -> tuple[Ordinal, ...]:
        return tuple(p for _, p in self.terms)

    def to_json(self) -> list:
        return [{"weight": str(w), "point": str(p)} for w, p in self.terms]


@dataclass(frozen=True)
class Hull:
    """Interval [lo, hi] (or [lo, hi)) containing every point a slot can take."""

    lo: Ordinal
    hi: Ordinal
    closed: bool = True

    @classmethod
    def point(cls, x: Ordinal) -> "Hull":
        return cls(x, x, True)

    def __contains__(self, x: Ordinal) -> bool:
        return self.lo <= x and (x <= self.hi if self.closed else x < self.hi)


@dataclass(frozen=True)
class Region:
    name: str
    weights: tuple
    points: Callable[[Ordinal], Sequence[Ordinal]]
    contains: Callable[[Ordinal], bool]
    sample: Sampler
    hulls: tuple[Hull, ...] | None = None
    describe: str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(canonical(w) for w in self.weights))

    def row(self, y: Ordinal) -> PointFunctional:
        pts = tuple(self.points(y))
        if len(pts) != len(self.weights):
            raise RegionInvariantViolated(f"region {self.name}: {len(pts)} points for {len(self.weights)} weights")
        return PointFunctional(tuple(zip(self.weights, pts)))

    @property
    def weight_sum(self):
        return sum(self.weights, 0)

    @property
    def abs_sum(self):
        return sum((scalar_abs(w) for w in self.weights), 0)


@dataclass(frozen=True)
class Space:
    """A closed subset of [1, top] given by a membership test and samplers."""

    name: str
    top: Ordinal
    contains: Callable[[Ordinal], bool]
    sample: Sampler
    limit_sample: Sampler | None = None
    vanish_at_top: bool = False

    @classmethod
    def interval(cls, top: Ordinal, name: str | None = None, vanish_at_top: bool = False) -> "Space":
        def sample(rng):
            return random_between(rng, ONE, top)

        return cls(
            name or f"[1, {top}]",
            top,
            lambda x: ONE <= x <= top,
            sample,
            None,
            vanish_at_top,
        )

    def sample_limit(self, rng: random.Random, attempts: int = 200) -> Ordinal | None:
        """A limit ordinal of the space (all of which are accumulation points here)."""
        if self.limit_sample is not None:
            return self.limit_sample(rng)
        for _ in range(attempts):
            y = strip_finite(self.sample(rng))
            if y.is_limit() and self.contains(y):
                return y
        return self.top if self.top.is_limit() else None


@dataclass(frozen=True)
class CkOperator:
    name: str
    domain: Space
    codomain: Space
    regions: tuple[Region, ...]
    locate: Callable[[Ordinal], Region] = field(compare=False)
    weights: tuple = ()
    params: dict = field(default_factory=dict, compare=False)
    claimed_norm: object = None

    def region(self, name: str) -> Region:
        for r in self.regions:
            if r.name == name:
                return r
        raise KeyError(name)

    def row(self, y: OrdinalLike) -> PointFunctional:
        y = ordinal(y)
        if not self.codomain.contains(y):
            raise OutOfDomain(f"{y} is not in the codomain {self.codomain.name}")
        try:
            return self.locate(y).row(y)
        except NotInDomain as exc:
            raise OutOfDomain(str(exc)) from None

    def apply(self, f: StepFunction, y: OrdinalLike):
        if f.domain_top != self.domain.top:
            raise OutOfDomain(f"function lives on [1, {f.domain_top}], operator expects [1, {self.domain.top}]")
        return self.row(y)(f)

    @property
    def positive(self) -> bool:
        return all(w >= 0 for r in self.regions for w in r.weights)

    @property
    def unital(self) -> bool:
        return all(r.weight_sum == 1 for r in self.regions)

    def with_regions(self, regions: Sequence[Region], name: str | None = None, claimed=None) -> "CkOperator":
        table = {r.name: r for r in regions}
        inner = self.locate
        return replace(
            self,
            name=name or self.name,
            regions=tuple(regions),
            locate=lambda y: table[inner(y).name],
            claimed_norm=claimed,
        )

    def describe(self, rows: int = 3, seed: int = 0) -> dict:
        rng = random.Random(seed)
        out = []
        for r in self.regions:
            examples = []
            for _ in range(rows):
                y = r.sample(rng)
                examples.append({"at": str(y), "row": r.row(y).to_json()})
            out.append({
                "region": r.name,
                "description": r.describe,
                "weights": [str(w) for w in r.weights],
                "examples": examples,
            })
        return {
            "operator": self.name,
            "domain": self.domain.name,
            "codomain": self.codomain.name,
            "positive": self.positive,
            "norm": str(op_norm(self)),
            "regions": out,
        }


def apply(T: CkOperator, f: StepFunction, y: OrdinalLike):
    return T.apply(f, y)


def op_norm(T: CkOperator, samples: int = 8, seed: int = 0):
    """max over regions of sum |w|, after checking sampled rows against each region."""
    rng = random.Random(seed)
    for r in T.regions:
        for _ in range(samples):
            y = r.sample(rng)
            if not r.contains(y) or T.locate(y).name != r.name:
                raise RegionInvariantViolated(f"sample {y} escapes region {r.name}")
            r.row(y)
    return scalar_max([r.abs_sum for r in T.regions]) if T.regions else 0


def distortion(T: CkOperator, S: CkOperator):
    return op_norm(T) * op_norm(S)


def scale(T: CkOperator, c) -> CkOperator:
    c = as_scalar(c)
    regions = [replace(r, weights=tuple(c * w for w in r.weights)) for r in T.regions]
    claimed = None if T.claimed_norm is None else scalar_abs(c) * T.claimed_norm
    return T.with_regions(regions, f"{c}*{T.name}", claimed)


def perturb(T: CkOperator, region: str, slot: int, delta) -> CkOperator:
    """Copy of T with one weight of one region shifted by delta."""
    delta = as_scalar(delta)
    regions = []
    for r in T.regions:
        if r.name == region:
            w = list(r.weights)
            w[slot] = w[slot] + delta
            r = replace(r, weights=tuple(w))
        regions.append(r)
    return T.with_regions(regions, f"{T.name}~{region}[{slot}]")


def _unit_image(T: CkOperator, samples: int, seed: int) -> dict:
    """T1 on each region, checked to be constant on sampled rows."""
    rng = random.Random(seed)
    one = StepFunction.constant(T.domain.top, 1)
    image = {}
    for r in T.regions:
        value = r.weight_sum
        for _ in range(samples):
            if r.row(r.sample(rng))(one) != value:
                raise NonConstantUnitImage(f"T1 varies on region {r.name}")
        if not value > 0:
            raise NonPositiveUnitImage(f"T1 = {value} on region {r.name}")
        image[r.name] = value
    return image


def normalize_unital(T: CkOperator, samples: int = 8, seed: int = 0) -> CkOperator:
    """Divide each row by T1 so that the result maps 1 to 1."""
    image = _unit_image(T, samples, seed)
    regions = [replace(r, weights=tuple(w / image[r.name] for w in r.weights)) for r in T.regions]
    return T.with_regions(regions, f"unital({T.name})", 1 if T.positive else None)


def normalize_pair(T: CkOperator, S: CkOperator, samples: int = 8, seed: int = 0) -> tuple[CkOperator, CkOperator]:
    """Unital normalization of T together with the matching inverse.

    If U = T / T1 then U^-1 h = S(T1 * h); the weight of each S slot is multiplied
    by T1 at the slot point, which must be constant across the S region.
    """
    image = _unit_image(T, samples, seed)
    U = normalize_unital(T, samples, seed)
    rng = random.Random(seed + 1)
    regions = []
    for r in S.regions:
        factors: list = [None] * len(r.weights)
        for _ in range(max(samples, 1)):
            for i, p in enumerate(r.row(r.sample(rng)).points):
                v = image[T.locate(p).name]
                if factors[i] is None:
                    factors[i] = v
                elif factors[i] != v:
                    raise NonConstantUnitImage(f"T1 varies along slot {i} of region {r.name}")
        factors = [1 if v is None else v for v in factors]
        regions.append(replace(r, weights=tuple(w * v for w, v in zip(r.weights, factors))))
    return U, S.with_regions(regions, f"unital({S.name})")


def triv1_certificate(T: CkOperator, f: StepFunction):
    """Lower bound 2*||T||/||Tf|| - 1 on the distortion of any inverse pair for T.

    ``||Tf||`` is bounded above exactly: on each region the row is a positive
    combination, so it is at most sum_s w_s * max(f on hull_s).  Regions without
    hulls use the whole domain.
    """
    if not T.positive:
        raise BadWitness("the certificate needs a positive operator")
    if not f.is_nonnegative() or f.sup_norm() != 1:
        raise BadWitness("witness must be non-negative with norm 1")
    norm = op_norm(T)
    if any(r.weight_sum != norm for r in T.regions):
        raise BadWitness("T1 must equal ||T|| times the unit")
    bound = 0
    for r in T.regions:
        if r.hulls is None:
            top = f.value_range(ONE, T.domain.top)[1]
            total = sum((w * top for w in r.weights), 0)
        else:
            total = sum(
                (w * f.value_range(h.lo, h.hi, h.closed)[1] for w, h in zip(r.weights, r.hulls)),
                0,
            )
        bound = scalar_max([bound, total])
    if bound == 0:
        raise BadWitness("Tf vanishes, so the witness carries no information")
    return 2 * norm / bound - 1


__all__ = [
    "PointFunctional",
    "Hull",
    "Region",
    "Space",
    "CkOperator",
    "apply",
    "op_norm",
    "distortion",
    "scale",
    "perturb",
    "normalize_unital",
    "normalize_pair",
    "triv1_certificate",
]
