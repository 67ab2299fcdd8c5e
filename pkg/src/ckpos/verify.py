"""Seeded verification runs for an operator pair (T, S = T^-1)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import sympy as sp

from .constants import decimal, render
from .functions import StepFunction, sample_step, scalar_eq
from .operators import CkOperator, PointFunctional, op_norm
from .ordinal import Ordinal, fundamental_sequence
from .sampling import breakpoint_pool

SCHEMA = 1


def fmt_scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, sp.Basic):
        return render(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _decimal(v) -> str | None:
    if v is None:
        return None
    if isinstance(v, sp.Basic):
        return decimal(v)
    return f"{float(v):.10f}"


@dataclass
class Check:
    name: str
    status: str  # pass, fail or skip
    witness: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    operator: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    norms: dict = field(default_factory=dict)
    positivity: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.status == "fail"), None)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "operator": self.operator,
            "params": self.params,
            "checks": [c.to_json() for c in self.checks],
            "norms": self.norms,
            "positivity": self.positivity,
            "passed": self.passed,
        }

    def to_text(self) -> str:
        lines = [f"operator: {self.operator}"]
        for c in self.checks:
            lines.append(f"  {c.status:4}  {c.name}")
        n = self.norms
        lines.append(f"  ||T|| = {n['T']}  ||S|| = {n['S']}  distortion = {n['distortion']} ({n['distortion_decimal']})")
        lines.append(f"  claimed: ||T|| <= {n['claimed']['T']}, ||S|| <= {n['claimed']['S']}")
        lines.append(f"  T positive: {self.positivity['T']}  S positive: {self.positivity['S']}")
        lines.append("all checks passed" if self.passed else "verification FAILED")
        return "\n".join(lines)


def _public(params: dict) -> dict:
    return {k: v for k, v in params.items() if not k.startswith("_")}


def _functions(rng: random.Random, space, count: int) -> list[StepFunction]:
    pool = breakpoint_pool(rng, space.top)
    out = []
    for _ in range(count):
        r = rng.randint(1, min(6, len(pool) + 1))
        out.append(sample_step(rng, space.top, r, pool, vanish_at_top=space.vanish_at_top))
    return out


def _compose(outer: CkOperator, inner: CkOperator, x: Ordinal) -> list[tuple[object, PointFunctional]]:
    return [(w, inner.row(p)) for w, p in outer.row(x).terms]


def round_trip(
    outer: CkOperator, inner: CkOperator, name: str, samples: int, rng: random.Random
) -> Check:
    """outer(inner(f)) = f at points stratified over the regions of outer."""
    space = inner.domain
    n_funcs = max(1, isqrt(samples))
    n_points = max(1, samples // n_funcs)
    funcs = _functions(rng, space, n_funcs)
    regions = outer.regions
    for i in range(n_points):
        x = regions[i % len(regions)].sample(rng)
        rows = _compose(outer, inner, x)
        for f in funcs:
            got = sum((w * row(f) for w, row in rows), 0)
            want = f(x)
            if not scalar_eq(got, want, 1e-9 if isinstance(got, float) else 0.0):
                return Check(name, "fail", {
                    "point": str(x), "region": outer.locate(x).name,
                    "function": f.to_json(), "expected": fmt_scalar(want), "got": fmt_scalar(got),
                })
    return Check(name, "pass", {"points": n_points, "functions": n_funcs})


def stabilization(
    T: CkOperator, depth: int, n_points: int, n_funcs: int, rng: random.Random, min_tail: int = 4
) -> Check:
    """Tf along the fundamental sequence of each sampled limit point is eventually exactly Tf(y)."""
    cod = T.codomain
    limits: list[Ordinal] = []
    for _ in range(n_points * 4):
        if len(limits) >= n_points:
            break
        y = cod.sample_limit(rng)
        if y is not None and y not in limits:
            limits.append(y)
    if not limits:
        return Check("continuity", "skip", {"reason": "codomain has no limit points to sample"})
    funcs = _functions(rng, T.domain, n_funcs)
    worst = 0
    for y in limits:
        seq = []
        for m in range(depth + 1):
            ym = fundamental_sequence(y, m)
            if ym.is_zero() or not cod.contains(ym):
                continue
            seq.append((m, T.row(ym)))
        target_row = T.row(y)
        for f in funcs:
            target = target_row(f)
            values = [(m, row(f)) for m, row in seq]
            tail = 0
            for _, v in reversed(values):
                if v != target:
                    break
                tail += 1
            if tail < min_tail:
                return Check("continuity", "fail", {
                    "limit_point": str(y), "function": f.to_json(), "target": fmt_scalar(target),
                    "tail": [[m, fmt_scalar(v)] for m, v in values[-8:]],
                })
            worst = max(worst, values[len(values) - tail][0])
    return Check("continuity", "pass", {
        "limit_points": [str(y) for y in limits], "functions": n_funcs,
        "depth": depth, "latest_stable_index": worst,
    })


def _norm_check(name: str, computed, claimed) -> Check:
    if claimed is None:
        return Check(name, "skip", {"computed": fmt_scalar(computed), "reason": "no claimed value"})
    if isinstance(computed, float) or isinstance(claimed, float):
        within = float(computed) <= float(claimed) + 1e-9
        equal = abs(float(computed) - float(claimed)) <= 1e-9
    else:
        diff = sp.nsimplify(sp.sympify(claimed) - sp.sympify(computed))
        within = bool(diff >= 0)
        equal = diff == 0
    return Check(name, "pass" if within else "fail", {
        "computed": fmt_scalar(computed), "claimed": fmt_scalar(claimed), "equal": bool(equal),
    })


def verify_operator(
    T: CkOperator,
    S: CkOperator,
    samples: int = 1000,
    seed: int = 0,
    depth: int = 64,
    limit_points: int = 6,
    limit_functions: int | None = None,
) -> Report:
    """Run every check on the pair; failures are report entries, never exceptions."""
    if T.domain.top != S.codomain.top or T.codomain.top != S.domain.top:
        raise ValueError("S must map the codomain of T back onto its domain")
    rng = random.Random(seed)
    report = Report(T.name, _public(T.params))
    report.positivity = {"T": T.positive, "S": S.positive}

    report.checks.append(Check("positivity", "pass" if T.positive else "fail", {
        "negative_regions": [r.name for r in T.regions if any(w < 0 for w in r.weights)],
    }))
    if T.domain.vanish_at_top:
        report.checks.append(Check("unitality", "skip", {
            "reason": "domain functions vanish at the top, so the unit is not in the domain",
        }))
    else:
        off = {r.name: fmt_scalar(r.weight_sum) for r in T.regions if r.weight_sum != 1}
        report.checks.append(Check("unitality", "fail" if off else "pass", {"region_sums": off} if off else None))

    report.checks.append(round_trip(S, T, "left_inverse", samples, rng))
    report.checks.append(round_trip(T, S, "right_inverse", samples, rng))

    nt, ns = op_norm(T), op_norm(S)
    report.checks.append(_norm_check("norm_T", nt, T.claimed_norm))
    report.checks.append(_norm_check("norm_S", ns, S.claimed_norm))
    dist = nt * ns
    claimed_dist = None if T.claimed_norm is None or S.claimed_norm is None else T.claimed_norm * S.claimed_norm
    if isinstance(dist, sp.Basic):
        dist = sp.radsimp(dist)
    report.norms = {
        "T": fmt_scalar(nt),
        "S": fmt_scalar(ns),
        "distortion": fmt_scalar(dist),
        "distortion_decimal": _decimal(dist),
        "claimed": {
            "T": fmt_scalar(T.claimed_norm),
            "S": fmt_scalar(S.claimed_norm),
            "distortion": fmt_scalar(claimed_dist),
        },
    }

    n_funcs = limit_functions if limit_functions is not None else max(1, isqrt(samples))
    report.checks.append(stabilization(T, depth, limit_points, n_funcs, rng))
    return report


__all__ = ["Check", "Report", "verify_operator", "round_trip", "stabilization", "SCHEMA", "fmt_scalar"]
