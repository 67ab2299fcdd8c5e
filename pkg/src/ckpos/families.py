"""Explicit positive isomorphisms between spaces C([1, a]) and their inverses.

Each builder returns ``(T, S)`` with ``S = T^-1``.  Rows are described per
region; weights are exact whenever the supplied weights are.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Sequence

from .decomp import PijSystem, ThetaSpace, TupleTheta
from .errors import BadWeights, NotInDomain
from .functions import StepFunction, as_scalar, scalar_max
from .operators import CkOperator, Hull, Region, Space
from .ordinal import (
    ONE,
    OMEGA,
    ZERO,
    Ordinal,
    OrdinalLike,
    add,
    divmod_base,
    left_subtract,
    mul,
    omega_pow,
    ordinal,
)
from .sampling import random_below, random_between
from .weights import check_simplex

Sampler = Callable[[random.Random], Ordinal]


def _small_index(rng: random.Random, cap: int = 6) -> int:
    n = 1
    while n < cap and rng.random() < 0.45:
        n += 1
    return n


def _fixed(point: Ordinal) -> Sampler:
    return lambda rng: point


def _space(name: str, top: Ordinal, contains, regions: Sequence[Region], vanish_at_top=False) -> Space:
    """Space whose sampler picks a region uniformly and samples inside it."""

    def sample(rng: random.Random) -> Ordinal:
        return rng.choice(regions).sample(rng)

    return Space(name, top, contains, sample, None, vanish_at_top)


def _locator(regions: Sequence[Region], pick: Callable[[Ordinal], str]):
    table = {r.name: r for r in regions}
    return lambda y: table[pick(y)]


def _lam_text(lam) -> list[str]:
    return [str(x) for x in lam]


# k summands onto one --------------------------------------------------------------


def build_Tk(alpha: OrdinalLike, k: int, lam: Sequence) -> tuple[CkOperator, CkOperator]:
    """T: C([1, w^a*k]) -> C(I u {w^a + j : 0 < j < k}) and its inverse.

    I is the union of the closures of the pieces I_1..I_k of the p(i,j) system.
    """
    alpha = ordinal(alpha)
    if k < 2:
        raise ValueError("k must be at least 2")
    lam = check_simplex(lam, k)
    P = PijSystem(alpha, k)
    A = P.top
    dom_top = mul(A, Ordinal.of(k))
    cod_top = add(A, Ordinal.of(k - 1))
    ends = [mul(A, Ordinal.of(j)) for j in range(1, k + 1)]  # ends[j-1] = w^a * j

    def j_hull(j: int) -> Hull:
        return Hull(add(mul(A, Ordinal.of(j - 1)), ONE), ends[j - 1], closed=False)

    # T regions on the codomain
    t_regions: list[Region] = []
    for j in range(1, k):
        y = add(A, Ordinal.of(j))
        t_regions.append(Region(
            f"w^a+{j}", (Fraction(1),), (lambda y, j=j: (ends[j - 1],)),
            (lambda x, y=y: x == y), _fixed(y), (Hull.point(ends[j - 1]),),
            "copies the value at the end of summand j",
        ))
    t_regions.append(Region(
        "w^a", tuple(lam), lambda y: tuple(ends), lambda x: x == A, _fixed(A),
        tuple(Hull.point(e) for e in ends), "weighted average of the summand ends",
    ))

    def in_piece(i: int):
        def contains(y: Ordinal) -> bool:
            hit = P.locate_i(y)
            return hit is not None and hit[0] == i
        return contains

    def piece_sampler(i: int) -> Sampler:
        def sample(rng):
            block = P.i_block(i, _small_index(rng))
            return block.at(random_between(rng, ONE, block.length))
        return sample

    maps = {(i, j): P.p(i, j) for i in range(1, k + 1) for j in range(1, k + 1)}
    for i in range(1, k + 1):
        weights = tuple(lam[j - 1] for j in range(i, k + 1)) + tuple(lam[j - 1] for j in range(1, i))

        def points(y, i=i):
            return tuple(maps[i, j](y) for j in range(i, k + 1)) + tuple(ends[j - 1] for j in range(1, i))

        hulls = tuple(j_hull(j) for j in range(i, k + 1)) + tuple(Hull.point(ends[j - 1]) for j in range(1, i))
        t_regions.append(Region(
            f"I_{i}", weights, points, in_piece(i), piece_sampler(i), hulls,
            f"translates piece {i} onto summands {i}..k, ends of earlier summands",
        ))

    def pick_t(y: Ordinal) -> str:
        if y == A:
            return "w^a"
        if y > A:
            return f"w^a+{int(left_subtract(A, y))}"
        hit = P.locate_i(y)
        if hit is None:
            raise NotInDomain(f"{y} is not in the codomain")
        return f"I_{hit[0]}"

    def cod_contains(y: Ordinal) -> bool:
        if y == A or A < y <= cod_top:
            return True
        return P.locate_i(y) is not None

    # S regions on the domain [1, w^a*k]
    inv = {i: maps[i, i].inverse() for i in range(1, k + 1)}
    lk = lam[k - 1]
    tail_weights = (1 / lk,) + tuple(-lam[j - 1] / lk for j in range(1, k))
    plus = [add(A, Ordinal.of(j)) for j in range(1, k)]

    s_regions: list[Region] = []
    for j in range(1, k):
        s_regions.append(Region(
            f"w^a*{j}", (Fraction(1),), (lambda x, j=j: (plus[j - 1],)),
            (lambda x, e=ends[j - 1]: x == e), _fixed(ends[j - 1]), None,
            "reads the isolated point w^a+j",
        ))
    s_regions.append(Region(
        f"w^a*{k}", tail_weights, lambda x: (A,) + tuple(plus),
        lambda x: x == ends[k - 1], _fixed(ends[k - 1]), None,
        "solves the average at w^a for the last end",
    ))

    def in_summand(l: int):
        def contains(x: Ordinal) -> bool:
            q, r = divmod_base(x, alpha)
            return not r.is_zero() and int(q) + 1 == l
        return contains

    def summand_sampler(l: int) -> Sampler:
        def sample(rng):
            block = P.j_block(l, _small_index(rng))
            return block.at(random_between(rng, ONE, block.length))
        return sample

    s_regions.append(Region(
        f"J_{k}", tail_weights, lambda x: (inv[k](x),) + tuple(plus),
        in_summand(k), summand_sampler(k), None, "last summand",
    ))
    for l in range(1, k):
        def points(x, l=l):
            g = inv[l](x)
            return (g, plus[l - 1], inv[l + 1](maps[l, l + 1](g)))

        s_regions.append(Region(
            f"J_{l}", (1 / lam[l - 1], Fraction(1), -1 / lam[l - 1]), points,
            in_summand(l), summand_sampler(l), None, f"summand {l}, three-term form",
        ))

    def pick_s(x: Ordinal) -> str:
        q, r = divmod_base(x, alpha)
        if r.is_zero():
            return f"w^a*{int(q)}"
        return f"J_{int(q) + 1}"

    domain = _space(f"[1, {dom_top}]", dom_top, lambda x: ONE <= x <= dom_top, s_regions)
    codomain = _space(f"I u {{w^a+j}} in [1, {cod_top}]", cod_top, cod_contains, t_regions)
    params = {"family": "tk", "alpha": str(alpha), "k": k, "lambda": _lam_text(lam)}
    claimed_s = scalar_max([2 / lk - 1] + [1 + 2 / lam[l - 1] for l in range(1, k)])
    T = CkOperator(f"T_k(a={alpha}, k={k})", domain, codomain, tuple(t_regions),
                   _locator(t_regions, pick_t), lam, params, 1)
    S = CkOperator(f"S_k(a={alpha}, k={k})", codomain, domain, tuple(s_regions),
                   _locator(s_regions, pick_s), lam, params, claimed_s)
    S.params["_pij"] = P
    return T, S


def tk_recursive_inverse(T: CkOperator, h: StepFunction, x: OrdinalLike):
    """Inverse of the k-summand operator evaluated through the inductive definition.

    Independent of the three-term rows of S; used as a cross-check.
    """
    P: PijSystem = _pij_of(T)
    lam = T.weights
    k = P.k
    A = P.top
    alpha = P.alpha
    plus = [h(add(A, Ordinal.of(j))) for j in range(1, k)]

    def value(x: Ordinal):
        q, r = divmod_base(x, alpha)
        if r.is_zero():
            j = int(q)
            if j < k:
                return plus[j - 1]
            return (h(A) - sum((lam[i] * plus[i] for i in range(k - 1)), 0)) / lam[k - 1]
        l = int(q) + 1
        g = P.p(l, l).invert(x)
        if l == k:
            return (h(g) - sum((lam[i] * plus[i] for i in range(k - 1)), 0)) / lam[k - 1]
        later = sum((lam[j - 1] * value(P.p(l, j)(g)) for j in range(l + 1, k + 1)), 0)
        earlier = sum((lam[j - 1] * plus[j - 1] for j in range(1, l)), 0)
        return (h(g) - later - earlier) / lam[l - 1]

    return value(ordinal(x))


def _pij_of(T: CkOperator) -> PijSystem:
    P = T.params.get("_pij")
    if P is None:
        P = PijSystem(T.params["alpha"], T.params["k"])
    return P


# tuple-coordinate constructions -------------------------------------------------


def _theta_builder(space: ThetaSpace, lam: tuple, name: str, family: str, params: dict):
    A = space.digit_bound
    top_point = space.top_point
    n_lengths = space.max_length
    with_beta = space.beta is not None

    def sample_tuple(rng: random.Random, length: int) -> TupleTheta:
        coords: list[Ordinal] = []
        for pos in range(length):
            last = pos == length - 1
            if with_beta and pos == 0:
                if length == 1:
                    coords.append(random_between(rng, ONE, space.beta))
                else:
                    coords.append(random_below(rng, space.beta))
                continue
            c = random_below(rng, A)
            while last and c.is_zero():
                c = random_below(rng, A)
            coords.append(c)
        return TupleTheta(tuple(coords))

    def cod_length(y: Ordinal) -> int:
        t = space.decode(y)
        return 0 if t.top else t.length

    top_name = "*" if with_beta else "top"

    # T rows
    t_regions: list[Region] = [Region(
        top_name, (Fraction(1),), lambda y: (A,), lambda y: y == top_point, _fixed(top_point),
        None, "reads w^a",
    )]
    for l in range(1, n_lengths + 1):
        rest = 1 - sum(lam[:l], 0)
        head = (rest,) if rest != 0 else ()
        weights = head + tuple(lam[:l])

        def points(y, l=l, head=head):
            g = space.decode(y)
            pts = (A,) if head else ()
            pts += tuple(space.rho(g.bumped(i)) for i in range(1, l))
            return pts + (space.rho(g),)

        t_regions.append(Region(
            f"len{l}", weights, points,
            (lambda y, l=l: ONE <= y <= space.codomain_top and cod_length(y) == l),
            (lambda rng, l=l: space.encode(sample_tuple(rng, l))), None,
            f"tuples of length {l}",
        ))

    # S rows
    s_regions: list[Region] = [Region(
        "w^a", (Fraction(1),), lambda x: (top_point,), lambda x: x == A, _fixed(A),
        None, "reads the distinguished top point",
    )]
    l1 = lam[0]
    first_head = (1 - 1 / l1,) if l1 != 1 else ()
    s_regions.append(Region(
        "len1", first_head + (1 / l1,),
        lambda x, fh=first_head: ((top_point,) if fh else ()) + (space.encode(space.rho_inverse(x)),),
        lambda x: x != A and ONE <= x <= space.domain_top and space.rho_inverse(x).length == 1,
        lambda rng: space.rho(sample_tuple(rng, 1)), None, "tuples of length 1",
    ))
    for l in range(2, n_lengths + 1):
        ll = lam[l - 1]

        def points(x, l=l):
            g = space.rho_inverse(x)
            return (top_point, space.encode(g), space.encode(g.bumped(l - 1)))

        s_regions.append(Region(
            f"len{l}", (Fraction(1), 1 / ll, -1 / ll), points,
            (lambda x, l=l: x != A and ONE <= x <= space.domain_top and space.rho_inverse(x).length == l),
            (lambda rng, l=l: space.rho(sample_tuple(rng, l))), None, f"tuples of length {l}",
        ))

    def pick_t(y: Ordinal) -> str:
        return top_name if y == top_point else f"len{cod_length(y)}"

    def pick_s(x: Ordinal) -> str:
        if x == A:
            return "w^a"
        return f"len{space.rho_inverse(x).length}"

    dom_top = space.domain_top
    cod_top = space.codomain_top
    domain = _space(f"[1, {dom_top}]", dom_top, lambda x: ONE <= x <= dom_top, s_regions)
    codomain = _space(f"[1, {cod_top}]", cod_top, lambda y: ONE <= y <= cod_top, t_regions)
    claimed_s = scalar_max([2 / lam[0] - 1] + [2 / x + 1 for x in lam[1:]])
    params = dict(params, family=family, **{"lambda": _lam_text(lam)})
    T = CkOperator(f"T[{name}]", domain, codomain, tuple(t_regions), _locator(t_regions, pick_t), lam, params, 1)
    S = CkOperator(f"S[{name}]", codomain, domain, tuple(s_regions), _locator(s_regions, pick_s), lam, params, claimed_s)
    S.params["_theta"] = space
    return T, S


def build_power_iso(alpha: OrdinalLike, n: int, lam: Sequence) -> tuple[CkOperator, CkOperator]:
    """T: C([1, w^a]) -> C([1, w^(a*n)]) in tuple coordinates, and its inverse."""
    alpha = ordinal(alpha)
    if n < 1:
        raise ValueError("n must be at least 1")
    lam = check_simplex(lam, n)
    space = ThetaSpace(alpha, n)
    return _theta_builder(space, lam, f"a={alpha}, n={n}", "power", {"alpha": str(alpha), "n": n})


def build_power_beta_iso(
    alpha: OrdinalLike, beta: OrdinalLike, n: int, lam: Sequence
) -> tuple[CkOperator, CkOperator]:
    """T: C([1, w^a + b]) -> C([1, w^(a*n)*b + 1]) in tuple coordinates, and its inverse.

    The isolated top point ``w^(a*n)*b + 1`` plays the extra point ``*``.
    """
    alpha, beta = ordinal(alpha), ordinal(beta)
    if n < 1:
        raise ValueError("n must be at least 1")
    if beta.is_zero():
        raise ValueError("beta must be at least 1")
    lam = check_simplex(lam, n + 1)
    space = ThetaSpace(alpha, n, beta)
    return _theta_builder(
        space, lam, f"a={alpha}, b={beta}, n={n}", "power_beta",
        {"alpha": str(alpha), "beta": str(beta), "n": n},
    )


# C([1, w]) onto C([1, w*2]) ---------------------------------------------------------


def build_omega2_family(lam) -> tuple[CkOperator, CkOperator]:
    lam = as_scalar(lam)
    if not 0 < lam < 1:
        raise BadWeights("lambda must lie strictly between 0 and 1")
    w, w2 = OMEGA, mul(OMEGA, Ordinal.of(2))
    one, two = Ordinal.of(1), Ordinal.of(2)
    mu = 1 - lam
    half = Fraction(1, 2)

    def finite_sampler(lo: int) -> Sampler:
        return lambda rng: Ordinal.of(rng.randint(lo, 12) if rng.random() < 0.7 else rng.randint(lo, 10**6))

    def after_w(rng):
        return add(w, Ordinal.of(rng.randint(1, 12) if rng.random() < 0.7 else rng.randint(1, 10**6)))

    t_regions = [
        Region("w", (lam, mu), lambda y: (w, one), lambda y: y == w, _fixed(w),
               (Hull.point(w), Hull.point(one))),
        Region("w*2", (lam, mu), lambda y: (w, two), lambda y: y == w2, _fixed(w2),
               (Hull.point(w), Hull.point(two))),
        Region("1", (half, half), lambda y: (one, two), lambda y: y == one, _fixed(one),
               (Hull.point(one), Hull.point(two))),
        Region("n+1", (mu, lam), lambda y: (one, Ordinal.of(2 * int(y) - 1)),
               lambda y: y.is_finite() and int(y) >= 2, finite_sampler(2),
               (Hull.point(one), Hull(Ordinal.of(3), w, False))),
        Region("w+n", (mu, lam), lambda y: (two, Ordinal.of(2 * int(left_subtract(w, y)) + 2)),
               lambda y: w < y < w2, after_w,
               (Hull.point(two), Hull(Ordinal.of(4), w, False))),
    ]

    def pick_t(y: Ordinal) -> str:
        if y in (w, w2, one):
            return {w: "w", w2: "w*2", one: "1"}[y]
        return "n+1" if y < w else "w+n"

    a = 1 / (2 * lam)
    b = 1 / (2 * mu)
    c = mu / lam
    s_regions = [
        Region("w", (a, a, -c), lambda x: (w, w2, one), lambda x: x == w, _fixed(w)),
        Region("1", (b, -b, Fraction(1)), lambda x: (w, w2, one), lambda x: x == one, _fixed(one)),
        Region("2", (-b, b, Fraction(1)), lambda x: (w, w2, one), lambda x: x == two, _fixed(two)),
        Region("2n+1", (-a, a, -c, 1 / lam),
               lambda x: (w, w2, one, Ordinal.of((int(x) - 1) // 2 + 1)),
               lambda x: x.is_finite() and int(x) >= 3 and int(x) % 2 == 1,
               lambda rng: Ordinal.of(2 * (int(finite_sampler(1)(rng))) + 1)),
        Region("2n+2", (a, -a, -c, 1 / lam),
               lambda x: (w, w2, one, add(w, Ordinal.of((int(x) - 2) // 2))),
               lambda x: x.is_finite() and int(x) >= 4 and int(x) % 2 == 0,
               lambda rng: Ordinal.of(2 * (int(finite_sampler(1)(rng))) + 2)),
    ]

    def pick_s(x: Ordinal) -> str:
        if x == w:
            return "w"
        v = int(x)
        if v <= 2:
            return str(v)
        return "2n+1" if v % 2 else "2n+2"

    t_space = _space("[1, w*2]", w2, lambda y: ONE <= y <= w2, t_regions)
    s_space = _space("[1, w]", w, lambda x: ONE <= x <= w, s_regions)
    params = {"family": "omega2", "lambda": [str(lam)]}
    claimed = scalar_max([1 + 1 / mu, 3 / lam - 1])
    T = CkOperator("T[omega2]", s_space, t_space, tuple(t_regions), _locator(t_regions, pick_t), (lam,), params, 1)
    S = CkOperator("S[omega2]", t_space, s_space, tuple(s_regions), _locator(s_regions, pick_s), (lam,), params, claimed)
    return T, S


# C_0([1, w]) onto C([1, w]) ---------------------------------------------------------


def build_c0_c() -> tuple[CkOperator, CkOperator]:
    """T: C_0([1, w]) -> C([1, w]) (functions vanishing at w) and its inverse."""
    w = OMEGA
    one = Ordinal.of(1)

    def finite(lo: int) -> Sampler:
        return lambda rng: Ordinal.of(rng.randint(lo, 12) if rng.random() < 0.7 else rng.randint(lo, 10**6))

    t_regions = [
        Region("w", (Fraction(1),), lambda y: (one,), lambda y: y == w, _fixed(w), (Hull.point(one),)),
        Region("n", (Fraction(1), Fraction(1)), lambda y: (one, Ordinal.of(int(y) + 1)),
               lambda y: y.is_finite() and int(y) >= 1, finite(1),
               (Hull.point(one), Hull(Ordinal.of(2), w, False))),
    ]
    s_regions = [
        Region("w", (), lambda x: (), lambda x: x == w, _fixed(w), None, "zero row"),
        Region("1", (Fraction(1),), lambda x: (w,), lambda x: x == one, _fixed(one)),
        Region("n+1", (Fraction(1), Fraction(-1)), lambda x: (Ordinal.of(int(x) - 1), w),
               lambda x: x.is_finite() and int(x) >= 2, finite(2)),
    ]

    def pick_t(y):
        return "w" if y == w else "n"

    def pick_s(x):
        if x == w:
            return "w"
        return "1" if x == one else "n+1"

    dom = _space("C_0 on [1, w]", w, lambda x: ONE <= x <= w, s_regions, vanish_at_top=True)
    cod = _space("[1, w]", w, lambda y: ONE <= y <= w, t_regions)
    params = {"family": "c0"}
    T = CkOperator("T[c0->c]", dom, cod, tuple(t_regions), _locator(t_regions, pick_t), (), params, Fraction(2))
    S = CkOperator("S[c->c0]", cod, dom, tuple(s_regions), _locator(s_regions, pick_s), (), params, Fraction(2))
    return T, S


FAMILIES = ("tk", "power", "power_beta", "omega2", "c0")

__all__ = [
    "build_Tk",
    "tk_recursive_inverse",
    "build_power_iso",
    "build_power_beta_iso",
    "build_omega2_family",
    "build_c0_c",
    "FAMILIES",
]
