"""Block decompositions of ordinal intervals and the order isomorphisms between them.

Every map here is a *prefix translation* on blocks: a block is
``[prefix+1, prefix+length]`` and a point ``prefix + d`` of a source block is
sent to ``target_prefix + d``.  Such maps are strictly increasing, and their
inverses are computed the same way with the roles of the blocks swapped.

Three families are provided:

* :class:`PijSystem` -- disjoint pieces ``I_1..I_k`` of ``[1, w^a)`` with
  translation maps ``p(i, j)`` of ``I_i`` onto ``[w^a*(j-1)+1, w^a*j)``.
* :class:`SplitFamily` -- a partition of ``[1, w^a)`` into pieces, each made of
  blocks of the same order types as the unit blocks of ``[1, w^a)``, so that
  every piece closure is order-isomorphic to ``[1, w^a]``.
* :class:`ThetaSpace` -- tuple coordinates for ``[1, w^(a*n)]`` or
  ``[1, w^(a*n)*b]`` together with the map ``rho`` into the domain interval.
"""

from __future__ import annotations

from math import isqrt
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterator

from .enumeration import Enumeration, OrdinalsBelow, PowerBelow, Product, Singleton, Union
from .errors import NotInDomain, NotInUnion, OutOfRange, UnknownPiece
from .ordinal import (
    ONE,
    ZERO,
    Ordinal,
    OrdinalLike,
    add,
    digits_base,
    divmod_base,
    from_digits,
    fundamental_sequence,
    left_subtract,
    mul,
    omega_pow,
    ordinal,
)


@dataclass(frozen=True)
class Block:
    """The interval ``[prefix+1, prefix+length]``."""

    prefix: Ordinal
    length: Ordinal

    @property
    def lo(self) -> Ordinal:
        return add(self.prefix, ONE)

    @property
    def hi(self) -> Ordinal:
        return add(self.prefix, self.length)

    def __contains__(self, x: Ordinal) -> bool:
        return self.prefix < x <= self.hi

    def offset(self, x: Ordinal) -> Ordinal:
        return left_subtract(self.prefix, x)

    def at(self, d: Ordinal) -> Ordinal:
        return add(self.prefix, d)

    def as_pair(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


class PiecewiseTranslationMap:
    """Order isomorphism assembled from block translations.

    ``locate_source(x)`` returns the key of the source block holding ``x``
    (raising :class:`NotInDomain` otherwise); ``source(key)`` and
    ``target(key)`` return the paired blocks.  ``fixed`` lists points mapped to
    themselves outside every block (e.g. a common supremum).
    """

    def __init__(
        self,
        name: str,
        locate_source: Callable[[Ordinal], Hashable],
        locate_target: Callable[[Ordinal], Hashable],
        source: Callable[[Hashable], Block],
        target: Callable[[Hashable], Block],
        keys: Callable[[], Iterator[Hashable]] | None = None,
        fixed: tuple[Ordinal, ...] = (),
        domain: str = "",
        codomain: str = "",
    ):
        self.name = name
        self._locate_source = locate_source
        self._locate_target = locate_target
        self._source = source
        self._target = target
        self._keys = keys
        self.fixed = frozenset(fixed)
        self.domain = domain
        self.codomain = codomain

    def apply(self, x: OrdinalLike) -> Ordinal:
        x = ordinal(x)
        if x in self.fixed:
            return x
        key = self._locate_source(x)
        return self._target(key).at(self._source(key).offset(x))

    __call__ = apply

    def invert(self, y: OrdinalLike) -> Ordinal:
        y = ordinal(y)
        if y in self.fixed:
            return y
        key = self._locate_target(y)
        return self._source(key).at(self._target(key).offset(y))

    def in_domain(self, x: Ordinal) -> bool:
        if x in self.fixed:
            return True
        try:
            self._locate_source(x)
        except NotInDomain:
            return False
        return True

    def in_codomain(self, y: Ordinal) -> bool:
        if y in self.fixed:
            return True
        try:
            self._locate_target(y)
        except NotInDomain:
            return False
        return True

    def inverse(self) -> "PiecewiseTranslationMap":
        return PiecewiseTranslationMap(
            f"{self.name}^-1",
            self._locate_target,
            self._locate_source,
            self._target,
            self._source,
            self._keys,
            tuple(self.fixed),
            self.codomain,
            self.domain,
        )

    def block_pairs(self, limit: int = 8) -> list[tuple[Block, Block]]:
        if self._keys is None:
            return []
        out = []
        for key in self._keys():
            if len(out) >= limit:
                break
            out.append((self._source(key), self._target(key)))
        return out

    def __repr__(self):
        return f"PiecewiseTranslationMap({self.name!r})"


# ladders of powers along fundamental sequences ---------------------------


def least_index(pred: Callable[[int], bool], start: int = 0) -> int:
    """Least n >= start with pred(n), for pred monotone (false then true); galloping search."""
    if pred(start):
        return start
    lo, step = start, 1
    while not pred(lo + step):
        lo += step
        step *= 2
    hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


class _Ladder:
    """w^(b_n) with b_n the fundamental sequence of a limit alpha, and w^(b_0) taken as 1."""

    def __init__(self, alpha: Ordinal):
        self.alpha = alpha
        self.power = lru_cache(maxsize=4096)(self._power)

    def _power(self, n: int) -> Ordinal:
        if n == 0:
            return ONE
        return omega_pow(fundamental_sequence(self.alpha, n))

    def first_at_least(self, x: Ordinal, start: int = 1) -> int:
        """Least n >= start with x <= w^(b_n); x must be below w^alpha."""
        return least_index(lambda n: x <= self.power(n), start)


@lru_cache(maxsize=None)
def _ladder(alpha: Ordinal) -> _Ladder:
    return _Ladder(alpha)


def _check_alpha(alpha: OrdinalLike) -> Ordinal:
    alpha = ordinal(alpha)
    if alpha.is_zero():
        raise ValueError("alpha must be at least 1")
    return alpha


# unit blocks of [1, w^alpha) ------------------------------------------------


class UnitBlocks:
    """The standard cut of ``[1, w^alpha)`` into blocks ``U_1 < U_2 < ...``.

    Successor alpha = b+1: ``U_t = [w^b*(t-1)+1, w^b*t]``.  Limit alpha:
    ``U_1 = [1, w^(b_1)]`` and ``U_t = [w^(b_(t-1))+1, w^(b_t)]``.
    """

    def __init__(self, alpha: OrdinalLike):
        self.alpha = _check_alpha(alpha)
        self.top = omega_pow(self.alpha)
        self.successor = self.alpha.is_successor()
        if self.successor:
            self.unit = omega_pow(self.alpha.predecessor())
        else:
            self.ladder = _ladder(self.alpha)

    def length(self, t: int) -> Ordinal:
        return self.unit if self.successor else self.ladder.power(t)

    def block(self, t: int) -> Block:
        if t < 1:
            raise ValueError("blocks are numbered from 1")
        if self.successor:
            return Block(mul(self.unit, Ordinal.of(t - 1)), self.unit)
        prefix = ZERO if t == 1 else self.ladder.power(t - 1)
        return Block(prefix, self.ladder.power(t))

    def locate(self, x: Ordinal) -> int:
        if not ONE <= x < self.top:
            raise NotInDomain(f"{x} is not in [1, {self.top})")
        if self.successor:
            q, r = divmod_base(x, self.alpha.predecessor())
            q = int(q)
            return q + 1 if r.terms else q
        return self.ladder.first_at_least(x)


# the p_{i,j} system ------------------------------------------------------------


@dataclass(frozen=True)
class PieceDescriptor:
    family: str
    index: object
    blocks: tuple[Block, ...]

    def to_json(self) -> dict:
        index = list(self.index) if isinstance(self.index, tuple) else self.index
        return {"family": self.family, "index": index, "blocks": [b.as_pair() for b in self.blocks]}


class PijSystem:
    """Pieces ``I_1..I_k`` of ``[1, w^alpha)`` and maps ``p(i,j): I_i -> J_j``.

    ``J_j = [w^alpha*(j-1)+1, w^alpha*j)``.  Each ``I_i`` and ``J_j`` is a union
    of blocks indexed by ``n >= 1``; block ``n`` of ``I_i`` and block ``n`` of
    ``J_j`` have the same order type, and ``p(i,j)`` translates one onto the
    other.  Since every ``p(i,j)`` shares the block offset,
    ``p(w,j) o p(w,v)^-1 o p(i,v) = p(i,j)`` holds identically.
    """

    def __init__(self, alpha: OrdinalLike, k: int):
        self.alpha = _check_alpha(alpha)
        if k < 2:
            raise ValueError("k must be at least 2")
        self.k = k
        self.top = omega_pow(self.alpha)
        self.successor = self.alpha.is_successor()
        if self.successor:
            self.beta = self.alpha.predecessor()
            self.unit = omega_pow(self.beta)
        else:
            self.ladder = _ladder(self.alpha)

    # block geometry

    def length(self, n: int) -> Ordinal:
        return self.unit if self.successor else self.ladder.power(n)

    def i_block(self, i: int, n: int) -> Block:
        self._check(i, n)
        k = self.k
        if self.successor:
            return Block(mul(self.unit, Ordinal.of(k * n + i - 1)), self.unit)
        L = self.ladder.power(n)
        if i == 1:
            return Block(mul(self.ladder.power(n - 1), Ordinal.of(k)), L)
        return Block(add(mul(L, Ordinal.of(i - 1)), self.ladder.power(n - 1)), L)

    def j_block(self, j: int, n: int) -> Block:
        self._check(j, n)
        base = mul(self.top, Ordinal.of(j - 1))
        if self.successor:
            return Block(add(base, mul(self.unit, Ordinal.of(n - 1))), self.unit)
        if n == 1:
            return Block(base, self.ladder.power(1))
        return Block(add(base, self.ladder.power(n - 1)), self.ladder.power(n))

    def _check(self, i: int, n: int) -> None:
        if not 1 <= i <= self.k:
            raise UnknownPiece(f"piece index {i} outside 1..{self.k}")
        if n < 1:
            raise ValueError("blocks are numbered from 1")

    # location

    def locate_i(self, x: Ordinal) -> tuple[int, int] | None:
        """(i, n) with x in block n of I_i, or None."""
        if not ONE <= x < self.top:
            return None
        k = self.k
        if self.successor:
            q, r = divmod_base(x, self.beta)
            s = int(q) if r.terms else int(q) - 1
            if s < k:
                return None
            n, i0 = divmod(s, k)
            return i0 + 1, n
        n = least_index(lambda m: x <= mul(self.ladder.power(m), Ordinal.of(k)), 1)
        L = self.ladder.power(n)
        if x <= L:
            i = 1
        else:
            q, r = divmod_base(x, L.terms[0][0])
            i = int(q) + 1 if r.terms else int(q)
        return (i, n) if x in self.i_block(i, n) else None

    def locate_j(self, y: Ordinal) -> tuple[int, int] | None:
        """(j, n) with y in block n of J_j, or None."""
        if not ONE <= y < mul(self.top, Ordinal.of(self.k)):
            return None
        q, rest = divmod_base(y, self.alpha)
        if rest.is_zero():
            return None
        j = int(q) + 1
        if self.successor:
            q2, r2 = divmod_base(rest, self.beta)
            n = int(q2) if not r2.terms else int(q2) + 1
            return j, n
        return j, self.ladder.first_at_least(rest)

    def piece_of(self, x: Ordinal) -> int | None:
        hit = self.locate_i(x)
        return None if hit is None else hit[0]

    # maps

    def p(self, i: int, j: int) -> PiecewiseTranslationMap:
        self._check(i, 1)
        self._check(j, 1)

        def locate_source(x):
            hit = self.locate_i(x)
            if hit is None or hit[0] != i:
                raise NotInDomain(f"{x} is not in I_{i}")
            return hit[1]

        def locate_target(y):
            hit = self.locate_j(y)
            if hit is None or hit[0] != j:
                raise NotInDomain(f"{y} is not in J_{j}")
            return hit[1]

        def keys():
            n = 1
            while True:
                yield n
                n += 1

        return PiecewiseTranslationMap(
            f"p[{i},{j}]",
            locate_source,
            locate_target,
            lambda n: self.i_block(i, n),
            lambda n: self.j_block(j, n),
            keys,
            domain=f"I_{i}",
            codomain=f"[w^({self.alpha})*{j - 1}+1, w^({self.alpha})*{j})",
        )

    def pieces(self, depth: int = 4) -> list[PieceDescriptor]:
        return [
            PieceDescriptor("pij", i, tuple(self.i_block(i, n) for n in range(1, depth + 1)))
            for i in range(1, self.k + 1)
        ]

    def union_floor(self) -> Ordinal:
        """Least element of the union of the pieces."""
        return min(self.i_block(i, 1).lo for i in range(1, self.k + 1))


def build_pij_system(alpha: OrdinalLike, k: int) -> PijSystem:
    return PijSystem(alpha, k)


# splitting [1, w^alpha) into self-similar pieces ---------------------------------


class SplitFamily:
    """Partition of ``[1, w^alpha)`` into pieces ``I_1, I_2, ...`` (or exactly ``count`` of them).

    Piece ``p`` is the union of blocks ``(p, t)`` for ``t >= 1`` where block
    ``(p, t)`` has the order type of the unit block ``U_t`` of ``[1, w^alpha)``.
    With ``count=None`` the blocks follow the triangular layout in which block
    ``n+1`` holds ``I_(n+1-k)^(k+1)`` for ``k = 0..n``; with a finite count the
    pieces take turns, one block each per round.
    """

    def __init__(self, alpha: OrdinalLike, count: int | None = None):
        self.alpha = _check_alpha(alpha)
        if count is not None and count < 1:
            raise ValueError("count must be positive")
        self.count = count
        self.units = UnitBlocks(self.alpha)
        self.top = self.units.top
        self.successor = self.units.successor
        if not self.successor:
            self.ladder = self.units.ladder

    def _check_piece(self, p: int) -> None:
        if p < 1 or (self.count is not None and p > self.count):
            raise UnknownPiece(f"no piece with index {p}")

    def piece(self, p: int, t: int) -> Block:
        """The block I_p^t."""
        self._check_piece(p)
        if t < 1:
            raise ValueError("blocks are numbered from 1")
        L = self.units.length(t)
        if self.count is None:
            n, k = p + t - 2, t - 1
            if self.successor:
                return Block(mul(self.units.unit, Ordinal.of(n * (n + 1) // 2 + k)), L)
            if n == 0:
                return Block(ZERO, L)
            head = self.ladder.power(n)
            return Block(head if k == 0 else add(head, self.ladder.power(k)), L)
        N = self.count
        if self.successor:
            return Block(mul(self.units.unit, Ordinal.of((t - 1) * N + p - 1)), L)
        if p == 1:
            return Block(ZERO if t == 1 else mul(self.ladder.power(t - 1), Ordinal.of(N)), L)
        return Block(mul(L, Ordinal.of(p - 1)), L)

    def min_of(self, p: int) -> Ordinal:
        return self.piece(p, 1).lo

    def member(self, x: OrdinalLike) -> tuple[int, int]:
        """(p, t) with x in I_p^t."""
        x = ordinal(x)
        if not ONE <= x < self.top:
            raise NotInUnion(f"{x} is not in [1, {self.top})")
        if self.successor:
            q, r = divmod_base(x, self.alpha.predecessor())
            s = int(q) if r.terms else int(q) - 1
            if self.count is None:
                n = (isqrt(8 * s + 1) - 1) // 2
                k = s - n * (n + 1) // 2
                return n + 1 - k, k + 1
            t0, p0 = divmod(s, self.count)
            return p0 + 1, t0 + 1
        if self.count is None:
            m = self.ladder.first_at_least(x)
            n = m - 1
            if n == 0:
                return 1, 1
            rest = left_subtract(self.ladder.power(n), x)
            k = self.ladder.first_at_least(rest) - 1
            return n + 1 - k, k + 1
        N = self.count
        t = least_index(lambda m: x <= mul(self.ladder.power(m), Ordinal.of(N)), 1)
        L = self.ladder.power(t)
        if x <= L:
            return 1, t
        q, r = divmod_base(x, L.terms[0][0])
        return (int(q) + 1 if r.terms else int(q)), t

    def locate(self, x: OrdinalLike) -> tuple[int, int, Ordinal]:
        """(p, t, offset) with x = prefix(I_p^t) + offset."""
        x = ordinal(x)
        p, t = self.member(x)
        return p, t, self.piece(p, t).offset(x)

    def descriptor(self, p: int, depth: int = 4) -> PieceDescriptor:
        return PieceDescriptor(
            "split", p, tuple(self.piece(p, t) for t in range(1, depth + 1))
        )


def split_subintervals(alpha: OrdinalLike) -> SplitFamily:
    return SplitFamily(alpha, None)


def rho_homeomorphism(family: SplitFamily, p: int) -> PiecewiseTranslationMap:
    """Order isomorphism of [1, w^alpha] onto the closure of piece p, fixing w^alpha."""
    family._check_piece(p)
    units = family.units

    def locate_source(x):
        try:
            return units.locate(x)
        except NotInDomain:
            raise NotInDomain(f"{x} is not in [1, {units.top})") from None

    def locate_target(y):
        try:
            q, t = family.member(y)
        except NotInUnion as exc:
            raise NotInDomain(str(exc)) from None
        if q != p:
            raise NotInDomain(f"{y} is not in piece {p}")
        return t

    def keys():
        t = 1
        while True:
            yield t
            t += 1

    return PiecewiseTranslationMap(
        f"rho[{p}]",
        locate_source,
        locate_target,
        units.block,
        lambda t: family.piece(p, t),
        keys,
        fixed=(units.top,),
        domain=f"[1, {units.top}]",
        codomain=f"closure of piece {p}",
    )


# tuple coordinates ---------------------------------------------------------------


@dataclass(frozen=True)
class TupleTheta:
    """A coordinate tuple; ``top`` marks the distinguished extra point."""

    coords: tuple[Ordinal, ...]
    top: bool = False

    @property
    def length(self) -> int:
        return len(self.coords)

    def prefix(self, i: int) -> tuple[Ordinal, ...]:
        return self.coords[:i]

    def bumped(self, i: int) -> "TupleTheta":
        """(g_1, ..., g_{i-1}, g_i + 1)."""
        return TupleTheta(self.coords[: i - 1] + (add(self.coords[i - 1], ONE),))

    def __str__(self):
        if self.top:
            return "*"
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class ThetaSpace:
    """Tuple coordinates and the map rho for the power constructions.

    ``beta is None`` (power_only): points of ``[1, w^(alpha*n)]``; tuples of
    length 1..n with digits below ``w^alpha``, and the top point ``w^(alpha*n)``.
    Tuples of length l are sent by rho into the piece indexed by their
    length-(l-1) prefix (the empty prefix included).

    ``beta`` given (with_beta): points of ``[1, w^(alpha*n)*beta]`` plus an
    isolated extra point ``* = w^(alpha*n)*beta + 1``; tuples of length 1..n+1
    whose first digit lies in ``[0, beta]``.  Length-1 tuples go to
    ``w^alpha + g_1``; longer ones into the piece of their prefix.
    """

    def __init__(self, alpha: OrdinalLike, n: int, beta: OrdinalLike | None = None):
        self.alpha = _check_alpha(alpha)
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.beta = None if beta is None else ordinal(beta)
        if self.beta is not None and self.beta.is_zero():
            raise ValueError("beta must be at least 1")
        self.digit_bound = omega_pow(self.alpha)
        power = omega_pow(mul(self.alpha, Ordinal.of(n)))
        if self.beta is None:
            self.variant = "power_only"
            self.max_length = n
            self.top_point = power
            self.codomain_top = power
            self.domain_top = self.digit_bound
            self.prefixes = self._power_prefixes()
        else:
            self.variant = "with_beta"
            self.max_length = n + 1
            self.last = mul(power, self.beta)
            self.top_point = add(self.last, ONE)
            self.codomain_top = self.top_point
            self.domain_top = add(self.digit_bound, self.beta)
            self.prefixes = self._beta_prefixes()
        self.split = SplitFamily(self.alpha, self.prefixes.size)
        self.units = self.split.units

    def _power_prefixes(self) -> Enumeration:
        parts: list[Enumeration] = [Singleton(())]
        digit = PowerBelow(self.alpha)
        for length in range(1, self.n):
            parts.append(Product([digit] * length))
        return Union(parts)

    def _beta_prefixes(self) -> Enumeration:
        first = OrdinalsBelow(self.beta)
        digit = PowerBelow(self.alpha)
        parts = [Product([first] + [digit] * (length - 1)) for length in range(1, self.n + 1)]
        return Union(parts)

    # prefix <-> piece index

    def piece_of_prefix(self, prefix: tuple[Ordinal, ...]) -> int:
        tag = len(prefix) if self.beta is None else len(prefix) - 1
        if tag < 0 or tag >= len(self.prefixes.parts):
            raise UnknownPiece(f"no piece for prefix of length {len(prefix)}")
        return self.prefixes.encode((tag, prefix)) + 1

    def prefix_of_piece(self, p: int) -> tuple[Ordinal, ...]:
        _, prefix = self.prefixes.decode(p - 1)
        return tuple(prefix)

    # codec

    def encode(self, t: TupleTheta) -> Ordinal:
        if t.top:
            return self.top_point
        self.validate(t)
        return from_digits(t.coords, self.alpha, self.n, self.beta)

    def decode(self, y: OrdinalLike) -> TupleTheta:
        y = ordinal(y)
        if y == self.top_point:
            return TupleTheta((), top=True)
        if self.beta is None:
            digits, _ = digits_base(y, self.alpha, self.n)
        else:
            digits, _ = digits_base(y, self.alpha, self.n, self.beta)
        return TupleTheta(digits)

    def validate(self, t: TupleTheta) -> None:
        if t.top:
            return
        c = t.coords
        if not 1 <= len(c) <= self.max_length:
            raise OutOfRange(f"tuple length {len(c)} outside 1..{self.max_length}")
        if c[-1].is_zero():
            raise OutOfRange("last coordinate must be non-zero")
        rest = c
        if self.beta is not None:
            if c[0] > self.beta or (c[0] == self.beta and len(c) > 1):
                raise OutOfRange("first coordinate exceeds beta")
            rest = c[1:]
        if any(d >= self.digit_bound for d in rest):
            raise OutOfRange(f"coordinate not below {self.digit_bound}")

    # rho

    def rho(self, t: TupleTheta) -> Ordinal:
        if t.top:
            return self.digit_bound
        c = t.coords
        if self.beta is not None and len(c) == 1:
            return add(self.digit_bound, c[0])
        p = self.piece_of_prefix(c[:-1])
        last = c[-1]
        t_idx = self.units.locate(last)
        return self.split.piece(p, t_idx).at(self.units.block(t_idx).offset(last))

    def rho_inverse(self, x: OrdinalLike) -> TupleTheta:
        x = ordinal(x)
        if x == self.digit_bound:
            return TupleTheta((), top=True)
        if x > self.digit_bound:
            if self.beta is None or x > self.domain_top:
                raise OutOfRange(f"{x} is outside the domain [1, {self.domain_top}]")
            return TupleTheta((left_subtract(self.digit_bound, x),))
        if x.is_zero():
            raise OutOfRange("0 is outside the domain")
        p, t_idx, offset = self.split.locate(x)
        prefix = self.prefix_of_piece(p)
        return TupleTheta(prefix + (self.units.block(t_idx).at(offset),))

    def rho_piece(self, prefix: tuple[Ordinal, ...]) -> PiecewiseTranslationMap:
        return rho_homeomorphism(self.split, self.piece_of_prefix(prefix))


def tuple_codec(alpha: OrdinalLike, n: int, variant: str, value, beta: OrdinalLike | None = None):
    """Ordinal -> TupleTheta or TupleTheta -> Ordinal for the given variant."""
    if variant == "power_only":
        space = ThetaSpace(alpha, n)
    elif variant == "with_beta":
        if beta is None:
            raise ValueError("with_beta needs beta")
        space = ThetaSpace(alpha, n, beta)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if isinstance(value, TupleTheta):
        return space.encode(value)
    return space.decode(value)


__all__ = [
    "Block",
    "PiecewiseTranslationMap",
    "UnitBlocks",
    "PieceDescriptor",
    "PijSystem",
    "build_pij_system",
    "SplitFamily",
    "split_subintervals",
    "rho_homeomorphism",
    "TupleTheta",
    "ThetaSpace",
    "tuple_codec",
    "fundamental_sequence",
]
