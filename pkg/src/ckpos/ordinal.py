"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` stores a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents and positive integer coefficients; the empty
tuple is zero.  Because the representation is canonical, equality, hashing and
ordering all reduce to plain tuple operations on ``terms``.

>>> w = OMEGA
>>> str(w * 2 + 1)
'w*2+1'
>>> str(1 + w)
'w'
>>> str(parse("w^(w^2*3+1)*5+w*2+7"))
'w^(w^2*3+1)*5+w*2+7'
"""

from __future__ import annotations

import os
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import (
    DepthCapExceeded,
    NotLimit,
    OrdinalSyntaxError,
    OutOfRange,
    SubtractUnderflow,
    ZeroInput,
)

DEFAULT_DEPTH_CAP = 32


def _cap_from_env() -> int:
    raw = os.environ.get("CK_DEPTH_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_DEPTH_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CK_DEPTH_CAP must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"CK_DEPTH_CAP must be a positive integer, got {raw!r}")
    return cap


_depth_cap = _cap_from_env()


def depth_cap() -> int:
    return _depth_cap


def set_depth_cap(cap: int) -> int:
    """Change the exponent nesting cap and return the previous value."""
    global _depth_cap
    if cap < 1:
        raise ValueError("depth cap must be positive")
    previous, _depth_cap = _depth_cap, cap
    return previous


class Ordinal:
    __slots__ = ("terms", "depth", "_hash")

    terms: tuple
    depth: int

    def __init__(self, terms: Iterable[tuple["Ordinal", int]] = ()):
        terms = tuple((_coerce(e), int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError(f"coefficient must be positive, got {c}")
            if i and not e < terms[i - 1][0]:
                raise ValueError("exponents must be strictly decreasing")
        self._set(terms)

    def _set(self, terms: tuple) -> None:
        depth = 1 + max(e.depth for e, _ in terms) if terms else 0
        if depth > _depth_cap:
            raise DepthCapExceeded(f"exponent nesting depth {depth} exceeds cap {_depth_cap}")
        self.terms = terms
        self.depth = depth
        # finite ordinals hash like the ints they compare equal to
        if not terms:
            self._hash = 0
        elif len(terms) == 1 and not terms[0][0].terms:
            self._hash = hash(terms[0][1])
        else:
            self._hash = hash(terms)

    @classmethod
    def _raw(cls, terms: tuple) -> "Ordinal":
        # trusted constructor: terms already canonical
        obj = object.__new__(cls)
        obj._set(terms)
        return obj

    @staticmethod
    def of(n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n < len(_SMALL):
            return _SMALL[n]
        return Ordinal._raw(((ZERO, n),))

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def is_successor(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].terms

    def is_limit(self) -> bool:
        return bool(self.terms) and bool(self.terms[-1][0].terms)

    def is_omega_power(self) -> bool:
        return len(self.terms) == 1 and self.terms[0][1] == 1

    @property
    def leading_exponent(self) -> "Ordinal":
        if not self.terms:
            raise ZeroInput("zero has no leading term")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ZeroInput("zero has no leading term")
        return self.terms[0][1]

    def predecessor(self) -> "Ordinal":
        if not self.is_successor():
            raise ValueError(f"{self} has no predecessor")
        e, c = self.terms[-1]
        return Ordinal._raw(self.terms[:-1] + (((e, c - 1),) if c > 1 else ()))

    # comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Ordinal):
            return self._hash == other._hash and self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.is_finite() and int(self) == other
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else self.terms < other.terms

    def __le__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else self.terms <= other.terms

    def __gt__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else self.terms > other.terms

    def __ge__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else self.terms >= other.terms

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else add(self, other)

    def __radd__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else add(other, self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else mul(self, other)

    def __rmul__(self, other):
        other = _coerce_or_none(other)
        return NotImplemented if other is None else mul(other, self)

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __index__(self):
        return int(self)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"

    def __reduce__(self):
        return (parse, (format_ordinal(self),))


OrdinalLike = Union[Ordinal, int, str]

ZERO = Ordinal._raw(())
_SMALL: list[Ordinal] = [ZERO]
_SMALL.extend(Ordinal._raw(((ZERO, n),)) for n in range(1, 257))
ONE = _SMALL[1]
OMEGA = Ordinal._raw(((ONE, 1),))


def _coerce(x) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.of(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


def _coerce_or_none(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool) and x >= 0:
        return Ordinal.of(x)
    return None


def ordinal(x: OrdinalLike) -> Ordinal:
    """Accept an Ordinal, a non-negative int, or ordinal text."""
    return _coerce(x)


# core arithmetic ------------------------------------------------------------


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    if not a.terms:
        return b
    e, c = b.terms[0]
    kept = []
    for ea, ca in a.terms:
        if ea > e:
            kept.append((ea, ca))
        else:
            if ea == e:
                c += ca
            break
    return Ordinal._raw(tuple(kept) + ((e, c),) + b.terms[1:])


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    lead_e, lead_c = a.terms[0]
    out: list = []
    for e, c in b.terms:
        if e.terms:
            out.append((add(lead_e, e), c))
        else:
            out.append((lead_e, lead_c * c))
            out.extend(a.terms[1:])
    return Ordinal._raw(tuple(out))


@lru_cache(maxsize=4096)
def omega_pow(x: Ordinal) -> Ordinal:
    """Return omega**x."""
    return Ordinal._raw(((_coerce(x), 1),))


def left_subtract(a: Ordinal, b: Ordinal) -> Ordinal:
    """Return the unique d with a + d == b; requires a <= b."""
    if a == b:
        return ZERO
    if a > b:
        raise SubtractUnderflow(f"{a} exceeds {b}")
    at, bt = a.terms, b.terms
    i = 0
    while i < len(at) and at[i] == bt[i]:
        i += 1
    if i == len(at):
        return Ordinal._raw(bt[i:])
    ea, ca = at[i]
    eb, cb = bt[i]
    if eb > ea:
        return Ordinal._raw(bt[i:])
    # same exponent, larger coefficient in b
    return Ordinal._raw(((eb, cb - ca),) + bt[i + 1:])


class Cmp(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare(a: OrdinalLike, b: OrdinalLike) -> Cmp:
    a, b = _coerce(a), _coerce(b)
    if a.terms == b.terms:
        return Cmp.EQUAL
    return Cmp.LESS if a.terms < b.terms else Cmp.GREATER


def arith(a: OrdinalLike, b: OrdinalLike, op: str) -> Ordinal:
    """Dispatch one of ``add``, ``mul``, ``omega_pow_of_b`` or ``left_subtract``."""
    a, b = _coerce(a), _coerce(b)
    if op == "add":
        return add(a, b)
    if op == "mul":
        return mul(a, b)
    if op == "omega_pow_of_b":
        return omega_pow(b)
    if op == "left_subtract":
        return left_subtract(a, b)
    raise ValueError(f"unknown operation {op!r}")


def gamma(a: OrdinalLike) -> Ordinal:
    """Least power of omega that is >= a."""
    a = _coerce(a)
    if not a.terms:
        raise ZeroInput("gamma is undefined at 0")
    if a.is_omega_power():
        return a
    return omega_pow(add(a.terms[0][0], ONE))


def divmod_base(y: OrdinalLike, beta: OrdinalLike) -> tuple[Ordinal, Ordinal]:
    """Split ``y = omega**beta * q + r`` with ``r < omega**beta``."""
    y, beta = _coerce(y), _coerce(beta)
    q_terms = []
    r_terms = []
    for e, c in y.terms:
        if e >= beta:
            q_terms.append((left_subtract(beta, e), c))
        else:
            r_terms.append((e, c))
    return Ordinal._raw(tuple(q_terms)), Ordinal._raw(tuple(r_terms))


def _digit_exponents(alpha: Ordinal, count: int, top: int) -> list[Ordinal]:
    return [mul(alpha, Ordinal.of(top - i)) for i in range(count)]


def digits_base(
    y: OrdinalLike, alpha: OrdinalLike, n: int, beta: OrdinalLike | None = None
) -> tuple[tuple[Ordinal, ...], int]:
    """Base-omega**alpha digits of ``y``.

    Without ``beta``: ``1 <= y < omega**(alpha*n)`` and
    ``y = sum_{i<=k} omega**(alpha*(n-i)) * g_i`` with every digit below
    ``omega**alpha``.  With ``beta``: ``1 <= y <= omega**(alpha*n) * beta`` and
    ``y = sum_{i<=k} omega**(alpha*(n-i+1)) * g_i`` where ``k <= n+1`` and the
    first digit lies in ``[0, beta]``.  The last returned digit is never zero.
    """
    y, alpha = _coerce(y), _coerce(alpha)
    if n < 1 or not alpha.terms:
        raise OutOfRange("need alpha >= 1 and n >= 1")
    if not y.terms:
        raise OutOfRange("y must be at least 1")
    if beta is None:
        if y >= omega_pow(mul(alpha, Ordinal.of(n))):
            raise OutOfRange(f"{y} is not below w^({alpha}*{n})")
        exps = _digit_exponents(alpha, n, n - 1)
    else:
        beta = _coerce(beta)
        if not beta.terms:
            raise OutOfRange("beta must be at least 1")
        if y > mul(omega_pow(mul(alpha, Ordinal.of(n))), beta):
            raise OutOfRange(f"{y} exceeds w^({alpha}*{n})*{beta}")
        exps = _digit_exponents(alpha, n + 1, n)
    digits = []
    rest = y
    for e in exps:
        q, rest = divmod_base(rest, e)
        digits.append(q)
    k = max(i for i, d in enumerate(digits) if d.terms) + 1
    return tuple(digits[:k]), k


def from_digits(
    digits: Sequence[OrdinalLike], alpha: OrdinalLike, n: int, beta: OrdinalLike | None = None
) -> Ordinal:
    """Inverse of :func:`digits_base`; validates digit ranges."""
    alpha = _coerce(alpha)
    digits = [_coerce(d) for d in digits]
    k = len(digits)
    bound = omega_pow(alpha)
    if beta is None:
        if not 1 <= k <= n:
            raise OutOfRange(f"expected between 1 and {n} digits")
        exps = _digit_exponents(alpha, k, n - 1)
        lows = digits
    else:
        beta = _coerce(beta)
        if not 1 <= k <= n + 1:
            raise OutOfRange(f"expected between 1 and {n + 1} digits")
        exps = _digit_exponents(alpha, k, n)
        first = digits[0]
        if first > beta or (first == beta and any(d.terms for d in digits[1:])):
            raise OutOfRange("leading digit exceeds beta")
        lows = digits[1:]
    if any(d >= bound for d in lows):
        raise OutOfRange(f"digit not below w^{alpha}")
    if not digits[-1].terms:
        raise OutOfRange("last digit must be non-zero")
    total = ZERO
    for e, d in zip(exps, digits):
        total = add(total, mul(omega_pow(e), d))
    return total


def fundamental_sequence(g: OrdinalLike, m: int) -> Ordinal:
    """Canonical m-th element of the fundamental sequence of a limit ordinal."""
    g = _coerce(g)
    if not g.is_limit():
        raise NotLimit(f"{g} is not a limit ordinal")
    if m < 0:
        raise ValueError("index must be non-negative")
    e, c = g.terms[-1]
    head = Ordinal._raw(g.terms[:-1] + (((e, c - 1),) if c > 1 else ()))
    if e.is_successor():
        return add(head, mul(omega_pow(e.predecessor()), Ordinal.of(m)))
    return add(head, omega_pow(fundamental_sequence(e, m)))


# text form ------------------------------------------------------------------


def format_ordinal(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
            continue
        if e == ONE:
            s = "w"
        elif e.is_finite():
            s = f"w^{int(e)}"
        elif e == OMEGA:
            s = "w^w"
        else:
            s = f"w^({format_ordinal(e)})"
        if c != 1:
            s += f"*{c}"
        parts.append(s)
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, pos: int | None = None):
        raise OrdinalSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits:
            self.fail("expected a natural number")
        if len(digits) > 1 and digits[0] == "0":
            self.fail("leading zeros are not allowed", start)
        return int(digits)

    def omega(self) -> bool:
        ch = self.peek()
        if ch in ("w", "ω"):
            self.pos += 1
            return True
        return False

    def ord(self) -> Ordinal:
        total = self.term()
        while self.eat("+"):
            total = add(total, self.term())
        return total

    def term(self) -> Ordinal:
        if self.omega():
            exponent = ONE
            if self.eat("^"):
                exponent = self.factor()
            coeff = 1
            if self.eat("*"):
                coeff = self.nat()
            return mul(omega_pow(exponent), Ordinal.of(coeff))
        if self.peek().isdigit():
            return Ordinal.of(self.nat())
        self.fail("expected 'w' or a natural number")

    def factor(self) -> Ordinal:
        if self.omega():
            return OMEGA
        if self.eat("("):
            inner = self.ord()
            if not self.eat(")"):
                self.fail("expected ')'")
            return inner
        if self.peek().isdigit():
            return Ordinal.of(self.nat())
        self.fail("expected a natural number, 'w' or '(' after '^'")


def parse(text: str) -> Ordinal:
    """Parse ordinal text such as ``w^(w+1)*3+w*2+7``."""
    p = _Parser(text)
    if not p.peek():
        p.fail("empty ordinal expression")
    value = p.ord()
    if p.peek():
        p.fail(f"unexpected character {p.peek()!r}")
    return value
