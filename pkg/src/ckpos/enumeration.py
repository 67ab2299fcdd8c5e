"""Explicit bijections between countable sets and an initial segment of the naturals.

Every enumeration has a ``size`` (``None`` when infinite) and mutually inverse
``encode``/``decode``.  They compose: finite ranges, naturals, pairs, tagged
unions, finitely supported sequences, and ordinals below a bound.
"""

from __future__ import annotations

from math import isqrt
from typing import Any, Sequence

from .ordinal import ONE, ZERO, Ordinal, add, mul, omega_pow, left_subtract


class Enumeration:
    size: int | None = None

    def encode(self, x) -> int:
        raise NotImplementedError

    def decode(self, i: int):
        raise NotImplementedError

    @property
    def infinite(self) -> bool:
        return self.size is None

    def _check_index(self, i: int) -> None:
        if i < 0 or (self.size is not None and i >= self.size):
            raise IndexError(f"index {i} outside enumeration of size {self.size}")


class Naturals(Enumeration):
    def encode(self, x: int) -> int:
        if x < 0:
            raise ValueError("negative natural")
        return int(x)

    def decode(self, i: int) -> int:
        self._check_index(i)
        return i


class Range(Enumeration):
    """The integers 0..size-1."""

    def __init__(self, size: int):
        if size < 1:
            raise ValueError("empty range")
        self.size = size

    def encode(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise ValueError(f"{x} outside range({self.size})")
        return int(x)

    def decode(self, i: int) -> int:
        self._check_index(i)
        return i


class Singleton(Enumeration):
    size = 1

    def __init__(self, item):
        self.item = item

    def encode(self, x) -> int:
        if x != self.item:
            raise ValueError(f"{x!r} is not {self.item!r}")
        return 0

    def decode(self, i: int):
        self._check_index(i)
        return self.item


def cantor_pair(a: int, b: int) -> int:
    s = a + b
    return s * (s + 1) // 2 + b


def cantor_unpair(z: int) -> tuple[int, int]:
    s = (isqrt(8 * z + 1) - 1) // 2
    b = z - s * (s + 1) // 2
    return s - b, b


class Pair(Enumeration):
    def __init__(self, left: Enumeration, right: Enumeration):
        self.left, self.right = left, right
        if left.size is not None and right.size is not None:
            self.size = left.size * right.size

    def encode(self, x) -> int:
        a, b = self.left.encode(x[0]), self.right.encode(x[1])
        ls, rs = self.left.size, self.right.size
        if rs is not None:
            return a * rs + b
        if ls is not None:
            return b * ls + a
        return cantor_pair(a, b)

    def decode(self, i: int):
        self._check_index(i)
        ls, rs = self.left.size, self.right.size
        if rs is not None:
            a, b = divmod(i, rs)
        elif ls is not None:
            b, a = divmod(i, ls)
        else:
            a, b = cantor_unpair(i)
        return self.left.decode(a), self.right.decode(b)


class Product(Enumeration):
    """Tuples drawn from the given factors, built from nested pairs."""

    def __init__(self, factors: Sequence[Enumeration]):
        if not factors:
            raise ValueError("empty product")
        self.factors = list(factors)
        inner: Enumeration = self.factors[-1]
        for f in reversed(self.factors[:-1]):
            inner = Pair(f, inner)
        self._inner = inner
        self.size = inner.size

    def encode(self, x: Sequence) -> int:
        if len(x) != len(self.factors):
            raise ValueError(f"expected a {len(self.factors)}-tuple")
        nested: Any = x[-1]
        for item in reversed(x[:-1]):
            nested = (item, nested)
        return self._inner.encode(nested)

    def decode(self, i: int) -> tuple:
        nested = self._inner.decode(i)
        out = []
        for _ in range(len(self.factors) - 1):
            out.append(nested[0])
            nested = nested[1]
        out.append(nested)
        return tuple(out)


class Union(Enumeration):
    """Disjoint union; elements are ``(part_index, element)`` pairs.

    Finite parts are listed first, then the infinite parts are interleaved.
    """

    def __init__(self, parts: Sequence[Enumeration]):
        if not parts:
            raise ValueError("empty union")
        self.parts = list(parts)
        self._finite = [i for i, p in enumerate(self.parts) if p.size is not None]
        self._infinite = [i for i, p in enumerate(self.parts) if p.size is None]
        self._offsets = {}
        total = 0
        for i in self._finite:
            self._offsets[i] = total
            total += self.parts[i].size
        self._finite_total = total
        self.size = None if self._infinite else total

    def encode(self, x) -> int:
        tag, item = x
        code = self.parts[tag].encode(item)
        if tag in self._offsets:
            return self._offsets[tag] + code
        m = len(self._infinite)
        return self._finite_total + code * m + self._infinite.index(tag)

    def decode(self, i: int):
        self._check_index(i)
        if i < self._finite_total:
            for tag in self._finite:
                off = self._offsets[tag]
                if i < off + self.parts[tag].size:
                    return tag, self.parts[tag].decode(i - off)
        j = i - self._finite_total
        m = len(self._infinite)
        tag = self._infinite[j % m]
        return tag, self.parts[tag].decode(j // m)


class FiniteSupport(Enumeration):
    """Tuples of naturals whose last entry is non-zero (the empty tuple included).

    A non-empty tuple, after lowering its last entry by one, is read as the gaps
    between the set bits of a positive integer.
    """

    def encode(self, seq: Sequence[int]) -> int:
        seq = list(seq)
        if not seq:
            return 0
        if seq[-1] < 1 or min(seq) < 0:
            raise ValueError("last entry must be positive and all entries non-negative")
        seq[-1] -= 1
        code = 0
        pos = -1
        for a in seq:
            pos += a + 1
            code |= 1 << pos
        return code

    def decode(self, i: int) -> tuple[int, ...]:
        self._check_index(i)
        if i == 0:
            return ()
        out = []
        prev = -1
        pos = 0
        while i:
            if i & 1:
                out.append(pos - prev - 1)
                prev = pos
            i >>= 1
            pos += 1
        out[-1] += 1
        return tuple(out)


class PowerBelow(Enumeration):
    """Ordinals below omega**e for e >= 1."""

    def __init__(self, e: Ordinal):
        if e.is_zero():
            raise ValueError("need a positive exponent")
        self.e = e
        if e.is_finite():
            d = int(e)
            self._digits = d
            self._inner = Product([Naturals()] * d) if d > 1 else Naturals()
        else:
            self._digits = None
            self._exponents = OrdinalsBelow(e)
            self._inner = FiniteSupport()

    def encode(self, x: Ordinal) -> int:
        if x.terms and x.terms[0][0] >= self.e:
            raise ValueError(f"{x} is not below w^{self.e}")
        if self._digits is not None:
            coeffs = [0] * self._digits
            for ex, c in x.terms:
                coeffs[self._digits - 1 - int(ex)] = c
            return self._inner.encode(tuple(coeffs) if self._digits > 1 else coeffs[0])
        slots: dict[int, int] = {}
        for ex, c in x.terms:
            slots[self._exponents.encode(ex)] = c
        if not slots:
            return 0
        seq = [0] * (max(slots) + 1)
        for i, c in slots.items():
            seq[i] = c
        return self._inner.encode(seq)

    def decode(self, i: int) -> Ordinal:
        self._check_index(i)
        if self._digits is not None:
            coeffs = self._inner.decode(i)
            if self._digits == 1:
                coeffs = (coeffs,)
            terms = tuple(
                (Ordinal.of(self._digits - 1 - j), c) for j, c in enumerate(coeffs) if c
            )
            return Ordinal._raw(terms)
        seq = self._inner.decode(i)
        terms = [(self._exponents.decode(j), c) for j, c in enumerate(seq) if c]
        terms.sort(key=lambda t: t[0], reverse=True)
        return Ordinal._raw(tuple(terms))


class OrdinalsBelow(Enumeration):
    """Ordinals in [0, bound) for bound >= 1."""

    def __init__(self, bound: Ordinal):
        if bound.is_zero():
            raise ValueError("empty interval")
        self.bound = bound
        self._starts = []
        parts: list[Enumeration] = []
        start = ZERO
        for e, c in bound.terms:
            self._starts.append((start, e))
            if e.is_zero():
                parts.append(Range(c))
            else:
                parts.append(Pair(Range(c), PowerBelow(e)))
            start = add(start, mul(omega_pow(e), Ordinal.of(c)))
        self._union = Union(parts)
        self.size = self._union.size

    def encode(self, x: Ordinal) -> int:
        if not x < self.bound:
            raise ValueError(f"{x} is not below {self.bound}")
        for tag in range(len(self._starts) - 1, -1, -1):
            start, e = self._starts[tag]
            if x >= start:
                rest = left_subtract(start, x)
                if e.is_zero():
                    return self._union.encode((tag, int(rest)))
                block, within = _split_multiple(rest, e)
                return self._union.encode((tag, (block, within)))
        raise AssertionError("unreachable")

    def decode(self, i: int) -> Ordinal:
        tag, item = self._union.decode(i)
        start, e = self._starts[tag]
        if e.is_zero():
            return add(start, Ordinal.of(item))
        block, within = item
        return add(start, add(mul(omega_pow(e), Ordinal.of(block)), within))


def _split_multiple(x: Ordinal, e: Ordinal) -> tuple[int, Ordinal]:
    """x = w^e * j + y with y < w^e and j finite (x < w^e * omega)."""
    if x.terms and x.terms[0][0] == e:
        return x.terms[0][1], Ordinal._raw(x.terms[1:])
    return 0, x


__all__ = [
    "Enumeration",
    "Naturals",
    "Range",
    "Singleton",
    "Pair",
    "Product",
    "Union",
    "FiniteSupport",
    "PowerBelow",
    "OrdinalsBelow",
    "cantor_pair",
    "cantor_unpair",
    "ONE",
]
