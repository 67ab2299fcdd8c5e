import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ckpos.enumeration import (
    FiniteSupport,
    Naturals,
    OrdinalsBelow,
    Pair,
    PowerBelow,
    Product,
    Range,
    Singleton,
    Union,
    cantor_pair,
    cantor_unpair,
)
from ckpos.ordinal import parse
from ckpos.sampling import random_below

P = parse


@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_cantor_pairing(a, b):
    assert cantor_unpair(cantor_pair(a, b)) == (a, b)


@given(st.integers(0, 10**9))
def test_cantor_unpairing(z):
    assert cantor_pair(*cantor_unpair(z)) == z


def test_indices_are_consecutive():
    enum = Union([Singleton(()), Product([Range(3), Naturals()]), Product([Naturals(), Naturals()])])
    seen = {enum.decode(i) for i in range(500)}
    assert len(seen) == 500
    for i in range(500):
        assert enum.encode(enum.decode(i)) == i


@pytest.mark.parametrize(
    "enum",
    [
        Pair(Range(4), Naturals()),
        Pair(Naturals(), Range(2)),
        Product([Naturals(), Range(5), Naturals()]),
        FiniteSupport(),
        PowerBelow(P("1")),
        PowerBelow(P("3")),
        PowerBelow(P("w")),
        PowerBelow(P("w+2")),
        OrdinalsBelow(P("5")),
        OrdinalsBelow(P("w*2+3")),
        OrdinalsBelow(P("w^w")),
    ],
    ids=lambda e: type(e).__name__,
)
def test_decode_then_encode(enum):
    limit = 500 if enum.size is None else enum.size
    for i in range(limit):
        assert enum.encode(enum.decode(i)) == i


@pytest.mark.parametrize("bound", ["w", "w^2", "w^3*2+w", "w^w", "w^(w+1)", "w^(w*2)"])
def test_ordinals_below_encode_then_decode(bound):
    rng = random.Random(5)
    top = P(bound)
    enum = OrdinalsBelow(top)
    for _ in range(2000):
        x = random_below(rng, top)
        assert enum.decode(enum.encode(x)) == x


def test_finite_enumerations_report_size():
    assert OrdinalsBelow(P("5")).size == 5
    assert Product([Range(2), Range(3)]).size == 6
    assert Naturals().infinite
    with pytest.raises(IndexError):
        Range(3).decode(3)
