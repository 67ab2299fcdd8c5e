import pytest
import sympy as sp
from hypothesis import given

from conftest import ordinals
from oracles import truncated_limits
from ckpos.catalog import OPEN_PER_PAPER, distance_bounds
from ckpos.constants import TWO_PLUS_SQRT3, TWO_PLUS_SQRT5, c_exact
from ckpos.errors import FiniteSpace, UnsupportedBase
from ckpos.ordinal import OMEGA, ONE, Ordinal, add, gamma, mul, omega_pow, parse
from ckpos.topology import ClosedInterval, cb_derivative, classify, height

P = parse
infinite = ordinals(max_depth=2).filter(lambda x: x >= OMEGA)


def test_derivative_examples():
    d = cb_derivative(P("w^2*3"), 2)
    assert d.elements() == [P("w^2"), P("w^2*2"), P("w^2*3")]
    assert cb_derivative(5, 1).is_empty()
    d1 = cb_derivative(P("w^2*3"), 1)
    assert d1.multiplier == OMEGA and d1.index_top == P("w*3")


def test_first_derivative_matches_brute_force():
    # [1, w*50] truncated to columns of height 60
    top_a, bound = 50, 60
    brute = truncated_limits(top_a, bound)
    d = cb_derivative(mul(OMEGA, Ordinal.of(top_a)), 1)
    model = {(a, b) for a in range(top_a + 1) for b in range(bound) if (a, b) != (0, 0)}
    for a, b in model:
        x = add(mul(OMEGA, Ordinal.of(a)), Ordinal.of(b))
        assert (x in d) == ((a, b) in brute)


def test_first_derivative_of_big_space_restricted():
    d = cb_derivative(P("w^2*3"), 1)
    brute = truncated_limits(50, 60)
    for a in range(51):
        for b in range(3):
            x = add(mul(OMEGA, Ordinal.of(a)), Ordinal.of(b))
            if x.is_zero():
                continue
            assert (x in d) == ((a, b) in brute)


def test_finite_models_have_no_limit_points():
    for n in range(1, 30):
        assert cb_derivative(n, 1).is_empty()
        assert height(n) == (ONE, n)


def test_height_examples():
    assert height(P("w^w*2")) == (P("w+1"), 2)
    assert height(7) == (ONE, 7)
    assert height(P("w^2*3+w")) == (Ordinal.of(3), 3)


def test_height_by_iterated_derivative():
    K = P("w^2*3+w")
    once = cb_derivative(K, 1)
    twice = once.derive(1)
    assert twice.count() == 3
    assert twice.derive(1).is_empty()


def test_unsupported_base():
    with pytest.raises(UnsupportedBase):
        cb_derivative(ClosedInterval(Ordinal.of(2), OMEGA), 1)
    with pytest.raises(UnsupportedBase):
        height(ClosedInterval(Ordinal.of(2), OMEGA))


@given(ordinals(max_depth=2).filter(lambda x: not x.is_zero()), ordinals(max_depth=1), ordinals(max_depth=1))
def test_derivatives_nested(hi, b1, b2):
    lo, hi_b = (b1, b2) if b1 <= b2 else (b2, b1)
    small, big = cb_derivative(hi, hi_b), cb_derivative(hi, lo)
    if not small.is_empty():
        first, last = small.multiplier, mul(small.multiplier, small.index_top)
        assert first in small and last in small
        assert first in big and last in big


@given(ordinals(max_depth=2).filter(lambda x: not x.is_zero()))
def test_height_is_successor(hi):
    h, n = height(hi)
    assert h.is_successor() and n >= 1
    # the last non-empty derivative has exactly n points and the next one is empty
    last = cb_derivative(hi, h.predecessor())
    assert last.count() == n
    assert cb_derivative(hi, h).is_empty()


def test_classify_examples():
    c = classify(OMEGA, P("w*2"))
    assert (c.homeo, c.iso, c.pos_iso_a_to_b, c.pos_iso_b_to_a) == (False, True, True, True)
    c = classify(OMEGA, P("w^w"))
    assert not c.iso and not c.pos_iso_a_to_b and not c.pos_iso_b_to_a
    assert classify(P("w^2*3+w"), P("w^2*3")).homeo
    with pytest.raises(FiniteSpace):
        classify(5, OMEGA)


@given(infinite, infinite)
def test_classify_implications(a, b):
    c = classify(a, b)
    if c.homeo:
        assert c.iso
    if c.iso:
        assert c.pos_iso_a_to_b or c.pos_iso_b_to_a
    assert (c.pos_iso_a_to_b and c.pos_iso_b_to_a) == (height(a)[0] == height(b)[0])
    assert c.iso == (gamma(height(a)[0]) == gamma(height(b)[0]))


def test_distance_examples():
    d = distance_bounds(P("w^w"), P("w^(w*2)"), "classical")
    assert d.exact is not None and sp.simplify(d.exact - TWO_PLUS_SQRT5) == 0
    assert abs(float(d.exact) - 4.2360680) < 1e-7
    d = distance_bounds(OMEGA, P("w*2"), "positive_directed")
    assert d.lower == 3 and sp.simplify(d.upper - TWO_PLUS_SQRT3) == 0
    assert d.exact is None and OPEN_PER_PAPER in d.flags
    d = distance_bounds(P("w^2"), OMEGA, "positive_directed")
    assert d.lower == sp.oo and d.upper == sp.oo


@given(infinite, infinite)
def test_distance_invariants(a, b):
    sym = distance_bounds(a, b, "classical")
    assert bool(sym.lower <= sym.upper)
    assert sym.citations
    other = distance_bounds(b, a, "classical")
    assert (sym.lower, sym.upper) == (other.lower, other.upper)
    assert sym.finite == classify(a, b).iso
    pos = distance_bounds(a, b, "positive_directed")
    assert bool(pos.lower <= pos.upper) and pos.citations
    assert pos.finite == classify(a, b).pos_iso_a_to_b
    if pos.finite:
        # positive isomorphisms are isomorphisms
        assert bool(sym.upper <= pos.upper) and bool(sym.lower <= pos.upper)


@pytest.mark.parametrize("n", range(2, 7))
def test_exact_values_for_powers(n):
    a = P("w^w")
    b = omega_pow(mul(OMEGA, Ordinal.of(n)))
    assert sp.simplify(distance_bounds(a, b).exact - c_exact(n)) == 0
