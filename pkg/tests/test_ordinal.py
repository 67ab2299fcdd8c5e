import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import below_omega_omega, ordinals
from oracles import poly_add, poly_cmp, poly_from, poly_mul, poly_to
from ckpos.errors import (
    DepthCapExceeded,
    NotLimit,
    OrdinalSyntaxError,
    OutOfRange,
    SubtractUnderflow,
    ZeroInput,
)
from ckpos.ordinal import (
    OMEGA,
    ONE,
    ZERO,
    Cmp,
    Ordinal,
    add,
    arith,
    compare,
    digits_base,
    divmod_base,
    format_ordinal,
    from_digits,
    fundamental_sequence,
    gamma,
    left_subtract,
    mul,
    omega_pow,
    parse,
    set_depth_cap,
)
from ckpos.sampling import random_below

W = OMEGA
P = parse


# fixed examples -------------------------------------------------------------------


def test_add_absorbs_lower_term():
    assert arith(1, W, "add") == W


def test_mul_is_not_commutative():
    assert arith(W, 2, "mul") == P("w*2")
    assert arith(2, W, "mul") == W


def test_left_subtract_example():
    d = arith(P("w^2"), P("w^2*3+w"), "left_subtract")
    assert d == P("w^2*2+w")
    assert add(P("w^2"), d) == P("w^2*3+w")


def test_left_subtract_underflow():
    with pytest.raises(SubtractUnderflow):
        left_subtract(P("w+1"), W)


def test_omega_pow_of_b_ignores_a():
    assert arith(17, P("w+1"), "omega_pow_of_b") == P("w^(w+1)")


@pytest.mark.parametrize(
    "a, b, expected",
    [("w", "w", Cmp.EQUAL), ("w*2+1", "w^2", Cmp.LESS), ("w^w", "w^3*9", Cmp.GREATER)],
)
def test_compare_examples(a, b, expected):
    assert compare(P(a), P(b)) == expected


@pytest.mark.parametrize("a, expected", [("w^w", "w^w"), ("5", "w"), ("w^2*3", "w^3"), ("1", "1")])
def test_gamma_examples(a, expected):
    assert gamma(P(a)) == P(expected)


def test_gamma_zero():
    with pytest.raises(ZeroInput):
        gamma(0)


def test_divmod_examples():
    assert divmod_base(P("w^2*3+w*2+5"), 2) == (Ordinal.of(3), P("w*2+5"))
    assert divmod_base(7, 1) == (ZERO, Ordinal.of(7))


def test_divmod_high_exponent_reconstructs():
    y = P("w^(w+1)*2+w^w")
    q, r = divmod_base(y, W)
    assert (q, r) == (P("w*2+1"), ZERO)
    assert add(mul(omega_pow(W), q), r) == y


def test_digits_examples():
    assert digits_base(P("w^2*2+w"), 1, 3) == ((Ordinal.of(2), ONE), 2)
    assert from_digits((2, 1), 1, 3) == P("w^2*2+w")
    assert digits_base(1, 1, 3) == ((ZERO, ZERO, ONE), 3)
    beta = P("w+3")
    top = mul(omega_pow(Ordinal.of(3)), beta)
    assert digits_base(top, 1, 3, beta) == ((beta,), 1)


def test_digits_out_of_range():
    with pytest.raises(OutOfRange):
        digits_base(P("w^3"), 1, 3)
    with pytest.raises(OutOfRange):
        digits_base(0, 1, 3)
    with pytest.raises(OutOfRange):
        digits_base(P("w^3*2+1"), 1, 3, 2)


def test_parse_and_format():
    x = P("w^(w^2*3+1)*5+w*2+7")
    assert x.terms[0][0] == add(mul(omega_pow(Ordinal.of(2)), Ordinal.of(3)), ONE)
    assert format_ordinal(x) == "w^(w^2*3+1)*5+w*2+7"
    assert format_ordinal(ZERO) == "0"
    assert format_ordinal(P("w+w")) == "w*2"


@pytest.mark.parametrize("bad", ["", "w^", "01", "w**2", "w+", "(w)", "w*0x", "w^(w"])
def test_parse_rejects(bad):
    with pytest.raises(OrdinalSyntaxError):
        P(bad)


def test_syntax_error_has_position():
    with pytest.raises(OrdinalSyntaxError) as info:
        P("w+*3")
    assert info.value.pos == 2


def test_fundamental_sequence_examples():
    assert [fundamental_sequence(W, m) for m in range(4)] == [Ordinal.of(m) for m in range(4)]
    assert fundamental_sequence(P("w^2"), 5) == P("w*5")
    assert fundamental_sequence(P("w^w"), 4) == P("w^4")
    with pytest.raises(NotLimit):
        fundamental_sequence(P("w+1"), 2)


def test_depth_cap():
    # 1 has depth 1, w depth 2, w^w depth 3
    previous = set_depth_cap(4)
    try:
        P("w^(w^w)")
        with pytest.raises(DepthCapExceeded):
            P("w^(w^(w^w))")
    finally:
        set_depth_cap(previous)


def test_depth_cap_from_environment():
    code = "from ckpos.ordinal import depth_cap; print(depth_cap())"
    env = dict(os.environ, CK_DEPTH_CAP="5")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "5"


def test_non_canonical_construction_rejected():
    with pytest.raises(ValueError):
        Ordinal([(ONE, 1), (Ordinal.of(2), 1)])
    with pytest.raises(ValueError):
        Ordinal([(ONE, 0)])


# algebraic laws -------------------------------------------------------------------


@given(ordinals(), ordinals(), ordinals())
def test_add_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@given(ordinals(), ordinals(), ordinals())
def test_left_distributive(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(ordinals(), ordinals(), ordinals())
def test_mul_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(ordinals(), ordinals())
def test_add_monotone(a, b):
    assert a <= add(a, b)
    assert b <= add(a, b)


@given(ordinals(), ordinals())
def test_left_subtract_inverts_add(a, b):
    assert left_subtract(a, add(a, b)) == b


@given(below_omega_omega(), below_omega_omega())
def test_arithmetic_matches_polynomial_oracle(a, b):
    pa, pb = poly_from(a), poly_from(b)
    assert add(a, b) == poly_to(poly_add(pa, pb))
    assert mul(a, b) == poly_to(poly_mul(pa, pb))
    assert int(compare(a, b)) == poly_cmp(pa, pb)


@given(ordinals(), ordinals(), ordinals())
def test_compare_total_order(a, b, c):
    ab, ba = compare(a, b), compare(b, a)
    assert int(ab) == -int(ba)
    assert (ab == Cmp.EQUAL) == (a == b)
    if a <= b and b <= c:
        assert a <= c


@given(ordinals().filter(lambda x: not x.is_zero()))
def test_gamma_properties(a):
    g = gamma(a)
    assert g >= a
    assert g.is_omega_power()
    # the only smaller candidate is w^e with e the exponent just below
    e = g.leading_exponent
    if not e.is_zero() and e.is_successor():
        assert omega_pow(e.predecessor()) < a


@given(ordinals(), ordinals(max_depth=1))
def test_divmod_reconstruction(y, beta):
    q, r = divmod_base(y, beta)
    assert add(mul(omega_pow(beta), q), r) == y
    assert r < omega_pow(beta)


@given(ordinals(max_depth=3))
def test_format_parse_round_trip(x):
    text = format_ordinal(x)
    assert P(text) == x
    assert format_ordinal(P(text)) == text


@given(ordinals().filter(lambda x: x.is_limit()), st.integers(0, 30))
def test_fundamental_sequence_increasing(g, m):
    a, b = fundamental_sequence(g, m), fundamental_sequence(g, m + 1)
    assert a < b < g


# seeded bulk checks ---------------------------------------------------------------

DIGIT_GRID = [(ONE, 2), (ONE, 3), (Ordinal.of(2), 2), (W, 2), (P("w+1"), 2)]


@pytest.mark.parametrize("alpha, n", DIGIT_GRID, ids=lambda v: str(v))
def test_digits_round_trip_bulk(alpha, n):
    rng = random.Random(11)
    top = omega_pow(mul(alpha, Ordinal.of(n)))
    for _ in range(10_000):
        y = add(random_below(rng, top), ONE)
        digits, k = digits_base(y, alpha, n)
        assert len(digits) == k and not digits[-1].is_zero()
        assert all(d < omega_pow(alpha) for d in digits)
        assert from_digits(digits, alpha, n) == y


@pytest.mark.parametrize("alpha, n, beta", [(ONE, 2, P("w+2")), (Ordinal.of(2), 1, Ordinal.of(3)), (W, 2, W)])
def test_digits_with_beta_round_trip_bulk(alpha, n, beta):
    rng = random.Random(12)
    top = mul(omega_pow(mul(alpha, Ordinal.of(n))), beta)
    for _ in range(10_000):
        y = add(random_below(rng, top), ONE)
        digits, k = digits_base(y, alpha, n, beta)
        assert from_digits(digits, alpha, n, beta) == y


def test_divmod_bulk():
    rng = random.Random(13)
    top = P("w^(w*2)")
    betas = [ZERO, ONE, Ordinal.of(3), W, P("w+2"), P("w*2")]
    for i in range(10_000):
        y = random_below(rng, top)
        beta = betas[i % len(betas)]
        q, r = divmod_base(y, beta)
        assert add(mul(omega_pow(beta), q), r) == y and r < omega_pow(beta)
