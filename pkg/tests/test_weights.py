import random
import time
from fractions import Fraction

import pytest
import sympy as sp
from scipy.optimize import minimize_scalar

from oracles import min_C_golden
from ckpos.constants import c_exact, c_float, optimal_first_weight
from ckpos.errors import BadWeights, ToleranceNotMet
from ckpos.weights import check_simplex, numeric_min_C, objective, optimal_lambda, parse_weights, tk_lambda


def test_optimal_lambda_examples():
    lam, C = optimal_lambda(2)
    assert sp.simplify(lam[0] - (3 - sp.sqrt(5)) / 2) == 0
    assert sp.simplify(C - (2 + sp.sqrt(5))) == 0
    assert optimal_lambda(1) == ((1,), 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_objective_attains_constant(n):
    lam, C = optimal_lambda(n)
    assert sp.simplify(sum(lam) - 1) == 0
    assert sp.simplify(objective(lam) - C) == 0


@pytest.mark.parametrize("n", [2, 3, 12])
def test_numeric_min_against_scipy(n):
    def F(t):
        return max(2 / t - 1, 2 * (n - 1) / (1 - t) + 1)

    res = minimize_scalar(F, bounds=(1e-9, 1 - 1e-9), method="bounded", options={"xatol": 1e-13})
    assert abs(numeric_min_C(n, 1e-9) - res.fun) <= 1e-6
    assert abs(numeric_min_C(n, 1e-9) - min_C_golden(n)) <= 1e-6


def test_numeric_examples():
    assert abs(numeric_min_C(2, 1e-9) - 4.2360680) <= 1e-6
    assert abs(numeric_min_C(3, 1e-9) - 6.4641016) <= 1e-6
    values = [numeric_min_C(n, 1e-9) for n in range(2, 13)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_numeric_min_errors():
    with pytest.raises(ValueError):
        numeric_min_C(1)
    with pytest.raises(ToleranceNotMet):
        # near n = 1e9 adjacent floats at the crossing differ by about 2e-7
        numeric_min_C(10**9, tol=1e-9)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_optimal_lambda_minimises_objective(n):
    """F(lambda*) <= F(lambda) for 10^4 random points of the simplex."""
    best = float(optimal_lambda(n)[1])
    rng = random.Random(n)
    for _ in range(10_000):
        raw = [rng.random() + 1e-9 for _ in range(n)]
        s = sum(raw)
        lam = [x / s for x in raw]
        assert best <= max(2 / lam[0] - 1, *(2 / x + 1 for x in lam[1:])) + 1e-12


def test_first_weight_formula():
    for n in range(2, 10):
        x = optimal_first_weight(n)
        assert sp.simplify(2 / x - 1 - c_exact(n)) == 0
        assert abs(float(c_exact(n)) - c_float(n)) < 1e-12


def test_tk_lambda_puts_distinguished_weight_last():
    lam = tk_lambda(3)
    assert sp.simplify(lam[-1] - optimal_lambda(3)[0][0]) == 0


def test_simplex_validation():
    assert check_simplex(parse_weights("1/2,1/2"), 2) == (Fraction(1, 2), Fraction(1, 2))
    for bad, n in (("1/2,1/3", 2), ("1,0", 2), ("1/2,1/2", 3), ("-1/2,3/2", 2)):
        with pytest.raises(BadWeights):
            check_simplex(parse_weights(bad), n)
    with pytest.raises(BadWeights):
        parse_weights("a,,?")


def test_numeric_min_is_fast():
    start = time.perf_counter()
    for n in range(2, 13):
        numeric_min_C(n, 1e-9)
    assert time.perf_counter() - start < 1.0
