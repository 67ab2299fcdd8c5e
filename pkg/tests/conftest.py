import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ckpos.ordinal import Ordinal

settings.register_profile(
    "default",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def _terms_to_ordinal(raw) -> Ordinal:
    # raw: list of (exponent, coefficient); sort and merge into canonical order
    merged: dict = {}
    for e, c in raw:
        merged[e] = merged.get(e, 0) + c
    return Ordinal(sorted(merged.items(), key=lambda t: t[0], reverse=True))


def ordinals(max_depth: int = 2, max_terms: int = 3, max_coeff: int = 4):
    """Hypothesis strategy over CNF ordinals with bounded exponent nesting."""
    finite = st.integers(0, 6).map(Ordinal.of)
    if max_depth == 0:
        return finite
    exps = ordinals(max_depth - 1, max_terms, max_coeff)
    terms = st.lists(st.tuples(exps, st.integers(1, max_coeff)), max_size=max_terms)
    return terms.map(_terms_to_ordinal)


def below_omega_omega(max_terms: int = 4, max_coeff: int = 5):
    """Strategy over ordinals below w^w (integer exponents)."""
    terms = st.lists(
        st.tuples(st.integers(0, 5).map(Ordinal.of), st.integers(1, max_coeff)),
        max_size=max_terms,
    )
    return terms.map(_terms_to_ordinal)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
