import json
from dataclasses import replace
from fractions import Fraction

import pytest

from ckpos.families import build_c0_c, build_omega2_family, build_power_iso, build_Tk
from ckpos.operators import perturb
from ckpos.verify import SCHEMA, verify_operator

HALF = Fraction(1, 2)


def test_omega2_third_passes_everything():
    T, S = build_omega2_family(Fraction(1, 3))
    report = verify_operator(T, S, samples=400, seed=1)
    assert report.passed, report.to_text()
    assert {c.name for c in report.checks} == {
        "positivity", "unitality", "left_inverse", "right_inverse", "norm_T", "norm_S", "continuity",
    }
    assert report.check("norm_S").witness["equal"] is True


def test_perturbed_inverse_fails_round_trip():
    T, S = build_omega2_family(HALF)
    report = verify_operator(T, perturb(S, "2n+1", 3, Fraction(1, 1000)), samples=400, seed=2)
    assert not report.passed
    failure = report.first_failure()
    assert failure.name == "left_inverse"
    assert failure.witness["region"] == "2n+1"


def test_power_iso_continuity_at_depth_64():
    T, S = build_power_iso(1, 2, (HALF, HALF))
    report = verify_operator(T, S, samples=400, seed=3, depth=64)
    assert report.check("continuity").status == "pass"


def test_discontinuous_operator_is_caught():
    T, S = build_omega2_family(HALF)
    # change the row at w only: T stays positive and unital but jumps at w
    jumpy = T.with_regions(
        [replace(r, weights=(Fraction(1, 4), Fraction(3, 4))) if r.name == "w" else r for r in T.regions],
        claimed=1,
    )
    report = verify_operator(jumpy, S, samples=400, seed=4)
    assert report.check("continuity").status == "fail"
    assert report.check("unitality").status == "pass"


def test_c0_skips_unitality():
    T, S = build_c0_c()
    report = verify_operator(T, S, samples=400, seed=5)
    assert report.passed
    assert report.check("unitality").status == "skip"
    assert report.positivity == {"T": True, "S": False}


def test_reports_are_deterministic():
    T, S = build_Tk(1, 3, (Fraction(1, 4), Fraction(1, 4), HALF))
    a = verify_operator(T, S, samples=200, seed=9).to_json()
    b = verify_operator(T, S, samples=200, seed=9).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["schema"] == SCHEMA and a["passed"] is True
    assert set(a["norms"]) >= {"T", "S", "distortion", "claimed"}
    assert "_pij" not in a["params"]


def test_claimed_norm_too_small_fails():
    T, S = build_omega2_family(HALF)
    report = verify_operator(T, replace(S, claimed_norm=4), samples=100, seed=6)
    assert report.check("norm_S").status == "fail"


def test_mismatched_pair_rejected():
    T, _ = build_omega2_family(HALF)
    _, S = build_c0_c()
    with pytest.raises(ValueError):
        verify_operator(T, S)
