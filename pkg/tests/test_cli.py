import json
import subprocess
import sys

import pytest

from ckpos.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ord(capsys):
    code, out, _ = run(capsys, "ord", "w+w")
    assert code == 0 and out.strip() == "w*2"


def test_ord_json(capsys):
    code, out, _ = run(capsys, "ord", "--json", "w^2+1")
    assert json.loads(out) == {"input": "w^2+1", "value": "w^2+1", "kind": "successor"}


def test_cb_and_height(capsys):
    assert run(capsys, "cb", "w^2*3", "2")[1].strip() == "{w^2, w^2*2, w^2*3}"
    code, out, _ = run(capsys, "height", "w^w*2")
    assert code == 0 and out.strip() == "height: w+1; points in last derivative: 2"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "w", "w*2")
    assert code == 0
    assert out.strip() == "homeomorphic: no; isomorphic: yes; positive both directions: yes"
    out = run(capsys, "classify", "w^2", "w")[1]
    assert "only w -> w^2" in out


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "w^w", "w^(w*2)")
    assert code == 0
    assert out.startswith("exact: 2+sqrt(5) (4.2360679775)")
    assert "citations:" in out


def test_distance_positive_json(capsys):
    code, out, _ = run(capsys, "distance", "--json", "--positive", "w", "w*2")
    data = json.loads(out)
    assert data["lower"]["symbolic"] == "3"
    assert data["upper"]["symbolic"] == "2+sqrt(3)"
    assert data["citations"] and "open per paper" in data["flags"]


def test_every_distance_answer_cites(capsys):
    for a, b in (("w", "w^w"), ("w^2", "w"), ("w*3", "w*3"), ("w^3", "w^2*5")):
        for extra in ([], ["--positive"], ["--positive", "--from", "b"]):
            code, out, _ = run(capsys, "distance", "--json", *extra, a, b)
            assert code == 0 and json.loads(out)["citations"]


def test_verify_omega2_passes(capsys):
    code, out, _ = run(capsys, "verify", "omega2", "--lambda", "1/2", "--samples", "1000", "--seed", "7")
    assert code == 0
    assert "all checks passed" in out


def test_verify_json_is_deterministic(capsys):
    args = ("verify", "tk", "alpha=w", "k=2", "--lambda", "1/2,1/2", "--samples", "100", "--seed", "3", "--json")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second
    data = json.loads(first)
    assert data["schema"] == 1 and data["passed"]


def test_construct_lists_regions(capsys):
    code, out, _ = run(capsys, "construct", "power", "--alpha", "1", "--n", "2", "--lambda", "1/2,1/2")
    assert code == 0
    assert "region len2" in out and "region top" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("ord", "w+*3"),
        ("classify", "3", "w"),
        ("verify", "tk", "k=2", "--lambda", "1/2,1/3"),
        ("verify", "tk", "k=1"),
        ("verify", "nosuch"),
        ("verify", "power", "n=2", "--lambda", "1/2"),
        ("distance", "w", "w*2", "--from", "b"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_syntax_error_shows_hint(capsys):
    _, _, err = run(capsys, "height", "w^^2")
    assert "^" in err and "hint:" in err


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "ckpos", "classify", "w", "w^w"], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip().startswith("homeomorphic: no; isomorphic: no")


def test_depth_cap_environment_applies_to_cli():
    env_run = subprocess.run(
        [sys.executable, "-m", "ckpos", "ord", "w^(w^w)"],
        capture_output=True, text=True, env={"CK_DEPTH_CAP": "3", "PATH": ""},
    )
    assert env_run.returncode == 2 and "depth" in env_run.stderr
