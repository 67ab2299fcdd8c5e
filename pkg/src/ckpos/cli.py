"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import sympy as sp

from .catalog import distance_bounds
from .errors import BadWeights, CkError, OrdinalSyntaxError
from .families import (
    build_c0_c,
    build_omega2_family,
    build_power_beta_iso,
    build_power_iso,
    build_Tk,
)
from .ordinal import Ordinal, parse
from .topology import cb_derivative, classify, height
from .verify import verify_operator
from .weights import optimal_lambda, parse_weights, tk_lambda

GRAMMAR_HINT = (
    "ordinals use w (or ω) with + * ^ and parentheses, e.g. w^2*3+w+1 or w^(w+1)"
)

FAMILY_HELP = {
    "tk": "alpha=<ord> k=<int>: C([1, w^alpha*k]) onto C([1, w^alpha])",
    "power": "alpha=<ord> n=<int>: C([1, w^alpha]) onto C([1, w^(alpha*n)])",
    "power_beta": "alpha=<ord> beta=<ord> n=<int>: C([1, w^alpha+beta]) onto C([1, w^(alpha*n)*beta])",
    "omega2": "C([1, w]) onto C([1, w*2]) with one weight",
    "c0": "C_0([1, w]) onto C([1, w])",
}


class UsageError(Exception):
    pass


def _ordinal(text: str) -> Ordinal:
    try:
        return parse(text)
    except OrdinalSyntaxError as exc:
        raise UsageError(f"{exc}\nhint: {GRAMMAR_HINT}") from None


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2) if args.json else text)


# subcommands ---------------------------------------------------------------------


def cmd_ord(args) -> int:
    x = _ordinal(args.expr)
    kind = "zero" if x.is_zero() else "successor" if x.is_successor() else "limit"
    _emit(args, {"input": args.expr, "value": str(x), "kind": kind}, str(x))
    return 0


def cmd_cb(args) -> int:
    gamma_, beta = _ordinal(args.gamma), _ordinal(args.beta)
    derived = cb_derivative(gamma_, beta)
    data = {"space": f"[1, {gamma_}]", "order": str(beta), "derivative": str(derived), "count": derived.count}
    _emit(args, data, str(derived))
    return 0


def cmd_height(args) -> int:
    g = _ordinal(args.gamma)
    if g.is_zero():
        raise UsageError("the interval [1, 0] is empty")
    h, n = height(g)
    _emit(args, {"space": f"[1, {g}]", "height": str(h), "last_derivative_size": n}, f"height: {h}; points in last derivative: {n}")
    return 0


def cmd_classify(args) -> int:
    a, b = _ordinal(args.a), _ordinal(args.b)
    c = classify(a, b)
    if c.pos_iso_a_to_b and c.pos_iso_b_to_a:
        pos = "positive both directions: yes"
    elif c.pos_iso_a_to_b or c.pos_iso_b_to_a:
        src, dst = (a, b) if c.pos_iso_a_to_b else (b, a)
        pos = f"positive both directions: no (only {src} -> {dst})"
    else:
        pos = "positive both directions: no"
    text = f"homeomorphic: {_yes(c.homeo)}; isomorphic: {_yes(c.iso)}; {pos}"
    _emit(args, dict(c.as_dict(), a=str(a), b=str(b)), text)
    return 0


def cmd_distance(args) -> int:
    a, b = _ordinal(args.a), _ordinal(args.b)
    if args.positive:
        src, dst = (a, b) if args.source == "a" else (b, a)
        bound = distance_bounds(src, dst, "positive_directed")
    else:
        if args.source != "a":
            raise UsageError("--from only applies together with --positive")
        src, dst = a, b
        bound = distance_bounds(a, b, "classical")
    data = dict(bound.to_json(), source=str(src), target=str(dst), mode="positive" if args.positive else "classical")
    _emit(args, data, bound.describe())
    return 0


def _params(args) -> dict:
    params = {}
    for token in args.params:
        if "=" not in token:
            raise UsageError(f"expected key=value, got {token!r}")
        key, value = token.split("=", 1)
        params[key.strip()] = value.strip()
    for key in ("alpha", "beta", "k", "n"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def _int(params: dict, key: str) -> int:
    if key not in params:
        raise UsageError(f"missing parameter {key}")
    try:
        return int(params[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer") from None


def _lambda(text: str | None, size: int, optimal) -> tuple:
    if text is None or text == "optimal":
        return tuple(optimal)
    lam = parse_weights(text)
    if len(lam) != size:
        raise UsageError(f"expected {size} weights, got {len(lam)}")
    return lam


def build_family(family: str, params: dict, lam_text: str | None):
    if family == "tk":
        k = _int(params, "k")
        alpha = _ordinal(params.get("alpha", "1"))
        if k < 2:
            raise UsageError("k must be at least 2")
        return build_Tk(alpha, k, _lambda(lam_text, k, tk_lambda(k)))
    if family == "power":
        n = _int(params, "n")
        alpha = _ordinal(params.get("alpha", "1"))
        if n < 1:
            raise UsageError("n must be at least 1")
        return build_power_iso(alpha, n, _lambda(lam_text, n, optimal_lambda(n)[0]))
    if family == "power_beta":
        n = _int(params, "n")
        alpha = _ordinal(params.get("alpha", "1"))
        beta = _ordinal(params.get("beta", "1"))
        if n < 1:
            raise UsageError("n must be at least 1")
        return build_power_beta_iso(alpha, beta, n, _lambda(lam_text, n + 1, optimal_lambda(n + 1)[0]))
    if family == "omega2":
        if lam_text is None or lam_text == "optimal":
            lam = (3 - sp.sqrt(3)) / 2
        else:
            values = parse_weights(lam_text)
            if len(values) != 1:
                raise UsageError("omega2 takes a single weight")
            lam = values[0]
        return build_omega2_family(lam)
    if family == "c0":
        if lam_text not in (None, "optimal"):
            raise UsageError("c0 takes no weights")
        return build_c0_c()
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILY_HELP)}")


def cmd_construct(args) -> int:
    T, S = build_family(args.family, _params(args), args.weights)
    data = {"schema": 1, "T": T.describe(seed=args.seed), "S": S.describe(seed=args.seed)}
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    for op in (data["T"], data["S"]):
        print(f"{op['operator']}: {op['domain']} -> {op['codomain']}  (norm {op['norm']}, positive: {_yes(op['positive'])})")
        for region in op["regions"]:
            weights = ", ".join(region["weights"]) or "(zero row)"
            print(f"  region {region['region']}: weights [{weights}]")
            if region["examples"]:
                ex = region["examples"][0]
                terms = " + ".join(f"{t['weight']}*f({t['point']})" for t in ex["row"]) or "0"
                print(f"    e.g. at {ex['at']}: {terms}")
    return 0


def cmd_verify(args) -> int:
    T, S = build_family(args.family, _params(args), args.weights)
    if args.samples < 1 or args.depth < 1:
        raise UsageError("--samples and --depth must be positive")
    report = verify_operator(T, S, samples=args.samples, seed=args.seed, depth=args.depth)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
        failure = report.first_failure()
        if failure is not None:
            print(f"first failing check: {failure.name}")
            print(json.dumps(failure.witness, indent=2))
    return 0 if report.passed else 1


# parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckpos",
        description="Ordinal calculator, C(K) classification and distance queries, and operator verification.",
        epilog=GRAMMAR_HINT,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("ord", cmd_ord, "evaluate an ordinal expression and print its normal form")
    p.add_argument("expr")

    p = add("cb", cmd_cb, "Cantor-Bendixson derivative of order beta of [1, gamma]")
    p.add_argument("gamma")
    p.add_argument("beta")

    p = add("height", cmd_height, "height of [1, gamma] and size of its last derivative")
    p.add_argument("gamma")

    p = add("classify", cmd_classify, "homeomorphism / isomorphism / positive isomorphism of C([1,a]) and C([1,b])")
    p.add_argument("a")
    p.add_argument("b")

    p = add("distance", cmd_distance, "known bounds for the Banach-Mazur distance")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--positive", action="store_true", help="positive (directed) distance")
    p.add_argument("--from", dest="source", choices=("a", "b"), default="a", help="source space of the positive distance")

    families = "; ".join(f"{k}: {v}" for k, v in FAMILY_HELP.items())
    for name, func, text in (
        ("construct", cmd_construct, "describe an operator pair region by region"),
        ("verify", cmd_verify, "run the seeded verification suite on an operator pair"),
    ):
        p = add(name, func, text)
        p.add_argument("family", help=families)
        p.add_argument("params", nargs="*", help="key=value parameters such as alpha=w k=3")
        p.add_argument("--alpha")
        p.add_argument("--beta")
        p.add_argument("--k")
        p.add_argument("--n")
        p.add_argument("--lambda", dest="weights", help='comma-separated weights such as "1/2,1/2", or "optimal"')
        p.add_argument("--seed", type=int, default=0)
        if name == "verify":
            p.add_argument("--samples", type=int, default=1000)
            p.add_argument("--depth", type=int, default=64)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BadWeights, CkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


__all__ = ["main", "build_parser", "build_family"]
