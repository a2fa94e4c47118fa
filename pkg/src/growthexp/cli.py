"""Command line front end.

Every subcommand prints one JSON document on standard output.  Exit codes:
0 success, 1 a mathematical invariant failed, 2 bad input, 3 a randomized
procedure stayed inconclusive after its retries.
"""

import argparse
import json
from pathlib import Path
import sys

from .curve import graph_curve, injectivity_check, normalization_check
from .elimination import BivariateMonic
from .errors import GrowthError, InputError, NotInjective
from .growth import (
    bezout_mapping_report,
    consistency_checks,
    delta,
    enumerate_growth_exponents,
    fiber_injectivity_check,
    fiber_polynomial,
    geometric_degree,
    rationalize,
    report_for,
    restrict,
)
from .instance import load_instance
from .parser import parse_expression, parse_poly, parse_unipoly

SAMPLING_TOLERANCE = 0.02


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _seed(args, inst=None):
    if args.seed is not None:
        return args.seed
    if inst is not None and inst.seed is not None:
        return inst.seed
    return 0


def _functions(inst):
    return [restrict(inst.curve, f.numerator, f.denominator, f.name) for f in inst.functions]


def cmd_parse(args):
    if args.expr is not None:
        names = [v for v in (args.vars or "").split(",") if v]
        parse_expression(args.expr, names)
        p = parse_poly(args.expr, names)
        _emit({"expression": str(p), "degree": p.degree if p else None})
        return 0
    if args.instance is None:
        raise InputError("parse needs an instance file or --expr")
    _emit(load_instance(args.instance).to_json())
    return 0


def cmd_degree(args):
    inst = load_instance(args.instance)
    rows = []
    for cf in _functions(inst):
        rows.append({
            "name": cf.name,
            "pullback": str(cf.pullback),
            "geometric_degree": None if cf.is_constant else geometric_degree(cf),
            "graph_degree": graph_curve(inst.curve, cf.pullback).degree,
        })
    _emit({"curve_degree": inst.curve.degree, "functions": rows})
    return 0


def cmd_growth(args):
    inst = load_instance(args.instance)
    seed = _seed(args, inst)
    reports = [report_for(cf, seed).to_json() for cf in _functions(inst)]
    _emit({"instance": args.instance, "seed": seed, "functions": reports})
    return 0


def cmd_delta(args):
    if args.poly is not None:
        t, x = args.t, args.x
        P = BivariateMonic.from_multipoly(parse_poly(args.poly, (x, t)), t, x)
        _emit({"polynomial": str(P), "delta": str(delta(P))})
        return 0
    if args.instance is None:
        raise InputError("delta needs an instance file or --poly")
    inst = load_instance(args.instance)
    seed = _seed(args, inst)
    rows = []
    for cf in _functions(inst):
        P, ell = fiber_polynomial(cf, seed)
        rows.append({
            "name": cf.name,
            "linear_form": [str(c) for c in ell.coefficients],
            "fiber_polynomial": str(P),
            "delta": str(delta(P)),
        })
    _emit({"seed": seed, "functions": rows})
    return 0


def _require_injective(curve, seed):
    inj = injectivity_check(curve, seed)
    if not inj.injective:
        where = f" (s = {inj.witness[0]}, {inj.witness[1]})" if inj.witness else ""
        raise NotInjective(f"parametrization is not injective{where}")


def cmd_rationalize(args):
    inst = load_instance(args.instance)
    seed = _seed(args, inst)
    _require_injective(inst.curve, seed)
    if args.pullback is not None:
        targets = [("h", parse_unipoly(args.pullback, inst.curve.parameter))]
    else:
        targets = [(cf.name, cf.pullback) for cf in _functions(inst)]
    rows = []
    for name, h in targets:
        P, Q = rationalize(inst.curve, h, args.max_degree)
        rows.append({"name": name, "pullback": str(h), "numerator": str(P), "denominator": str(Q)})
    _emit({"functions": rows})
    return 0


def cmd_enumerate(args):
    inst = load_instance(args.instance)
    _require_injective(inst.curve, _seed(args, inst))
    exps = enumerate_growth_exponents(inst.curve, args.max_degree)
    _emit({"curve_degree": inst.curve.degree, "exponents": [str(e) for e in exps]})
    return 0


def cmd_bezout(args):
    inst = load_instance(args.instance)
    rep = bezout_mapping_report(inst.curve, _functions(inst))
    _emit({
        "components": [f.name for f in inst.functions],
        "geometric_degree": rep.geometric_degree,
        "growth_exponent": str(rep.growth_exponent),
        "curve_degree": inst.curve.degree,
        "equality_holds": rep.equality_holds,
        "bezout_bound_holds": rep.bezout_bound_holds,
    })
    return 0 if rep.equality_holds and rep.bezout_bound_holds is not False else 1


def verify_instance(path, seed_override=None, trials=100):
    """Run every check on one instance file; returns the report dict."""
    inst = load_instance(path)
    seed = seed_override if seed_override is not None else (inst.seed or 0)
    checks = []

    def check(name, passed, function=None, detail=""):
        checks.append({"function": function, "name": name, "passed": bool(passed), "detail": detail})

    norm = normalization_check(inst.curve, seed)
    check("normalization", norm.ok, detail=f"{norm.e}-to-1")
    reports = []
    if norm.ok:
        for cf in _functions(inst):
            rep = report_for(cf, seed, check_normalization=False, strict=False)
            reports.append(rep.to_json())
            for name, ok in consistency_checks(rep):
                check(name, ok, cf.name)
            if cf.is_constant:
                continue
            fi = fiber_injectivity_check(cf, seed, trials)
            check("fiber_injectivity", fi.passed, cf.name,
                  f"{fi.success_rate} over {fi.trials_used} fibers")
            gap = abs(rep.sample_estimate - float(rep.growth_exponent))
            check("sampling_consistency", gap <= SAMPLING_TOLERANCE, cf.name,
                  f"estimate {rep.sample_estimate!r}")
    return {
        "instance": str(path),
        "seed": seed,
        "curve_degree": inst.curve.degree,
        "functions": reports,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


def cmd_verify(args):
    if args.dir is not None:
        paths = sorted(Path(args.dir).glob("*.json"))
        if not paths:
            raise InputError(f"no instance files in {args.dir}")
    elif args.instance is not None:
        paths = [Path(args.instance)]
    else:
        raise InputError("verify needs an instance file or --dir")
    results, code = [], 0
    for p in paths:
        try:
            rep = verify_instance(p, args.seed, args.trials)
            code = max(code, 0 if rep["passed"] else 1)
        except GrowthError as exc:
            rep = {"instance": str(p), "error": type(exc).__name__, "message": str(exc)}
            code = max(code, exc.exit_code)
        results.append(rep)
    _emit(results[0] if args.dir is None else {"reports": results})
    return code


def build_parser():
    ap = argparse.ArgumentParser(
        prog="growthexp",
        description="Growth exponents and geometric degrees of functions on polynomial curves.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, instance="required"):
        p = sub.add_parser(name, help=help_)
        if instance == "required":
            p.add_argument("instance", help="instance JSON file")
        elif instance == "optional":
            p.add_argument("instance", nargs="?", help="instance JSON file")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for randomized steps (default: the instance's seed, else 0)")
        p.set_defaults(func=fn)
        return p

    p = add("parse", cmd_parse, "parse an instance or expression and print it canonically", "optional")
    p.add_argument("--expr", help="expression to parse instead of an instance")
    p.add_argument("--vars", help="comma separated variable names for --expr")
    add("degree", cmd_degree, "curve, geometric and graph degrees")
    add("growth", cmd_growth, "full growth report for each function")
    p = add("delta", cmd_delta, "delta of a monic polynomial or of each fiber polynomial", "optional")
    p.add_argument("--poly", help="polynomial monic in --t with coefficients in --x")
    p.add_argument("--t", default="t")
    p.add_argument("--x", default="x")
    p = add("rationalize", cmd_rationalize, "find P/Q representing each pullback")
    p.add_argument("--max-degree", type=int, default=6, help="cap on the numerator degree")
    p.add_argument("--pullback", help="pullback polynomial in the parameter to represent")
    p = add("enumerate", cmd_enumerate, "growth exponents realized by polynomial pullbacks")
    p.add_argument("--max-degree", type=int, default=6, help="largest pullback degree")
    p = add("verify", cmd_verify, "run the whole invariant suite", "optional")
    p.add_argument("--dir", help="verify every *.json file in this directory")
    p.add_argument("--trials", type=int, default=100, help="fibers sampled per function")
    add("bezout", cmd_bezout, "degree report for the mapping formed by all functions")
    return ap


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GrowthError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


def main():
    sys.exit(run())
