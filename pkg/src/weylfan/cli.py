"""Command-line front end.

Every subcommand prints one JSON document on stdout and writes
diagnostics to stderr.  The exit code is 0 exactly when the command's
status is ``ok``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from . import linalg as la
from .cones import union_of_chamber_translates
from .fans import (
    FanError,
    dabrowski_fan,
    fan_from_json,
    fan_isomorphic_signed_perm,
    fan_to_json,
    fans_equal,
    orthant,
    product_p1_fan,
    validate,
)
from .flagcomb import euler_characteristic, flag_datum, momentum_image
from .rootsys import (
    UnsupportedRootSystemError,
    build_root_system,
    fundamental_chamber,
    hermitian_simple_roots,
)
from .weyl import ElementCapExceededError, generate_weyl_group, parabolic

MAX_FAN_RANK = 5
SUITE_CAPS = {"lemma-cone": 5, "gen-fan": 5, "euler": 8, "momentum": 6}


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1


class UsageError(Exception):
    pass


def _vec(v) -> list[str]:
    return [la.fraction_str(x) for x in v]


def _int_list(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _root_system(args):
    return build_root_system(args.family, args.rank)


# -- subcommands ----------------------------------------------------------------

def cmd_root_system(args) -> CommandResult:
    rs = _root_system(args)
    chamber = fundamental_chamber(rs)
    payload = {
        "family": rs.family,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "roots": [_vec(a) for a in sorted(rs.roots)],
        "positive_roots": [_vec(a) for a in rs.positive_roots],
        "simple_roots": [_vec(a) for a in rs.simple_roots],
        "highest_root": _vec(rs.highest_root),
        "fundamental_weights": [_vec(w) for w in rs.fundamental_weights],
        "hermitian_simple_roots": list(hermitian_simple_roots(rs)) if rs.is_irreducible else [],
        "fundamental_chamber": chamber.to_json(),
    }
    return CommandResult("ok", payload)


def cmd_weyl(args) -> CommandResult:
    rs = _root_system(args)
    W = generate_weyl_group(rs)
    payload = {
        "family": rs.family,
        "rank": rs.rank,
        "order": len(W),
        "generators": [[list(r) for r in s.matrix] for s in W.generators],
        "max_length": max(w.length for w in W),
    }
    if args.parabolic is not None:
        P = parabolic(W, _int_list(args.parabolic))
        payload["parabolic"] = {
            "pi_p": sorted(P.pi_p),
            "order": len(P.elements),
            "coset_reps": [{"word": list(w.word), "length": w.length} for w in P.coset_reps],
        }
    return CommandResult("ok", payload)


def _computed_fan(args):
    if args.rank is None:
        raise UsageError("--rank is required")
    if args.kind == "product-p1":
        return product_p1_fan(args.rank)
    if args.family is None:
        raise UsageError("--family is required for a dabrowski fan")
    if args.rank > MAX_FAN_RANK:
        raise UsageError(f"rank {args.rank} exceeds the fan cap {MAX_FAN_RANK}")
    rs = _root_system(args)
    return dabrowski_fan(rs, _int_list(args.parabolic))


def cmd_fan_compute(args) -> CommandResult:
    fan = _computed_fan(args)
    payload = fan_to_json(fan)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
            fh.write("\n")
    return CommandResult("ok", payload, [f"{len(fan.cones)} cones, {len(fan.maximal_cones)} maximal"])


def _read_fan(path: str, check: bool = True):
    with open(path) as fh:
        return fan_from_json(fh.read(), check=check)


def cmd_fan_validate(args) -> CommandResult:
    fan = _read_fan(args.input, check=False)
    report = validate(fan, exhaustive=args.exhaustive)
    payload = report.to_json()
    payload["cones"] = len(fan.cones)
    payload["maximal_cones"] = len(fan.maximal_cones)
    # an axiom failure is a finding, not a command failure
    return CommandResult("ok", payload, list(report.diagnostics))


def cmd_fan_compare(args) -> CommandResult:
    if args.input:
        left = _read_fan(args.input)
    else:
        if args.rank is None:
            raise UsageError("give --input or --family/--rank")
        left = _computed_fan(args)
    right = _read_fan(args.against)
    if left.ambient_dim != right.ambient_dim:
        return CommandResult("ok", {"result": "distinct", "reason": "ambient dimensions differ"})
    if fans_equal(left, right):
        return CommandResult("ok", {"result": "equal"})
    g = fan_isomorphic_signed_perm(left, right) if left.ambient_dim <= 6 else None
    if g is not None:
        return CommandResult("ok", {"result": "isomorphic", "transform": [list(r) for r in g]})
    return CommandResult("ok", {"result": "distinct"})


def cmd_polytope_momentum(args) -> CommandResult:
    rs = _root_system(args)
    fd = flag_datum(rs, _int_list(args.parabolic))
    try:
        weight = [la.to_fraction(x) for x in args.weight.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"weight coordinates must be rational: {args.weight!r}") from exc
    if len(weight) != rs.ambient_dim:
        raise UsageError(f"weight needs {rs.ambient_dim} coordinates")
    if args.fixed_subset == "all":
        subset = list(range(len(fd.fixed_points)))
    else:
        subset = _int_list(args.fixed_subset)
        if not subset:
            raise UsageError("fixed-point subset must be non-empty")
    poly = momentum_image(fd, subset, weight)
    payload = poly.to_json()
    payload["vertex_count"] = len(poly.vertices)
    payload["fixed_points"] = len(fd.fixed_points)
    return CommandResult("ok", payload)


# -- acceptance suites ------------------------------------------------------------

def _check_lemma_cone(n: int) -> tuple[bool, str]:
    rs = build_root_system("C", n)
    P = parabolic(generate_weyl_group(rs), range(1, n))
    union = union_of_chamber_translates(P, fundamental_chamber(rs))
    target = orthant([1] * n)
    ok = union.facets == target.facets and union.rays == target.rays
    return ok, f"facets {[list(f) for f in union.facets]}"


def _check_gen_fan(n: int) -> tuple[bool, str]:
    fan = dabrowski_fan(build_root_system("C", n), range(1, n))
    ok = fans_equal(fan, product_p1_fan(n))
    return ok, f"{len(fan.maximal_cones)} maximal cones, {len(fan.cones)} cones"


def _check_euler(n: int) -> tuple[bool, str]:
    rs = build_root_system("C", n)
    chi = euler_characteristic(rs, range(1, n))
    ok = chi == 2**n
    detail = f"chi={chi}"
    if n <= 5:
        order = len(generate_weyl_group(rs))
        ok = ok and order == 2**n * factorial(n)
        detail += f", |W|={order}"
    return ok, detail


def _check_momentum(n: int) -> tuple[bool, str]:
    rs = build_root_system("C", n)
    fd = flag_datum(rs, range(1, n))
    poly = momentum_image(fd, range(len(fd.fixed_points)), [1] * n)
    cube = sorted(tuple(la.vector(s)) for s in itertools.product((-1, 1), repeat=n))
    ok = list(poly.vertices) == cube
    return ok, f"{len(poly.vertices)} vertices"


SUITES: dict[str, Callable[[int], tuple[bool, str]]] = {
    "lemma-cone": _check_lemma_cone,
    "gen-fan": _check_gen_fan,
    "euler": _check_euler,
    "momentum": _check_momentum,
}


def cmd_check(args) -> CommandResult:
    cap = SUITE_CAPS[args.suite]
    if not 1 <= args.max_rank <= cap:
        raise UsageError(f"--max-rank for {args.suite} must lie in 1..{cap}")
    results = []
    for n in range(1, args.max_rank + 1):
        ok, detail = SUITES[args.suite](n)
        results.append({"rank": n, "passed": ok, "detail": detail})
    status = "ok" if all(r["passed"] for r in results) else "fail"
    diags = [f"{args.suite} n={r['rank']}: {'PASS' if r['passed'] else 'FAIL'}" for r in results]
    return CommandResult(status, {"suite": args.suite, "results": results}, diags)


# -- argument parsing -------------------------------------------------------------

def _add_rs_flags(p, required=True):
    p.add_argument("--family", required=required, help="A, B, C or D")
    p.add_argument("--rank", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylfan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root-system", help="roots, weights and Hermitian candidates")
    _add_rs_flags(p)
    p.set_defaults(func=cmd_root_system)

    p = sub.add_parser("weyl", help="Weyl group order and parabolic coset representatives")
    _add_rs_flags(p)
    p.add_argument("--parabolic", help="1-based simple root indices, e.g. 1,2")
    p.set_defaults(func=cmd_weyl)

    fan = sub.add_parser("fan", help="compute, validate or compare fans")
    fsub = fan.add_subparsers(dest="fan_command", required=True)

    p = fsub.add_parser("compute")
    _add_rs_flags(p, required=False)
    p.add_argument("--parabolic", default="")
    p.add_argument("--kind", choices=("dabrowski", "product-p1"), default="dabrowski")
    p.add_argument("--output", help="also write the fan file here")
    p.set_defaults(func=cmd_fan_compute)

    p = fsub.add_parser("validate")
    p.add_argument("--input", required=True)
    p.add_argument("--exhaustive", action="store_true", help="check every pair of cones")
    p.set_defaults(func=cmd_fan_validate)

    p = fsub.add_parser("compare")
    p.add_argument("--input", help="fan file; otherwise computed from the flags below")
    _add_rs_flags(p, required=False)
    p.add_argument("--parabolic", default="")
    p.add_argument("--kind", choices=("dabrowski", "product-p1"), default="dabrowski")
    p.add_argument("--against", required=True)
    p.set_defaults(func=cmd_fan_compare)

    poly = sub.add_parser("polytope", help="momentum polytopes")
    psub = poly.add_subparsers(dest="polytope_command", required=True)
    p = psub.add_parser("momentum")
    _add_rs_flags(p)
    p.add_argument("--parabolic", default="")
    p.add_argument("--weight", required=True, help="comma-separated rationals, e.g. 1,1/2,0")
    p.add_argument("--fixed-subset", default="all", help="0-based coset indices or 'all'")
    p.set_defaults(func=cmd_polytope_momentum)

    p = sub.add_parser("check", help="run a named identity across ranks")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: list[str] | None = None) -> CommandResult:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        UsageError,
        UnsupportedRootSystemError,
        ElementCapExceededError,
        FanError,
        ValueError,
        IndexError,
        OSError,
    ) as exc:
        return CommandResult("fail", {"error": str(exc)}, [str(exc)])


def main(argv: list[str] | None = None) -> int:
    result = run(argv)
    sys.stdout.write(json.dumps(result.payload, sort_keys=True) + "\n")
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
