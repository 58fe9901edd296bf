"""``hilbsign`` command line.

Exit codes: 0 affirmative, 1 definite negative, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from .intpoly import DegreeUndefined, Polynomial, format_poly, format_rational, sign_pattern
from .macaulay import NotIntegerValued, is_hilbert, macaulay_params, macaulay_term, params_admissible
from .oracle import MonomialIdeal, StabilizationNotDetected, cross_check
from .parse import PolySyntaxError, parse_generators, parse_int_list, parse_poly
from .realizer import (
    Atom,
    Scale,
    Sum,
    build_certificate,
    leading_bound,
    minimal_leading,
    realize_signs,
    verify_certificate,
)

# Arguments like "-1,1" or "-x^2+1" are values here, not options.
_VALUE_LIKE = re.compile(r"^-[\dx(]")


class InputError(Exception):
    pass


def _fmt_tuple(vals) -> str:
    return "(" + ", ".join(str(v) for v in vals) + ")"


def _poly_json(f: Polynomial) -> dict:
    return {"text": format_poly(f), "coeffs": [format_rational(c) for c in f.coeffs]}


def _parse(text: str) -> Polynomial:
    try:
        return parse_poly(text)
    except PolySyntaxError as e:
        raise InputError(f"cannot parse {text!r}: {e}") from None


def _node_lines(node, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(node, Atom):
        return [f"{pad}{format_poly(node.poly)}  [{node.tag.value}]"]
    if isinstance(node, Scale):
        return [f"{pad}{node.factor} *"] + _node_lines(node.child, indent + 1)
    label = "sum" if isinstance(node, Sum) else "product"
    out = [f"{pad}{label}:"]
    for c in node.children:
        out += _node_lines(c, indent + 1)
    return out


def _node_json(node):
    if isinstance(node, Atom):
        return {"atom": format_poly(node.poly), "tag": node.tag.value}
    if isinstance(node, Scale):
        return {"scale": node.factor, "of": _node_json(node.child)}
    key = "sum" if isinstance(node, Sum) else "product"
    return {key: [_node_json(c) for c in node.children]}


# -- subcommands: each returns (exit code, text lines, json payload) -----


def cmd_check(args):
    f = _parse(args.poly)
    try:
        params = macaulay_params(f)
    except NotIntegerValued:
        text = ["not a Hilbert polynomial; not integer-valued"]
        return 1, text, dict(result=_poly_json(f), params=None, verdict=False)
    ok = params_admissible(params)
    head = "Hilbert polynomial" if ok else "not a Hilbert polynomial"
    text = [f"{head}; M = {_fmt_tuple(params)}"]
    return (0 if ok else 1), text, dict(result=_poly_json(f), params=list(params), verdict=ok)


def cmd_decompose(args):
    f = _parse(args.poly)
    try:
        params = macaulay_params(f)
    except NotIntegerValued as e:
        raise InputError(str(e)) from None
    terms = [macaulay_term(i, m) for i, m in enumerate(params)]
    lines = [f"M = {_fmt_tuple(params)}"]
    for i, (m, t) in enumerate(zip(params, terms)):
        lines.append(f"  i={i}  m={m}:  C(x+{i},{i + 1}) - C(x+{i}-{m},{i + 1}) = {format_poly(t)}")
    ok = params_admissible(params)
    lines.append("Hilbert polynomial" if ok else "not a Hilbert polynomial")
    payload = dict(result={"polynomial": _poly_json(f), "terms": [_poly_json(t) for t in terms]},
                   params=list(params), verdict=ok)
    return 0, lines, payload


def cmd_signs(args):
    f = _parse(args.poly)
    try:
        s = sign_pattern(f)
    except DegreeUndefined:
        raise InputError("the zero polynomial has no sign pattern") from None
    return 0, [_fmt_tuple(s)], dict(result=list(s), params=None, verdict=None)


def cmd_realize(args):
    try:
        s = parse_int_list(args.pattern)
        f = realize_signs(s)
    except ValueError as e:
        raise InputError(str(e)) from None
    n = f.require_degree()
    cert = build_certificate(s, int(f.leading))
    ok = verify_certificate(cert, f) and is_hilbert(f)
    lines = [format_poly(f), "certificate (sum of):"]
    for term in cert.terms:
        lines += _node_lines(term, 1)
    lines.append("verified" if ok else "VERIFICATION FAILED")
    payload = dict(
        result={"polynomial": _poly_json(f), "degree": n,
                "certificate": [_node_json(t) for t in cert.terms]},
        params=list(macaulay_params(f)), verdict=ok)
    return (0 if ok else 1), lines, payload


def cmd_bound(args):
    try:
        a = parse_int_list(args.coeffs)
    except ValueError as e:
        raise InputError(str(e)) from None
    bound = leading_bound(a)
    least = minimal_leading(a)
    lines = [f"leading_bound = {bound}", f"minimal_leading = {least}"]
    return 0, lines, dict(result={"leading_bound": bound, "minimal_leading": least},
                          params=None, verdict=None)


def cmd_oracle(args):
    if args.vars < 1 or args.tmax < 1:
        raise InputError("--vars and --tmax must be positive")
    try:
        ideal = MonomialIdeal(args.vars, parse_generators(args.gens, args.vars))
        res = cross_check(ideal, args.tmax)
    except StabilizationNotDetected as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(str(e)) from None
    lines = [
        f"H = {_fmt_tuple(res.table)}",
        f"P(x) = {format_poly(res.polynomial)}  (agrees from t = {res.stabilization})",
        f"M = {_fmt_tuple(res.params)}",
        "cross-check: pass" if res.verdict else "cross-check: FAIL",
    ]
    payload = dict(
        result={"table": list(res.table), "polynomial": _poly_json(res.polynomial),
                "stabilization": res.stabilization,
                "generators": [list(g) for g in ideal.generators]},
        params=list(res.params), verdict=res.verdict)
    return (0 if res.verdict else 1), lines, payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object on stdout")
    parser = argparse.ArgumentParser(
        prog="hilbsign", parents=[common],
        description="Hilbert polynomials: Macaulay parameters, sign patterns, oracle.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="decide whether POLY is a Hilbert polynomial")
    p.add_argument("poly")
    p.set_defaults(func=cmd_check, input=lambda a: a.poly)

    p = sub.add_parser("decompose", parents=[common], help="Macaulay parameters and terms")
    p.add_argument("poly")
    p.set_defaults(func=cmd_decompose, input=lambda a: a.poly)

    p = sub.add_parser("signs", parents=[common], help="sign pattern (a_0 first)")
    p.add_argument("poly")
    p.set_defaults(func=cmd_signs, input=lambda a: a.poly)

    p = sub.add_parser("realize", parents=[common], help="Hilbert polynomial with a given sign pattern")
    p.add_argument("pattern", help="comma-separated -1/0/1, a_0 first")
    p.set_defaults(func=cmd_realize, input=lambda a: a.pattern)

    p = sub.add_parser("bound", parents=[common], help="leading-coefficient threshold")
    p.add_argument("--coeffs", required=True, help="a_0,a_1,...,a_{d-1}")
    p.set_defaults(func=cmd_bound, input=lambda a: a.coeffs)

    p = sub.add_parser("oracle", parents=[common], help="Hilbert function of a monomial quotient")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--gens", default="", help='e.g. "x1^2,x1*x2"')
    p.add_argument("--tmax", type=int, default=25)
    p.set_defaults(func=cmd_oracle,
                   input=lambda a: {"vars": a.vars, "gens": a.gens, "tmax": a.tmax})

    for ps in [parser, *sub.choices.values()]:
        # argparse only treats "-<digits>" as a value; extend to our inputs
        ps._negative_number_matcher = _VALUE_LIKE
    return parser


def run_command(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        old_err = sys.stderr
        sys.stderr = stderr
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr = old_err
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        code, lines, payload = args.func(args)
    except InputError as e:
        print(f"hilbsign {args.command}: {e}", file=stderr)
        return 2
    if getattr(args, "json", False):
        obj = {"command": args.command, "input": args.input(args), **payload}
        print(json.dumps(obj), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
