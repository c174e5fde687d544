"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, certify, partitions as pt, symfunc as sf, symreduce as sr, tropical as tr
from .exactnum import format_rational


class UsageError(Exception):
    pass


def _partition(text: str) -> pt.Partition:
    try:
        return pt.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _with_float(q: Fraction, show: bool) -> str:
    return f"{format_rational(q)} (~{float(q):.6g})" if show else format_rational(q)


def cmd_partitions(args) -> int:
    parts = pt.enum_partitions(args.d, even=args.even)
    _emit([list(p) for p in parts], args.json, "\n".join(p.label() for p in parts))
    return 0


def cmd_hasse(args) -> int:
    if args.d < 1:
        raise UsageError("d must be at least 1")
    if args.dot:
        print(pt.hasse_dot(args.d), end="")
        return 0
    edges = pt.hasse(args.d)
    _emit([[list(a), list(b)] for a, b in edges], args.json,
          "\n".join(f"{a.label()} > {b.label()}" for a, b in edges))
    return 0


def _check_sizes(lam, mu):
    if lam.size != mu.size:
        raise UsageError(f"partitions have different sizes ({lam.size} and {mu.size})")


def cmd_superdom(args) -> int:
    _check_sizes(args.lam, args.mu)
    holds = pt.superdominates(args.lam, args.mu)
    trace = pt.superdominance_trace(args.lam, args.mu)
    lines = ["true" if holds else "false"]
    for j, (a, b) in enumerate(trace, start=1):
        lines.append(f"j={j}: {a} {'<=' if a <= b else '>'} {b}")
    _emit({"holds": holds, "trace": trace}, args.json, "\n".join(lines))
    return 0


def cmd_binomial(args) -> int:
    _check_sizes(args.lam, args.mu)
    holds = sf.binomial_inequality_holds(args.lam, args.mu)
    out = {"holds": holds}
    text = f"p{args.lam.label()} >= p{args.mu.label()} on the nonnegative orthant: {'true' if holds else 'false'}"
    if not holds:
        x = sf.find_binomial_violation(args.lam, args.mu)
        if x is not None:
            out["witness"] = [format_rational(v) for v in x]
            text += "\nwitness point: (" + ", ".join(format_rational(v) for v in x) + ")"
    _emit(out, args.json, text)
    return 0


def _cone_output(cone, labels, as_json):
    strings = [tr.format_inequality(f, labels) for f in cone.facets()]
    if as_json:
        data = cone.to_json()
        data["inequality_strings"] = strings
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(strings))


def _half(total: int) -> int:
    if total % 2 or not 4 <= total <= 10:
        raise UsageError(f"degree must be one of 4, 6, 8, 10, got {total}")
    return total // 2


def cmd_trop_n(args) -> int:
    if args.d < 2:
        raise UsageError("d must be at least 2")
    _cone_output(tr.trop_vandermonde(args.d), [f"y{i}" for i in range(1, args.d + 1)], args.json)
    return 0


def cmd_trop_bp(args) -> int:
    if not 2 <= args.d <= 5:
        raise UsageError("d must be between 2 and 5")
    _cone_output(tr.trop_bp_dual(args.d), tr.coordinate_labels(args.d), args.json)
    return 0


def cmd_trop_bsos(args) -> int:
    d = _half(args.degree)
    _cone_output(sr.trop_of_sos(sr.build_pencil(f"B({2 * d})")), tr.coordinate_labels(d), args.json)
    return 0


def cmd_tk(args) -> int:
    d = _half(args.degree)
    if args.k < 1:
        raise UsageError("k must be positive")
    _cone_output(tr.t_k_cone(d, args.k), tr.coordinate_labels(d), args.json)
    return 0


def cmd_tau(args) -> int:
    if not 2 <= args.d <= 5:
        raise UsageError("d must be between 2 and 5")
    tau, certified = tr.stabilization_tau(args.d, args.kmax)
    text = f"tau_{args.d} = {tau}" if tau else f"tau_{args.d}: not found for k <= {args.kmax}"
    _emit({"d": args.d, "tau": tau if tau else f"not found <= {args.kmax}", "certified": certified}, args.json, text)
    return 0


def cmd_pencil(args) -> int:
    try:
        pencil = sr.build_pencil(args.kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.pretty:
        print(pencil.pretty(), end="")
    else:
        print(json.dumps(pencil.to_json(), indent=2))
    return 0


def cmd_psd(args) -> int:
    try:
        with open(args.matrix) as fh:
            data = json.load(fh)
        matrix = [[Fraction(str(x)) for x in row] for row in data]
        coeffs = certify.charpoly_shifted(matrix)
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read matrix: {exc}") from None
    psd = all(c >= 0 for c in coeffs)
    _emit({"psd": psd, "charpoly_coefficients": [format_rational(c) for c in coeffs]}, args.json,
          ("true" if psd else "false") + "\ndet(tI + M) coefficients: "
          + ", ".join(_with_float(c, args.float) for c in coeffs))
    return 0 if psd else 1


def cmd_certify(args) -> int:
    report = {
        "quartic": certify.verify_quartic,
        "decic": certify.verify_decic,
        "sos4-rays": certify.verify_sos4_extreme_rays,
    }[args.which]()
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.summary())
        if args.which == "decic":
            value = Fraction(report.witness["pairing"])
            print(f"<a, c> = {_with_float(value, args.float)}")
    return 0 if report.passed else 1


def cmd_verify_all(args) -> int:
    ok = True
    for number in sorted(acceptance.CRITERIA):
        outcome = acceptance.CRITERIA[number]()
        print(outcome.line(), flush=True)
        ok &= outcome.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symtrop", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--float", action="store_true", help="append decimal approximations (display only)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("partitions", parents=[common], help="list partitions of d in revlex order")
    s.add_argument("d", type=int)
    s.add_argument("--even", action="store_true", help="only partitions with even parts")
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("hasse", parents=[common], help="superdominance cover relations")
    s.add_argument("d", type=int)
    s.add_argument("--dot", action="store_true", help="Graphviz output")
    s.set_defaults(func=cmd_hasse)

    for name, func, helptext in (
        ("superdom", cmd_superdom, "test lambda >= mu in superdominance"),
        ("binomial", cmd_binomial, "decide p_lambda >= p_mu on the nonnegative orthant"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("lam", type=_partition)
        s.add_argument("mu", type=_partition)
        s.set_defaults(func=func)

    s = sub.add_parser("trop-n", parents=[common], help="tropicalized Vandermonde cell")
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_trop_n)

    s = sub.add_parser("trop-bp", parents=[common], help="trop of the dual nonnegativity cone in degree 2d")
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_trop_bp)

    s = sub.add_parser("trop-bsos", parents=[common], help="trop of the dual SOS cone of the given degree")
    s.add_argument("degree", type=int)
    s.set_defaults(func=cmd_trop_bsos)

    s = sub.add_parser("tk", parents=[common], help="the cone T^(k) in the given degree")
    s.add_argument("degree", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_tk)

    s = sub.add_parser("tau", parents=[common], help="stabilization index of T^(k)")
    s.add_argument("d", type=int)
    s.add_argument("--kmax", type=int, default=4)
    s.set_defaults(func=cmd_tau)

    s = sub.add_parser("pencil", parents=[common], help="limit Gram pencil: B(4), B(6), B(8), B(10) or S(4)")
    s.add_argument("kind")
    s.add_argument("--pretty", action="store_true")
    s.set_defaults(func=cmd_pencil)

    s = sub.add_parser("psd", parents=[common], help="exact PSD test of a JSON matrix")
    s.add_argument("matrix")
    s.set_defaults(func=cmd_psd)

    s = sub.add_parser("certify", parents=[common], help="verify an explicit certificate")
    s.add_argument("which", choices=["quartic", "decic", "sos4-rays"])
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify-all", parents=[common], help="run the full acceptance suite")
    s.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
