"""``lei`` command-line interface.

Exit codes: 0 success, 1 semantic failure, 2 parse/usage error,
3 field error, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra as A
from .catalog import CATALOG, make_catalog
from .errors import BadField, BudgetExceeded, NotFiniteField, ParseError
from .fileformat import parse_algebra_file, render_algebra
from .groups import DEFAULT_BUDGET, enumerate_automorphisms
from .linalg import Field
from .theorem import verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_FIELD, EXIT_BUDGET = range(5)


def _emit(pairs, out) -> None:
    for key, value in pairs:
        out.write(f"{key} = {value}\n")


def _render_vector(alg, v) -> str:
    return "[" + ",".join(alg.field.render(x) for x in v) + "]"


def _render_series(series) -> str:
    return " | ".join(s.render() for s in series)


def _load(path: str):
    return parse_algebra_file(Path(path).read_text(encoding="utf-8"))


def invariants_report(alg) -> list[tuple[str, str]]:
    ncl = A.nilpotency_class(alg)
    return [
        ("dim", str(alg.dim)),
        ("is_lie", str(A.is_lie(alg)).lower()),
        ("leib", A.leibniz_kernel(alg).render()),
        ("left_center", A.left_center(alg).render()),
        ("right_center", A.right_center(alg).render()),
        ("center", A.center(alg).render()),
        ("derived", A.derived_subalgebra(alg).render()),
        ("lower_series", _render_series(A.lower_central_series(alg))),
        ("upper_series", _render_series(A.upper_central_series(alg))),
        ("ncl", "not-nilpotent" if ncl is None else str(ncl)),
    ]


def cmd_check(args, out) -> int:
    alg = _load(args.file)
    violation = A.leibniz_violation(alg)
    if violation is None:
        _emit([("leibniz", "true")], out)
        return EXIT_OK
    (i, j, k), lhs, rhs = violation
    _emit([
        ("leibniz", "false"),
        ("violation", f"{i} {j} {k}"),
        ("lhs", _render_vector(alg, lhs)),
        ("rhs", _render_vector(alg, rhs)),
    ], out)
    return EXIT_FAIL


def cmd_invariants(args, out) -> int:
    alg = _load(args.file)
    if not A.is_left_leibniz(alg):
        print("error: algebra is not left Leibniz", file=sys.stderr)
        return EXIT_FAIL
    _emit(invariants_report(alg), out)
    return EXIT_OK


def cmd_aut(args, out) -> int:
    alg = _load(args.file)
    group = enumerate_automorphisms(alg, args.budget)
    _emit([("aut_order", str(group.order))], out)
    if args.dump:
        for m in group.sorted():
            out.write(m.render() + "\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    field = Field.parse(args.field)
    text = render_algebra(make_catalog(args.name, field))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify_thm(args, out) -> int:
    field = Field.parse(args.field)
    report = verify_theorem(field, args.budget)
    _emit(report.lines(), out)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lei", description="Leibniz algebra invariants and automorphisms.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test the left Leibniz identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariants", help="centers, kernels and central series")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("aut", help="enumerate the automorphism group over F_p")
    p.add_argument("file")
    p.add_argument("--dump", action="store_true", help="print every automorphism, row-major")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max candidate matrices")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("catalog", help="write a catalog algebra file")
    p.add_argument("name", help=", ".join(CATALOG))
    p.add_argument("--field", required=True, help="Q or F<p>")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-thm", help="verify the structure of Aut(Lei3) over F_p")
    p.add_argument("--field", required=True, help="F<p>")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify_thm)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except BadField as exc:
        # a bad field inside a file is a parse error; on the command line it is a field error
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE if exc.line else EXIT_FIELD
    except NotFiniteField as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
