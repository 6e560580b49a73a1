"""Command-line front end.

    splice-sig eval <expr> --at 1/8,1/8,1/8
    splice-sig sweep <expr> --order 8 [--csv out.csv] [--include-units]
    splice-sig defect-table --lambda 1,2 --order 12
    splice-sig verify [suite]
    splice-sig torus-sig 2 3 1/2

An <expr> is a path to an expression JSON file, an inline JSON object, a
fixture name, or the shorthands "hopf M N", "fixture NAME", "zero K".
Characters are comma-separated rational angles "a/b" with 0 the unit.

All arithmetic is exact and iteration orders are fixed, so output is
bit-stable across runs.  Certified sign evaluation starts at the interval
precision given by the SPLICE_SIG_PRECISION environment variable (bits).

Exit codes: 0 success, 1 failed verification, 2 unusable input,
3 GuardViolated, 4 BoundaryCharacter.  With --json every error is reported
as a JSON object on stdout.
"""

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from . import verify as verify_mod
from .ccomplex import SeifertFamily
from .errors import (BoundaryCharacter, ExpressionError, GuardViolated,
                     NullityUnavailable, SpliceSigError)
from .expr import parse as parse_expr
from .fixtures import fixture_names
from .hopf import hopf_nullity
from .cables import hirzebruch
from .torus import Angle, is_open

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_GUARD, EXIT_BOUNDARY = 0, 1, 2, 3, 4


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


def _parse_character(text: str) -> Tuple[Angle, ...]:
    try:
        return tuple(Angle(Fraction(tok)) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as err:
        raise _CliError(f"bad character {text!r}: {err}") from err


def _parse_angle(text: str) -> Angle:
    try:
        return Angle(Fraction(text))
    except (ValueError, ZeroDivisionError) as err:
        raise _CliError(f"bad angle {text!r}: {err}") from err


def _expr_doc(tokens: List[str]) -> Tuple[dict, Optional[str]]:
    """Turn the positional expression tokens into a document + base dir."""
    head = tokens[0]
    if len(tokens) == 1:
        if head.lstrip().startswith("{"):
            try:
                return json.loads(head), None
            except json.JSONDecodeError as err:
                raise _CliError(f"invalid JSON expression: {err}") from err
        if os.path.exists(head) or head.endswith(".json"):
            try:
                with open(head, "r", encoding="utf-8") as fh:
                    doc = json.load(fh)
            except OSError as err:
                raise _CliError(f"cannot read expression file {head!r}: {err}") from err
            except json.JSONDecodeError as err:
                raise _CliError(f"invalid JSON in {head!r}: {err}") from err
            return doc, os.path.dirname(os.path.abspath(head))
        return {"fixture": head}, None
    if head == "hopf" and len(tokens) == 3:
        try:
            return {"hopf": [int(tokens[1]), int(tokens[2])]}, None
        except ValueError as err:
            raise _CliError(f"hopf takes two integers: {err}") from err
    if head == "fixture" and len(tokens) == 2:
        return {"fixture": tokens[1]}, None
    if head == "zero" and len(tokens) == 2:
        try:
            return {"zero": int(tokens[1])}, None
        except ValueError as err:
            raise _CliError(f"zero takes an arity: {err}") from err
    raise _CliError(
        f"cannot read expression {' '.join(tokens)!r}; expected a JSON file, "
        f"an inline JSON object, a fixture name ({', '.join(fixture_names())}), "
        f'or "hopf M N" / "fixture NAME" / "zero K"')


def _nullity_if_available(doc: dict, base_dir: Optional[str],
                          omega: Tuple[Angle, ...]) -> Optional[int]:
    """Closed-form or family nullity for the expression forms that carry one."""
    form, value = next(iter(doc.items()))
    if form == "hopf" and is_open(omega):
        m, n = value
        return hopf_nullity(m, n, omega[:m], omega[m:])
    if form == "seifert" and is_open(omega):
        path = value
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        try:
            return SeifertFamily.load(path).nullity(omega)
        except NullityUnavailable:
            return None
    return None


def _emit_error(err: Exception, code: int, as_json: bool) -> int:
    if as_json:
        print(json.dumps({"error": {"type": type(err).__name__,
                                    "message": str(err)}}))
    else:
        print(f"error: {err}", file=sys.stderr)
    return code


def _grid_label(ks: Tuple[int, ...], order: int) -> str:
    return ",".join(f"{k}/{order}" for k in ks)


def cmd_eval(args) -> int:
    doc, base_dir = _expr_doc(args.expr)
    f = parse_expr(doc, base_dir)
    omega = _parse_character(args.at)
    if len(omega) != f.arity:
        raise _CliError(f"expression {f.label or '?'} takes {f.arity} angles, "
                        f"got {len(omega)}")
    value = f(omega)
    nullity = _nullity_if_available(doc, base_dir, omega)
    if args.json:
        out = {"signature": value}
        if nullity is not None:
            out["nullity"] = nullity
        print(json.dumps(out))
    else:
        print(value)
        if nullity is not None:
            print(f"nullity {nullity}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    doc, base_dir = _expr_doc(args.expr)
    f = parse_expr(doc, base_dir)
    order = args.order
    if order < 1:
        raise _CliError("--order must be at least 1")
    start = 0 if args.include_units else 1
    rows = []
    for ks in product(range(start, order), repeat=f.arity):
        omega = tuple(Angle(Fraction(k, order)) for k in ks)
        try:
            rows.append((ks, str(f(omega))))
        except GuardViolated:
            rows.append((ks, "guard"))
        except BoundaryCharacter:
            rows.append((ks, "boundary"))
    header = [f"omega_{i}" for i in range(f.arity)] + ["signature"]
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(",".join(header) + "\n")
            for ks, val in rows:
                fh.write(",".join(f"{k}/{order}" for k in ks) + f",{val}\n")
        print(f"wrote {len(rows)} rows to {args.csv}")
    elif args.json:
        print(json.dumps({"label": f.label, "order": order,
                          "cells": [{"at": [f"{k}/{order}" for k in ks],
                                     "value": val} for ks, val in rows]}))
    else:
        print(f"# {f.label or 'expression'}  order {order}  {len(rows)} cells")
        for ks, val in rows:
            print(f"{_grid_label(ks, order)}\t{val}")
    return EXIT_OK


def cmd_defect_table(args) -> int:
    try:
        lam = tuple(int(tok) for tok in args.lam.split(","))
    except ValueError as err:
        raise _CliError(f"bad --lambda {args.lam!r}: {err}") from err
    order = args.order
    if order < 1 or not lam:
        raise _CliError("--order must be at least 1 and --lambda non-empty")
    from .torus import defect
    cells = []
    for ks in product(range(order), repeat=len(lam)):
        omega = tuple(Angle(Fraction(k, order)) for k in ks)
        cells.append((ks, defect(lam, omega)))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(",".join(f"omega_{i}" for i in range(len(lam))) + ",defect\n")
            for ks, val in cells:
                fh.write(",".join(f"{k}/{order}" for k in ks) + f",{val}\n")
        print(f"wrote {len(cells)} rows to {args.csv}")
    elif args.json:
        print(json.dumps({"lambda": list(lam), "order": order,
                          "cells": [{"at": [f"{k}/{order}" for k in ks],
                                     "defect": val} for ks, val in cells]}))
    elif len(lam) == 2:
        print(f"# defect lambda=({','.join(map(str, lam))})  order {order}")
        print("\t" + "\t".join(f"{b}/{order}" for b in range(order)))
        for a in range(order):
            row = [val for ks, val in cells if ks[0] == a]
            print(f"{a}/{order}\t" + "\t".join(str(v) for v in row))
    else:
        print(f"# defect lambda=({','.join(map(str, lam))})  order {order}")
        for ks, val in cells:
            print(f"{_grid_label(ks, order)}\t{val}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verify_mod.run_suite(args.suite)
    except KeyError as err:
        raise _CliError(str(err.args[0])) from err
    if args.json:
        print(json.dumps({"passed": all(r.passed for r in results),
                          "results": [{"name": r.name, "passed": r.passed,
                                       "detail": r.detail} for r in results]}))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name:<22} {r.detail}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        if not args.json:
            print(f"{len(failed)} of {len(results)} criteria failed: "
                  f"{', '.join(failed)}", file=sys.stderr)
        return EXIT_VERIFY
    if not args.json:
        print(f"all {len(results)} criteria passed")
    return EXIT_OK


def cmd_torus_sig(args) -> int:
    zeta = _parse_angle(args.angle)
    value = hirzebruch(args.p, args.q, zeta)
    if args.json:
        print(json.dumps({"signature": value}))
    else:
        print(value)
    return EXIT_OK


def _add_json_flag(p: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps an unset subcommand-level flag from clobbering a
    # top-level --json when argparse merges the namespaces
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="machine-parsable JSON output, including errors")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="splice-sig",
        description="Exact multivariate link signatures: evaluation, sweeps, "
                    "defect tables, verification.",
        epilog="SPLICE_SIG_PRECISION sets the starting interval precision in "
               "bits for certified sign evaluation.")
    top.add_argument("--json", action="store_true",
                     help="machine-parsable JSON output, including errors")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression at one character")
    p.add_argument("expr", nargs="+", help="expression file, inline JSON, "
                                           "fixture name, or shorthand")
    p.add_argument("--at", required=True, metavar="a/b,c/d,...",
                   help="rational angles, 0 for the unit")
    _add_json_flag(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("sweep", help="evaluate over a root-of-unity grid")
    p.add_argument("expr", nargs="+")
    p.add_argument("--order", type=int, default=8, metavar="N",
                   help="root-of-unity order (default 8)")
    p.add_argument("--csv", metavar="PATH", help="write CSV instead of a table")
    p.add_argument("--include-units", action="store_true",
                   help="include unit coordinates (default sweeps k=1..N-1)")
    _add_json_flag(p)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("defect-table", help="tabulate the splice defect")
    p.add_argument("--lambda", dest="lam", required=True, metavar="l1,l2,...",
                   help="integer linking vector")
    p.add_argument("--order", type=int, default=12, metavar="N")
    p.add_argument("--csv", metavar="PATH")
    _add_json_flag(p)
    p.set_defaults(fn=cmd_defect_table)

    p = sub.add_parser("verify", help="run self-verification suites")
    p.add_argument("suite", nargs="?", default="all",
                   help=f"one of: {', '.join(verify_mod.suite_names())}")
    _add_json_flag(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("torus-sig", help="torus-link signature by lattice count")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("angle", metavar="a/b")
    _add_json_flag(p)
    p.set_defaults(fn=cmd_torus_sig)
    return top


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as err:
        return _emit_error(err, err.code, args.json)
    except ExpressionError as err:
        return _emit_error(err, EXIT_PARSE, args.json)
    except GuardViolated as err:
        return _emit_error(err, EXIT_GUARD, args.json)
    except BoundaryCharacter as err:
        return _emit_error(err, EXIT_BOUNDARY, args.json)
    except (SpliceSigError, ValueError) as err:
        return _emit_error(err, EXIT_PARSE, args.json)
    except OSError as err:
        return _emit_error(err, EXIT_PARSE, args.json)


if __name__ == "__main__":
    sys.exit(main())
