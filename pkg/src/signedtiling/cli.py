"""Command-line interface.

Exit codes: 0 success or agreement, 2 a mathematical disagreement was found,
3 a resource cap was hit, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional

from . import __version__
from .decide import (closed_form_for, closed_form_inflated, closed_form_rect, rect_tileable, scan,
                     signed_tileable)
from .groebner import DEFAULT_STEP_CAP, ResourceCapExceeded
from .identities import verify_basis
from .oracle import Certificate, solve, verify_certificate
from .polyring import Domain
from .rectcalc import analyse, predicts_tileable
from .tilesets import RegionSpecError, region_from_spec, tileset

EXIT_OK = 0
EXIT_DISAGREE = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 64

STEP_CAP_ENV = "SIGNTILING_STEP_CAP"

TSV_HELP = """\
TSV columns
  scan:          p q groebner closed_form agree test_monomial
                 (groebner/closed_form are yes|no, agree is 1|0, test_monomial is a,b or -)
  rectcalc-scan: p q case divisible deriv_value s_minus b_count satisfiable closed_form groebner agree
A final line starting with '#' summarises the run.
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _even_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 4 or n % 2:
        raise argparse.ArgumentTypeError(f"n must be even and >= 4, got {n}")
    return n


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {v}")
    return v


def _domain(text: str) -> Domain:
    t = text.strip().lower()
    if t not in ("z", "q"):
        raise argparse.ArgumentTypeError("weights must be z or q")
    return Domain.Z if t == "z" else Domain.Q


def _step_cap(args) -> int:
    if getattr(args, "step_cap", None) is not None:
        return args.step_cap
    env = os.environ.get(STEP_CAP_ENV)
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise UsageError(f"{STEP_CAP_ENV} must be an integer") from None
        if cap < 1:
            raise UsageError(f"{STEP_CAP_ENV} must be positive")
        return cap
    return DEFAULT_STEP_CAP


def _config(args) -> dict:
    skip = {"func", "no_timestamp", "format"}
    cfg = {k: (v.value if isinstance(v, Domain) else v) for k, v in vars(args).items() if k not in skip}
    cfg["step_cap"] = _step_cap(args)
    if "format" in vars(args):
        cfg["format"] = args.format
    return cfg


def _emit_json(args, result: dict) -> None:
    doc = {"tool": "signedtiling", "version": __version__, "config": _config(args), "result": result}
    if not args.no_timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    print(json.dumps(doc, sort_keys=True, indent=2))


def _builtin_closed_form(spec: str, n: int, plus: bool, domain: Domain) -> Optional[bool]:
    """Closed-form verdict for builtin regions where one is known."""
    if spec.startswith("rect:"):
        w, h = (int(t) for t in spec[5:].split("x"))
        try:
            return closed_form_for(n, plus, domain, w, h)
        except ValueError:
            return None
    if spec.startswith("inflatedL:") and domain is Domain.Z and not plus:
        _, m, factor = spec.split(":")
        if int(m) == n and n >= 6:
            return closed_form_inflated(n, int(factor))
    return None


# -- commands --------------------------------------------------------------

def cmd_decide(args) -> int:
    region = region_from_spec(args.region)
    tiles = tileset(args.n, args.plus)
    d = signed_tileable(region, tiles, args.weights, args.test_bound, _step_cap(args))
    result = d.to_dict()
    result["cells"] = len(region)
    closed = _builtin_closed_form(args.region, args.n, args.plus, args.weights)
    result["closed_form"] = None if closed is None else ("yes" if closed else "no")
    code = EXIT_OK
    if closed is not None:
        result["agree"] = closed == d.yes
        code = EXIT_OK if closed == d.yes else EXIT_DISAGREE
    _emit_json(args, result)
    return code


def cmd_scan(args) -> int:
    rows = scan(args.n, args.plus, args.weights, args.max, args.max, args.test_bound, args.jobs,
                _step_cap(args))
    bad = [r for r in rows if r.groebner is not None and not r.agree]
    errors = [r for r in rows if r.groebner is None]
    if args.format == "json":
        _emit_json(args, {
            "rows": [{"p": r.p, "q": r.q,
                      "groebner": None if r.groebner is None else ("yes" if r.groebner else "no"),
                      "closed_form": "yes" if r.closed_form else "no", "agree": r.agree,
                      "test_monomial": list(r.test_monomial) if r.test_monomial else None,
                      "error": r.error} for r in rows],
            "cells": len(rows), "disagreements": len(bad), "errors": len(errors),
        })
    else:
        print("p\tq\tgroebner\tclosed_form\tagree\ttest_monomial")
        for r in rows:
            g = "error" if r.groebner is None else ("yes" if r.groebner else "no")
            tm = f"{r.test_monomial[0]},{r.test_monomial[1]}" if r.test_monomial else "-"
            print(f"{r.p}\t{r.q}\t{g}\t{'yes' if r.closed_form else 'no'}\t{int(r.agree)}\t{tm}")
        print(f"# summary: {len(rows)} cells, {len(bad)} disagreements, {len(errors)} errors")
    if bad:
        return EXIT_DISAGREE
    return EXIT_RESOURCE if errors else EXIT_OK


def cmd_verify_basis(args) -> int:
    rep = verify_basis(args.n, args.plus, _step_cap(args))
    if args.format == "json":
        _emit_json(args, {
            "ok": rep.ok,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in rep.checks],
        })
    else:
        label = f"T{args.n}{'+' if args.plus else ''}"
        for c in rep.checks:
            line = f"{c.status:8s} {c.name}"
            if c.detail:
                line += f"  [{c.detail}]"
            print(line)
        failed = sum(1 for c in rep.checks if not c.informational and not c.passed)
        print(f"# {label}: {len(rep.checks)} checks, {failed} failed")
    return EXIT_OK if rep.ok else EXIT_DISAGREE


def cmd_oracle(args) -> int:
    region = region_from_spec(args.region)
    tiles = tileset(args.n, args.plus)
    margin = args.n if args.margin is None else args.margin
    cert = solve(region, tiles, args.weights, margin)
    result = {"found": cert is not None, "cells": len(region)}
    if cert is not None:
        result.update(entries=len(cert.entries), scale=cert.scale, window=list(cert.window),
                      verified=verify_certificate(cert, region))
        if args.emit_certificate:
            Path(args.emit_certificate).write_text(cert.to_text())
            result["certificate_file"] = args.emit_certificate
    code = EXIT_OK
    if args.cross_check:
        d = signed_tileable(region, tiles, args.weights, step_cap=_step_cap(args), with_trace=False)
        result["groebner"] = d.answer.value
        # a window-limited miss is only a disagreement if the Groebner side says yes
        result["agree"] = d.yes == (cert is not None)
        if not result["agree"]:
            code = EXIT_DISAGREE
    _emit_json(args, result)
    return code


def cmd_check_certificate(args) -> int:
    region = region_from_spec(args.region)
    cert = Certificate.from_text(Path(args.certificate).read_text())
    ok = verify_certificate(cert, region)
    _emit_json(args, {"verified": ok, "entries": len(cert.entries), "scale": cert.scale})
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_rectcalc(args) -> int:
    if args.n < 8:
        raise UsageError("rectcalc needs n >= 8")
    p, q = args.p, args.q
    if p > q:
        raise UsageError("rectcalc expects p <= q")
    rep = analyse(p, q, args.n)
    result = rep.to_dict()
    result["predicts_tileable"] = predicts_tileable(rep)
    result["closed_form"] = closed_form_rect(args.n, False, p, q)
    _emit_json(args, result)
    return EXIT_OK if result["predicts_tileable"] == result["closed_form"] else EXIT_DISAGREE


def cmd_rectcalc_scan(args) -> int:
    if args.n < 8:
        raise UsageError("rectcalc-scan needs n >= 8")
    print("p\tq\tcase\tdivisible\tderiv_value\ts_minus\tb_count\tsatisfiable\tclosed_form\tgroebner\tagree")
    bad = 0
    total = 0

    def fmt(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "no"
        return str(v)

    for q in range(1, args.max + 1):
        for p in range(1, q + 1):
            rep = analyse(p, q, args.n)
            pred = predicts_tileable(rep)
            closed = closed_form_rect(args.n, False, p, q)
            groebner = None
            if not args.no_groebner:
                groebner = rect_tileable(args.n, False, p, q, Domain.Z).yes
            agree = pred == closed and (groebner is None or groebner == closed)
            total += 1
            bad += not agree
            print("\t".join([str(p), str(q), rep.case, fmt(rep.divisible), str(rep.deriv_value),
                             fmt(rep.s_minus), fmt(rep.b_count), fmt(rep.satisfiable), fmt(closed),
                             fmt(groebner), str(int(agree))]))
    print(f"# summary: {total} rectangles, {bad} disagreements")
    return EXIT_DISAGREE if bad else EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp so repeated runs are byte-identical")
    common.add_argument("--step-cap", type=_positive, default=None,
                        help=f"Buchberger pair cap (default {DEFAULT_STEP_CAP}, or ${STEP_CAP_ENV})")

    tiles = _Parser(add_help=False)
    tiles.add_argument("--n", type=_even_n, required=True, help="tile size, even and >= 4")
    tiles.add_argument("--plus", action="store_true", help="add the 2x2 square to the tile set")

    parser = _Parser(prog="signedtiling", description="Signed tilings by ribbon L n-ominoes.",
                     epilog=TSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    region_help = "rect:WxH, inflatedL:n:factor, or a file of 'col row' lines"

    p = sub.add_parser("decide", parents=[common, tiles], help="Groebner decision for one region")
    p.add_argument("--region", required=True, help=region_help)
    p.add_argument("--weights", type=_domain, default=Domain.Z, help="z (integer) or q (rational); default z")
    p.add_argument("--test-bound", type=_nonneg, default=None, help="test monomial box 0..B (default n)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("scan", parents=[common, tiles], help="compare Groebner and closed-form decisions on a grid",
                       epilog=TSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--weights", type=_domain, default=Domain.Z)
    p.add_argument("--max", type=_positive, required=True, help="largest side length")
    p.add_argument("--test-bound", type=_nonneg, default=None)
    p.add_argument("--jobs", type=_nonneg, default=1, help="worker processes (0 = all CPUs)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-basis", parents=[common, tiles], help="check the closed-form basis and identities")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify_basis)

    p = sub.add_parser("oracle", parents=[common, tiles], help="brute-force linear-algebra solver")
    p.add_argument("--region", required=True, help=region_help)
    p.add_argument("--weights", type=_domain, default=Domain.Z)
    p.add_argument("--margin", type=_nonneg, default=None, help="window margin on every side (default n)")
    p.add_argument("--emit-certificate", metavar="FILE", default=None)
    p.add_argument("--no-cross-check", dest="cross_check", action="store_false",
                   help="skip comparing against the Groebner decision")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check-certificate", parents=[common], help="verify a certificate file against a region")
    p.add_argument("--region", required=True, help=region_help)
    p.add_argument("certificate")
    p.set_defaults(func=cmd_check_certificate)

    p = sub.add_parser("rectcalc", parents=[common], help="univariate rectangle analysis for n >= 8")
    p.add_argument("--n", type=_even_n, required=True)
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--q", type=_positive, required=True)
    p.set_defaults(func=cmd_rectcalc)

    p = sub.add_parser("rectcalc-scan", parents=[common], help="rectangle analysis on a grid",
                       epilog=TSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=_even_n, required=True)
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--no-groebner", action="store_true", help="skip the Groebner column")
    p.set_defaults(func=cmd_rectcalc_scan)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RegionSpecError) as exc:
        print(f"signedtiling: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapExceeded as exc:
        print(f"signedtiling: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
