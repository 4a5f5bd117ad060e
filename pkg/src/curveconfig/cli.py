"""Command-line front end.

Exit codes: 0 success, 1 reproduction mismatch (or a failing inequality with
``--strict``), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from . import catalog
from .chern import (
    GeneralTypeCondition,
    ball_quotient_candidates,
    bmy_gap,
    characteristic_number,
    chern_pair,
    slope_at,
)
from .config import CurveConfiguration, validate
from .errors import CurveConfigError
from .families import (
    BUILTIN_NAMES,
    asymptotic_harbourne,
    builtin_family,
    instantiate,
    k_chern_slope,
    kn_chern_slope,
)
from .incidence import generate_generic, parse_arrangement, spectrum_of
from .inequalities import all_verdicts
from .render import decimal_str, rational_json
from .reproduce import reproduce


class UsageError(Exception):
    pass


def _load_config(source: str) -> CurveConfiguration:
    """``source`` is a JSON file path or ``catalog:<name>``."""
    if source.startswith("catalog:"):
        try:
            return catalog.get(source.split(":", 1)[1])
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    return CurveConfiguration.loads(text)


def _poly_json(p) -> list[str]:
    return [str(c) for c in p]


def _emit(obj: Any, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


# -- commands ---------------------------------------------------------------------


def cmd_family(args, out) -> int:
    fam = builtin_family(args.name, args.w)
    if args.limits:
        return _emit_limits(fam, args, out)
    if args.k is None:
        raise UsageError("family needs --k (or --limits)")
    _emit(instantiate(fam, args.k).to_json(), out)
    return 0


def _emit_limits(fam, args, out) -> int:
    slope = k_chern_slope(fam)
    _emit(
        {
            "family": fam.name,
            "asymptotic_harbourne": rational_json(asymptotic_harbourne(fam), args.digits),
            "k_chern_slope": {
                "numerator": _poly_json(slope.numerator),
                "denominator": _poly_json(slope.denominator),
                "text": str(slope),
            },
            "kn_chern_slope": rational_json(kn_chern_slope(fam), args.digits),
        },
        out,
    )
    return 0


def cmd_limits(args, out) -> int:
    return _emit_limits(builtin_family(args.name, args.w), args, out)


def _parse_sweep(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--sweep expects n0:n1, got {text!r}") from None
    if lo < 2 or hi < lo:
        raise UsageError(f"--sweep needs 2 <= n0 <= n1, got {text!r}")
    return range(lo, hi + 1)


def _sweep_row(pair, n: int) -> list[str]:
    c1, c2 = pair.c1sq(n), pair.c2(n)
    slope = str(c1 / c2) if c2 > 0 else ""
    gap = str(bmy_gap(pair)(n)) if pair.degree == 1 else ""
    return [str(n), str(c1), str(c2), slope, gap]


def cmd_chern(args, out) -> int:
    cfg = _load_config(args.config)
    pair = chern_pair(cfg)
    if args.sweep:
        ns = _parse_sweep(args.sweep)
        with ThreadPoolExecutor() as pool:
            rows = list(pool.map(lambda n: _sweep_row(pair, n), ns))
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "c1sq", "c2", "slope", "gap"])
        writer.writerows(rows)
        return 0
    result: dict[str, Any] = {"label": cfg.label, **pair.as_dict()}
    if args.n is not None:
        result["n"] = args.n
        result["slope"] = rational_json(slope_at(pair, args.n), args.digits)
    try:
        result["gamma"] = rational_json(characteristic_number(pair), args.digits)
    except CurveConfigError as exc:
        result["gamma"] = None
        result["gamma_error"] = str(exc)
    if cfg.degree == 1:
        result["bmy_gap"] = bmy_gap(pair).as_strings()
        cond = GeneralTypeCondition.strongest_for(cfg)
        result["general_type_condition"] = cond.value if cond else None
        result["ball_quotient_n"] = ball_quotient_candidates(pair, cond) if cond else None
    else:
        result["bmy_gap"] = None
        result["ball_quotient_n"] = None
    _emit(result, out)
    return 0


def cmd_ball_quotient(args, out) -> int:
    cfg = _load_config(args.config)
    pair = chern_pair(cfg)
    cond = GeneralTypeCondition(args.condition)
    _emit(
        {
            "label": cfg.label,
            "condition": cond.value,
            "bmy_gap": bmy_gap(pair).as_strings(),
            "ball_quotient_n": ball_quotient_candidates(pair, cond),
        },
        out,
    )
    return 0


def cmd_verify(args, out) -> int:
    cfg = _load_config(args.config)
    verdicts = all_verdicts(cfg, include_inapplicable=args.all)
    _emit([v.as_dict() for v in verdicts], out)
    if args.strict and any(v.holds is False for v in verdicts):
        return 1
    return 0


def cmd_arrangement(args, out) -> int:
    if args.generic is not None:
        arr = generate_generic(args.generic, args.seed)
    elif args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        arr = parse_arrangement(text, Path(args.file).stem)
    else:
        raise UsageError("arrangement needs a file or --generic K")
    cfg = spectrum_of(arr)
    payload: dict[str, Any] = {**cfg.to_json(), "validation": validate(cfg).as_dict()}
    if args.generic is not None:
        payload["lines"] = [list(line.coords) for line in arr.lines]
    _emit(payload, out)
    return 0


def cmd_reproduce(args, out) -> int:
    report = reproduce(seed=args.seed)
    if args.format == "json":
        _emit(report.as_dict(), out)
    else:
        for c in report.claims:
            mark = "PASS" if c.match else "FAIL"
            out.write(f"[{mark}] criterion {c.criterion:>2}  {c.claim_id}: {c.computed}\n")
            if not c.match:
                out.write(f"        expected: {c.expected}\n")
        total = len(report.claims)
        ok = sum(c.match for c in report.claims)
        out.write(f"{ok}/{total} claims reproduced\n")
    return 0 if report.all_match else 1


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--digits", type=int, default=5, help="decimal digits in rendered rationals")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--strict", action="store_true", help="exit 1 when an inequality fails")

    parser = argparse.ArgumentParser(
        prog="curveconfig",
        description="Exact invariants of curve configurations and their Kummer covers.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_names = list(BUILTIN_NAMES)
    p = sub.add_parser("family", parents=[common], help="instantiate a named family")
    p.add_argument("--name", required=True, choices=family_names)
    p.add_argument("--w", type=int, default=None, help="flex count for s-elliptic")
    p.add_argument("--k", type=int, default=None, help="family parameter")
    p.add_argument("--limits", action="store_true", help="emit asymptotic invariants instead")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("limits", parents=[common], help="asymptotic invariants of a family")
    p.add_argument("--name", required=True, choices=family_names)
    p.add_argument("--w", type=int, default=None)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("chern", parents=[common], help="Chern numbers of Kummer covers")
    p.add_argument("--config", required=True, help="JSON file or catalog:<name>")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--n", type=int)
    group.add_argument("--sweep", metavar="N0:N1")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("ball-quotient", parents=[common], help="n with c1^2 = 3 c2")
    p.add_argument("--config", required=True)
    p.add_argument("--condition", choices=[c.value for c in GeneralTypeCondition], default="strong")
    p.set_defaults(func=cmd_ball_quotient)

    p = sub.add_parser("verify", parents=[common], help="check inequalities")
    p.add_argument("--config", required=True)
    p.add_argument("--all", action="store_true", help="include checkers for other degrees")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("arrangement", parents=[common], help="spectrum of explicit lines")
    p.add_argument("file", nargs="?")
    p.add_argument("--generic", type=int, metavar="K", help="random lines in general position")
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("reproduce", parents=[common], help="recompute all published values")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, CurveConfigError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def run(argv: list[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
