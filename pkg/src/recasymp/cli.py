"""Command line interface.

Subcommands:

    seq          exact sequence values from a preset recurrence
    coeffs       solve for expansion coefficients (text, JSON or LaTeX)
    eval         evaluate an expansion numerically at one index
    check        compare an expansion against the exact sequence
    solve-frame  determine the growth frame of a recurrence
    render       LaTeX for a solved expansion
    constant     estimate the connection constant from exact values

Exit codes: 0 success, 1 usage or input errors, 2 exact-computation
failures (wrong frame, resonance, no usable frame), 3 precision failures
(requested digits cannot be delivered honestly).
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import residual_check, solve_expansion
from .errors import (
    EvaluationError,
    RecasympError,
)
from .evaluate import (
    INV_SQRT2,
    _fresh_context,
    connection_constant,
    eval_expansion,
    format_significant,
    ratio_check,
)
from .frame import Frame
from .framesolve import frame_solve
from .presets import get_preset
from .rationals import format_rational, parse_rational
from .recurrence import Recurrence
from .render import expansion_to_latex

#: Significant digits used by the one-line big-integer summaries.
SUMMARY_DIGITS = 20


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _compact_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json_file(path: str, what: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {what} from {path}: {exc}") from None


def _load_recurrence(path: str) -> Recurrence:
    try:
        return Recurrence.from_json_dict(_load_json_file(path, "recurrence"))
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"bad recurrence file {path}: {exc}") from None


def _load_frame(path: str) -> Frame:
    try:
        return Frame.from_json_dict(_load_json_file(path, "frame"))
    except (KeyError, TypeError, ValueError) as exc:
        raise _UsageError(f"bad frame file {path}: {exc}") from None


def _problem(args) -> tuple[Recurrence, Frame, object, str | None]:
    """(recurrence, frame, constant, constant_latex) from --preset or
    --recurrence/--frame options."""
    if getattr(args, "preset", None):
        preset = get_preset(args.preset)
        return preset.recurrence, preset.frame, preset.constant, preset.constant_latex
    rec = _load_recurrence(args.recurrence)
    frame = _load_frame(args.frame) if args.frame else frame_solve(rec)
    return rec, frame, None, None


def _parse_constant(text: str):
    if text in ("1/sqrt2", "1/sqrt(2)"):
        return INV_SQRT2
    return parse_rational(text)


def _integer_summary(value: int) -> str:
    digits = len(str(abs(value)))
    ctx = _fresh_context(SUMMARY_DIGITS + 10)
    return f"{digits} digits; {format_significant(ctx.mpf(value), SUMMARY_DIGITS)}"


# -- commands ---------------------------------------------------------------


def _cmd_seq(args) -> int:
    preset = get_preset(args.preset)
    values = preset.sequence_values(args.n)
    if args.digits_only:
        print(_integer_summary(values[args.n]))
    elif args.last:
        print(values[args.n])
    else:
        for v in values:
            print(v)
    return 0


def _cmd_coeffs(args) -> int:
    if args.k < 1:
        raise _UsageError("--K must be at least 1")
    rec, frame, _, constant_latex = _problem(args)
    exp = solve_expansion(rec, frame, args.k)
    if args.format == "json":
        print(_compact_json(exp.to_json_dict()))
    elif args.format == "latex":
        print(expansion_to_latex(exp, constant_latex=constant_latex))
    else:
        for k in range(1, exp.K + 1):
            print(f"{k}: {format_rational(exp.coefficient(k))}")
    return 0


def _cmd_eval(args) -> int:
    preset = get_preset(args.preset)
    exp = solve_expansion(preset.recurrence, preset.frame, args.k)
    constant = _parse_constant(args.constant) if args.constant else preset.constant
    value = eval_expansion(exp, constant, args.n, args.k, args.digits)
    rendered = format_significant(value, args.digits)
    if args.format == "json":
        print(
            _compact_json(
                {"n": args.n, "k": args.k, "digits": args.digits, "value": rendered}
            )
        )
    else:
        print(rendered)
    return 0


def _cmd_check(args) -> int:
    report = ratio_check(args.n, args.k, args.digits)
    if args.format == "json":
        out = _compact_json(report.to_json_dict())
    else:
        out = "\n".join(
            [
                f"n: {report.n}",
                f"k: {report.k}",
                f"digits: {report.digits}",
                f"asy: {format_significant(report.asy, report.digits)}",
                f"exact: {format_significant(report.exact, report.digits)}",
                f"ratio: {format_significant(report.ratio, report.digits)}",
                f"working precision: {report.working_dps} dps",
            ]
        )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
        print(f"report written to {args.report}")
    else:
        print(out)
    return 0


def _cmd_solve_frame(args) -> int:
    rec = _load_recurrence(args.recurrence)
    frame = frame_solve(rec)
    payload = frame.to_json_dict()
    if args.verify is not None:
        exp = solve_expansion(rec, frame, args.verify)
        order = residual_check(rec, exp)
        if args.format == "json":
            print(_compact_json({"frame": payload, "verified_order": order}))
        else:
            print(_compact_json(payload))
            print(f"verified: residual vanishes through {order} orders")
        return 0
    print(_compact_json(payload))
    return 0


def _cmd_render(args) -> int:
    rec, frame, _, constant_latex = _problem(args)
    exp = solve_expansion(rec, frame, args.k)
    print(expansion_to_latex(exp, constant_latex=constant_latex))
    return 0


def _cmd_constant(args) -> int:
    preset = get_preset(args.preset)
    exp = solve_expansion(preset.recurrence, preset.frame, args.k)
    value = connection_constant(
        preset.recurrence, exp, args.n, args.k, args.digits
    )
    print(format_significant(value, args.digits))
    return 0


# -- parser -----------------------------------------------------------------


def _add_format(p, *choices):
    p.add_argument(
        "--format",
        choices=choices,
        default="text",
        help="output format (default text)",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="recasymp",
        description="Exact asymptotic expansions of polynomial-coefficient "
        "linear recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("seq", help="exact sequence values")
    p.add_argument("--preset", required=True, help="preset name (a85)")
    p.add_argument("--n", type=int, required=True, help="last index, inclusive")
    p.add_argument("--last", action="store_true", help="print only t_n")
    p.add_argument(
        "--digits-only",
        action="store_true",
        help="print a one-line size summary of t_n instead of the integer",
    )
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("coeffs", help="solve for expansion coefficients")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", help="preset name (a85)")
    source.add_argument("--recurrence", help="path to a recurrence JSON file")
    p.add_argument(
        "--frame",
        help="path to a frame JSON file (with --recurrence; solved if omitted)",
    )
    p.add_argument(
        "--K", dest="k", type=int, required=True, help="number of coefficients (>= 1)"
    )
    _add_format(p, "text", "json", "latex")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("eval", help="evaluate an expansion at one index")
    p.add_argument("--preset", required=True, help="preset name (a85)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="correction terms to use")
    p.add_argument("--digits", type=int, required=True)
    p.add_argument(
        "--constant",
        help="connection constant: 'p/q' or '1/sqrt2' (default: the preset's)",
    )
    _add_format(p, "text", "json")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check", help="compare an expansion with exact values")
    p.add_argument("--preset", required=True, help="preset name (a85)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--report", help="also write the report to this file")
    _add_format(p, "text", "json")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve-frame", help="determine the growth frame")
    p.add_argument("--recurrence", required=True, help="path to a recurrence JSON file")
    p.add_argument(
        "--verify",
        type=int,
        metavar="K",
        help="also solve K coefficients and certify the residual",
    )
    _add_format(p, "text", "json")
    p.set_defaults(func=_cmd_solve_frame)

    p = sub.add_parser("render", help="LaTeX for a solved expansion")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", help="preset name (a85)")
    source.add_argument("--recurrence", help="path to a recurrence JSON file")
    p.add_argument("--frame", help="path to a frame JSON file")
    p.add_argument("--k", type=int, required=True, help="terms to display")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser(
        "constant", help="estimate the connection constant from exact values"
    )
    p.add_argument("--preset", required=True, help="preset name (a85)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.set_defaults(func=_cmd_constant)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EvaluationError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return 3
    except RecasympError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
