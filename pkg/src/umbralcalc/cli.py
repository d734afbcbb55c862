"""Command-line front end: family tables, point evaluation, connection
constants, and the identity verification suite.

All values are exact rationals rendered as "p/q" (or "p" when integral);
the same syntax is accepted on the command line.  Output is
byte-deterministic for a fixed invocation.  Exit status: 0 on success
(for verify: every report passed), 1 when a verification sweep found a
counterexample, 2 for usage or parameter errors.

Values starting with a dash (negative rationals, negative sets) are
accepted both space-separated and in the equals form, e.g.
``--lambda -3/5`` or ``--lambda-set=-1,2,1/2``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import replace
from fractions import Fraction

from .families import (
    SLACK_ENV,
    FamilyParams,
    bernoulli_kernel,
    bernoulli_polys,
    default_order,
    euler_kernel,
    euler_polys,
    exp_minus_one,
    frobenius_euler_kernel,
    frobenius_euler_polys,
    mixed_kernel,
    mixed_type_polys,
    one_minus_exp_neg,
    poly_bernoulli_polys,
    stirling2_triangle,
)
from .identities import DEFAULT_GRID, MINIMUM_DEGREE, VERIFIERS, SweepGrid, verify_all
from .polynomials import Polynomial, parse_rational
from .series import TruncatedSeries
from .umbral import ShefferPair, connection_constants

FAMILIES = ("bernoulli", "euler", "frobenius-euler", "poly-bernoulli", "mixed-T", "stirling2")
TARGETS = ("bernoulli", "euler", "frobenius-euler", "falling", "rising")
FORMATS = ("json", "csv", "latex")
IDENTITIES = tuple(VERIFIERS) + ("all",)

ROW_FIELDS = ("family", "n", "r", "k", "s", "lambda", "mu", "coefficients")


class CliError(Exception):
    """Parameter problem detected after argument parsing."""


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _excluding_one(name: str):
    def parse(text: str) -> Fraction:
        value = _rational(text)
        if value == 1:
            raise argparse.ArgumentTypeError(
                f"{name} = 1 is excluded (the generating kernels require {name} != 1)"
            )
        return value

    return parse


def _int_set(text: str) -> tuple:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty set")
    return values


def _rational_set(text: str) -> tuple:
    try:
        values = tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not values:
        raise argparse.ArgumentTypeError("empty set")
    return values


# ---------------------------------------------------------------------------
# LaTeX rendering

def latex_rational(value) -> str:
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_polynomial(p: Polynomial) -> str:
    """Descending powers; rational coefficients as \\frac{p}{q}."""
    if not p:
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = latex_rational(mag)
        else:
            var = "x" if k == 1 else f"x^{{{k}}}"
            body = var if mag == 1 else f"{latex_rational(mag)} {var}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# output plumbing

def _write_text(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _rows_to_csv(rows, fields) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        record = []
        for field in fields:
            value = row.get(field)
            if value is None:
                record.append("")
            elif isinstance(value, list):
                record.append(";".join(value))
            else:
                record.append(value)
        writer.writerow(record)
    return buffer.getvalue()


def _emit_rows(rows, args, fields, latex_line) -> int:
    if args.format == "json":
        text = "".join(json.dumps(row) + "\n" for row in rows)
    elif args.format == "csv":
        text = _rows_to_csv(rows, fields)
    else:
        text = "".join(latex_line(row) + "\n" for row in rows)
    _write_text(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# table / eval

def _require(args, *names):
    missing = [
        {"lam": "--lambda", "mu": "--mu"}.get(name, f"--{name}")
        for name in names
        if getattr(args, name) is None
    ]
    if missing:
        raise CliError(
            f"family {args.family!r} needs {', '.join(missing)}"
        )


def _family_polys(args, n_max: int) -> list:
    family = args.family
    params = FamilyParams(n=n_max, r=args.r, k=args.k, s=args.s, lam=args.lam)
    if family == "bernoulli":
        _require(args, "s")
        return bernoulli_polys(params.n, params.s)
    if family == "euler":
        _require(args, "s")
        return euler_polys(params.n, params.s)
    if family == "frobenius-euler":
        _require(args, "r", "lam")
        return frobenius_euler_polys(params.n, params.r, params.lam)
    if family == "poly-bernoulli":
        _require(args, "k")
        return poly_bernoulli_polys(params.n, params.k)
    if family == "mixed-T":
        _require(args, "r", "k", "lam")
        return mixed_type_polys(params.n, params.r, params.k, params.lam)
    raise CliError(f"family {family!r} has no polynomial table")


def _param_cell(args, name):
    value = getattr(args, name)
    if value is None:
        return None
    return str(value) if isinstance(value, Fraction) else value


def _family_row(args, n: int, coefficients: list) -> dict:
    return {
        "family": args.family,
        "n": n,
        "r": _param_cell(args, "r"),
        "k": _param_cell(args, "k"),
        "s": _param_cell(args, "s"),
        "lambda": _param_cell(args, "lam"),
        "mu": None,
        "coefficients": coefficients,
    }


def _table_latex_label(args, n: int) -> str:
    family = args.family
    if family == "bernoulli":
        return f"\\mathbb{{B}}^{{({args.s})}}_{{{n}}}(x)"
    if family == "euler":
        return f"E^{{({args.s})}}_{{{n}}}(x)"
    if family == "frobenius-euler":
        return f"H^{{({args.r})}}_{{{n}}}(x \\mid {latex_rational(args.lam)})"
    if family == "poly-bernoulli":
        return f"B^{{({args.k})}}_{{{n}}}(x)"
    return (
        f"T^{{({args.r},{args.k})}}_{{{n}}}"
        f"(x \\mid {latex_rational(args.lam)})"
    )


def _run_table(args) -> int:
    if args.n_max < 0:
        raise CliError("--n-max must be nonnegative")
    if args.family == "stirling2":
        triangle = stirling2_triangle(args.n_max)
        rows = [
            _family_row(args, n, [str(v) for v in triangle[n]])
            for n in range(args.n_max + 1)
        ]

        def latex_line(row):
            return (
                f"S_2({row['n']}, \\cdot) = "
                f"\\left[{', '.join(row['coefficients'])}\\right]"
            )

        return _emit_rows(rows, args, ROW_FIELDS, latex_line)

    polys = _family_polys(args, args.n_max)
    rows = [
        _family_row(args, n, [str(c) for c in polys[n].coefficients])
        for n in range(args.n_max + 1)
    ]

    def latex_line(row):
        return f"{_table_latex_label(args, row['n'])} = {latex_polynomial(polys[row['n']])}"

    return _emit_rows(rows, args, ROW_FIELDS, latex_line)


def _run_eval(args) -> int:
    if args.n < 0:
        raise CliError("--n must be nonnegative")
    if args.family == "stirling2":
        raise CliError("stirling2 is a number triangle; use the table command")
    poly = _family_polys(args, args.n)[args.n]
    _write_text(str(poly(args.at)) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# bases

def _run_bases(args) -> int:
    if args.n_max < 0:
        raise CliError("--n-max must be nonnegative")
    order = default_order(args.n_max)
    source = ShefferPair(
        mixed_kernel(args.r, args.k, args.lam, order).invert(),
        TruncatedSeries.identity(order),
    )
    target_name = args.target
    if target_name == "bernoulli":
        if args.s is None:
            raise CliError("target 'bernoulli' needs --s")
        target = ShefferPair(
            bernoulli_kernel(args.s, order).invert(), TruncatedSeries.identity(order)
        )
    elif target_name == "euler":
        if args.s is None:
            raise CliError("target 'euler' needs --s")
        target = ShefferPair(
            euler_kernel(args.s, order).invert(), TruncatedSeries.identity(order)
        )
    elif target_name == "frobenius-euler":
        if args.s is None or args.mu is None:
            raise CliError("target 'frobenius-euler' needs --s and --mu")
        target = ShefferPair(
            frobenius_euler_kernel(args.s, args.mu, order).invert(),
            TruncatedSeries.identity(order),
        )
    elif target_name == "falling":
        target = ShefferPair(TruncatedSeries.constant(1, order), exp_minus_one(order))
    else:
        target = ShefferPair(TruncatedSeries.constant(1, order), one_minus_exp_neg(order))

    constants = connection_constants(source, target, args.n_max)
    rows = []
    for n in range(args.n_max + 1):
        rows.append(
            {
                "target": target_name,
                "n": n,
                "r": args.r,
                "k": args.k,
                "s": args.s,
                "lambda": str(args.lam),
                "mu": None if args.mu is None else str(args.mu),
                "constants": [str(c) for c in constants[n]],
            }
        )

    fields = ("target", "n", "r", "k", "s", "lambda", "mu", "constants")

    def latex_line(row):
        rendered = ", ".join(latex_rational(Fraction(c)) for c in row["constants"])
        return f"C_{{{row['n']},\\cdot}} = \\left[{rendered}\\right]"

    return _emit_rows(rows, args, fields, latex_line)


# ---------------------------------------------------------------------------
# verify

def _build_grid(args, n_min: int) -> SweepGrid:
    kwargs = {
        "n_min": n_min,
        "n_max": DEFAULT_GRID.n_max if args.n_max is None else args.n_max,
    }
    if args.r_set is not None:
        kwargs["r_values"] = args.r_set
    if args.k_set is not None:
        kwargs["k_values"] = args.k_set
    if args.s_set is not None:
        kwargs["s_values"] = args.s_set
    if args.lambda_set is not None:
        kwargs["lambda_values"] = args.lambda_set
    if args.mu_set is not None:
        kwargs["mu_values"] = args.mu_set
    return replace(DEFAULT_GRID, **kwargs)


def _run_verify(args) -> int:
    if args.jobs < 1:
        raise CliError("--jobs must be at least 1")
    identity = args.identity
    sink = sys.stdout if args.output is None else open(args.output, "w", newline="")
    close_sink = args.output is not None
    all_passed = True
    try:
        if identity == "all":
            grid = _build_grid(args, n_min=args.n_min if args.n_min is not None else 0)
            reports = verify_all(grid, collect_all=args.collect_all, jobs=args.jobs)
        else:
            floor = MINIMUM_DEGREE.get(identity, 0)
            n_min = args.n_min if args.n_min is not None else floor
            grid = _build_grid(args, n_min=n_min)
            reports = iter([VERIFIERS[identity](grid, collect_all=args.collect_all, jobs=args.jobs)])
        for report in reports:
            sink.write(json.dumps(report.to_jsonable()) + "\n")
            sink.flush()
            all_passed = all_passed and report.passed
    finally:
        if close_sink:
            sink.close()
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# parser

#: argparse only treats plain negative integers/decimals as values rather
#: than flags; widen that to negative rationals ("-3/5") and negative
#: rational sets ("-1,2,1/2") so they work without the equals form.
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?([,-].*)?$|^-\d*\.\d+$")


def _allow_negative_values(parser):
    try:
        parser._negative_number_matcher = _NEGATIVE_VALUE
    except AttributeError:  # private API moved; "--flag=-3/5" still works
        pass


def _add_output_options(parser, with_format=True):
    if with_format:
        parser.add_argument("--format", choices=FORMATS, default="json",
                            help="output format (default: json)")
    parser.add_argument("--output", metavar="PATH", default=None,
                        help="write to a file instead of standard output")


def _add_family_options(parser):
    parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--r", type=int, default=None, help="integer order r")
    parser.add_argument("--k", type=int, default=None, help="integer polylogarithm index k")
    parser.add_argument("--s", type=int, default=None, help="nonnegative integer order s")
    parser.add_argument("--lambda", dest="lam", type=_excluding_one("lambda"),
                        default=None, metavar="RAT", help='rational != 1, e.g. "2" or "-3/5"')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbralcalc",
        description="Exact tables, evaluations, connection constants, and "
        "identity verification for the Frobenius-Euler / poly-Bernoulli "
        "polynomial families.",
        epilog=f"The {SLACK_ENV} environment variable overrides the default "
        "series truncation slack (2).",
    )
    _allow_negative_values(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a family coefficient table")
    _allow_negative_values(table)
    _add_family_options(table)
    table.add_argument("--n-max", type=int, required=True, help="largest degree")
    _add_output_options(table)
    table.set_defaults(handler=_run_table)

    evaluate = sub.add_parser("eval", help="evaluate one family polynomial at a point")
    _allow_negative_values(evaluate)
    _add_family_options(evaluate)
    evaluate.add_argument("--n", type=int, required=True, help="degree")
    evaluate.add_argument("--at", type=_rational, required=True, metavar="RAT",
                          help="evaluation point")
    _add_output_options(evaluate, with_format=False)
    evaluate.set_defaults(handler=_run_eval)

    verify = sub.add_parser(
        "verify",
        help="run identity verifiers; reports stream as JSON lines",
        description="Run the selected identity verifier (or all of them) "
        "over the sweep grid.  Exit status 0 exactly when every report "
        "passes.  Identities stated only from a minimum degree (thm4: "
        "n >= 2, thm5: n >= 1) default to that minimum; passing a smaller "
        "--n-min explicitly is an error for those ids, while 'all' clamps "
        "each verifier to its stated domain.",
    )
    _allow_negative_values(verify)
    verify.add_argument("identity", choices=IDENTITIES)
    verify.add_argument("--n-min", type=int, default=None)
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--r-set", type=_int_set, default=None, metavar="INTS",
                        help="comma-separated, e.g. --r-set=-2,-1,0,1")
    verify.add_argument("--k-set", type=_int_set, default=None, metavar="INTS")
    verify.add_argument("--s-set", type=_int_set, default=None, metavar="INTS")
    verify.add_argument("--lambda-set", type=_rational_set, default=None, metavar="RATS",
                        help="comma-separated rationals, e.g. --lambda-set=-1,2,1/2")
    verify.add_argument("--mu-set", type=_rational_set, default=None, metavar="RATS")
    verify.add_argument("--collect-all", action="store_true",
                        help="keep scanning after a failure and report every counterexample")
    verify.add_argument("--jobs", type=int, default=1,
                        help="grid parallelism degree (default: 1)")
    _add_output_options(verify, with_format=False)
    verify.set_defaults(handler=_run_verify)

    bases = sub.add_parser(
        "bases",
        help="emit connection constants of the mixed family in a target basis",
    )
    _allow_negative_values(bases)
    bases.add_argument("--target", choices=TARGETS, required=True)
    bases.add_argument("--n-max", type=int, required=True)
    bases.add_argument("--r", type=int, required=True)
    bases.add_argument("--k", type=int, required=True)
    bases.add_argument("--lambda", dest="lam", type=_excluding_one("lambda"),
                       required=True, metavar="RAT")
    bases.add_argument("--s", type=int, default=None)
    bases.add_argument("--mu", type=_excluding_one("mu"), default=None, metavar="RAT")
    _add_output_options(bases)
    bases.set_defaults(handler=_run_bases)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
