"""Command-line interface.

Subcommands: ``bounds`` (one bracket), ``table`` (markdown/CSV/JSON table
emission), ``verify`` (recompute and audit against the bundled reference
rows), ``hyper`` (hypergeometric cross-check certificate).  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 usage or input
error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import bracket_pi, bracket_width, hypergeometric_bracket
from .errors import DomainError
from .render import emit_table, max_q, to_decimal
from .verify import format_report, verify_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

_TABLE_ALIASES = {
    "a": "a_values",
    "beta1": "beta_8p1",
    "beta2": "beta_8p5",
    "bounds": "bounds",
}
_FORMAT_ALIASES = {"md": "markdown", "csv": "csv", "json": "json"}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this tool reserves 2 for
    verification failures, so remap usage problems to 1."""

    def error(self, message: str) -> "typing.NoReturn":  # noqa: F821
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="pibeta",
        description="Exact rational brackets of pi from Dalzell-type integrals "
        "and integer Euler Beta values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="print one certified bracket")
    p_bounds.add_argument("--q", type=int, required=True)
    p_bounds.add_argument("--digits", type=int, default=34)
    p_bounds.add_argument("--mode", choices=("truncate", "round"), default="truncate")

    p_table = sub.add_parser("table", help="emit a table (markdown, csv, or json)")
    p_table.add_argument("--which", choices=sorted(_TABLE_ALIASES), required=True)
    p_table.add_argument("--from", dest="start", type=int, required=True)
    p_table.add_argument("--to", dest="stop", type=int, required=True)
    p_table.add_argument("--format", choices=sorted(_FORMAT_ALIASES), default="csv")
    p_table.add_argument("--digits", type=int, default=34)

    p_verify = sub.add_parser(
        "verify", help="recompute brackets and audit the bundled reference rows"
    )
    p_verify.add_argument("--q-max", type=int, required=True)
    p_verify.add_argument("--digits", type=int, default=35)

    p_hyper = sub.add_parser("hyper", help="hypergeometric cross-check certificate")
    p_hyper.add_argument("--q", type=int, required=True)
    p_hyper.add_argument("--terms", type=int, default=None)

    return parser


def _check_q(q: int) -> None:
    cap = max_q()
    if q < 1 or q > cap:
        raise DomainError(f"q must be within 1..{cap} (PIBETA_MAX_Q), got {q}")


def _run_bounds(args: argparse.Namespace) -> int:
    _check_q(args.q)
    mode = "round_half_up" if args.mode == "round" else "truncate"
    rec = bracket_pi(args.q)
    print(f"q = {rec.q}")
    print(f"coefficient = {rec.coefficient}")
    print(f"approximant = {rec.approximant}")
    print(f"beta_value = {rec.beta_value}")
    print(f"lower = {to_decimal(rec.lower, args.digits, mode).text}")
    print(f"upper = {to_decimal(rec.upper, args.digits, mode).text}")
    print(f"lower_exact = {rec.lower}")
    print(f"upper_exact = {rec.upper}")
    print(f"width = {rec.width}")
    return EXIT_OK


def _run_table(args: argparse.Namespace) -> int:
    out = emit_table(
        _TABLE_ALIASES[args.which],
        args.start,
        args.stop,
        fmt=_FORMAT_ALIASES[args.format],
        digits=args.digits,
    )
    sys.stdout.write(out)
    return EXIT_OK


def _run_verify(args: argparse.Namespace) -> int:
    _check_q(args.q_max)
    report = verify_report(args.q_max, digits=args.digits)
    sys.stdout.write(format_report(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _run_hyper(args: argparse.Namespace) -> int:
    _check_q(args.q)
    cert = hypergeometric_bracket(args.q, args.terms)
    print(f"q = {cert.q}")
    print(f"prefactor = {cert.prefactor}")
    print(f"n_terms = {cert.n_terms}")
    print(f"bracket_low = {cert.bracket_low}")
    print(f"bracket_high = {cert.bracket_high}")
    print(f"width = {cert.width}")
    print(f"target_width = {bracket_width(args.q)}")
    return EXIT_OK


_RUNNERS = {
    "bounds": _run_bounds,
    "table": _run_table,
    "verify": _run_verify,
    "hyper": _run_hyper,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except (DomainError, ZeroDivisionError) as exc:
        print(f"pibeta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
