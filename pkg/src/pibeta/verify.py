"""Bracket verification against the oracle and the bundled reference table.

For each q the recomputed bracket is compared, by exact rational
arithmetic, against the oracle's certified enclosure of pi; a bracket
"passes" only if it strictly contains the whole enclosure.  Where the
bundled reference table has a row, the recomputed endpoints are rendered
at the row's own printed precision (34 places) and compared, tolerating
one unit in the last place since the source's rounding convention is not
stated.  Rows annotated ``expected_inconsistent`` are known errata: they
are reported as mismatches without failing the run, and the report also
records whether the printed row even contains pi (the even-q errata do
not).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .bounds import ApproximationRecord, bracket_pi, bracket_width
from .errors import DomainError, PrecisionError
from .oracle import PiApproximation, pi_scaled
from .render import to_decimal

ORACLE_HEADROOM = 10

EXPECTED_CONSISTENT = "expected_consistent"
EXPECTED_INCONSISTENT = "expected_inconsistent"


@dataclass(frozen=True)
class ReferenceRow:
    """One row of a published table, with its consistency annotation."""

    table: str
    index: int
    consistency: str
    value: Fraction | None = None
    lower: str | None = None
    upper: str | None = None


def load_reference_tables() -> list[ReferenceRow]:
    """The reference rows bundled with the package."""
    raw = resources.files("pibeta.data").joinpath("reference_tables.json").read_text()
    rows = []
    for rec in json.loads(raw)["rows"]:
        rows.append(
            ReferenceRow(
                table=rec["table"],
                index=rec["index"],
                consistency=rec["consistency"],
                value=Fraction(rec["value"]) if "value" in rec else None,
                lower=rec.get("lower"),
                upper=rec.get("upper"),
            )
        )
    return rows


@dataclass(frozen=True)
class QVerification:
    """Verification outcome for a single q."""

    record: ApproximationRecord
    oracle_digits: int
    brackets_pi: bool
    reference_match: str  # "match" | "mismatch" | "absent"
    consistency: str | None  # annotation of the reference row, if any
    reference_contains_pi: bool | None  # None when no reference row exists


@dataclass(frozen=True)
class VerificationReport:
    """Per-q outcomes plus summary counts and the empirically determined
    rounding mode that reproduces the consistent reference rows."""

    q_min: int
    q_max: int
    digits: int
    oracle_digits: int
    entries: tuple[QVerification, ...]
    rounding_mode: str

    @property
    def all_bracket(self) -> bool:
        return all(e.brackets_pi for e in self.entries)

    @property
    def consistent_rows_match(self) -> bool:
        return all(
            e.reference_match == "match"
            for e in self.entries
            if e.consistency == EXPECTED_CONSISTENT
        )

    @property
    def ok(self) -> bool:
        return self.all_bracket and self.consistent_rows_match

    def counts(self) -> dict[str, int]:
        matches = sum(e.reference_match == "match" for e in self.entries)
        mismatches = sum(e.reference_match == "mismatch" for e in self.entries)
        absent = sum(e.reference_match == "absent" for e in self.entries)
        return {
            "q_values": len(self.entries),
            "brackets_ok": sum(e.brackets_pi for e in self.entries),
            "match": matches,
            "mismatch": mismatches,
            "absent": absent,
        }


def _scaled_digits(text: str) -> tuple[int, int]:
    """(value * 10^places, places) for a decimal string."""
    whole, frac = text.split(".")
    return int(whole + frac), len(frac)


def _compare_endpoint(value: Fraction, printed: str) -> tuple[bool, bool, bool]:
    """(within one ulp, exact under truncate, exact under round_half_up)
    at the printed precision."""
    printed_scaled, places = _scaled_digits(printed)
    trunc = to_decimal(value, places, "truncate").text
    rounded = to_decimal(value, places, "round_half_up").text
    ours_scaled, _ = _scaled_digits(trunc)
    close = abs(ours_scaled - printed_scaled) <= 1
    return close, trunc == printed, rounded == printed


def _printed_interval_contains(
    lower: str, upper: str, pi_interval: tuple[Fraction, Fraction]
) -> bool:
    """Whether the printed row can contain pi under any reading of its
    truncated digits (each printed endpoint stands for a real number
    within one ulp above it)."""
    _, places = _scaled_digits(lower)
    ulp = Fraction(1, 10**places)
    lo = Fraction(lower)
    hi = Fraction(upper) + ulp
    pi_lo, pi_hi = pi_interval
    return not (pi_lo > hi or pi_hi < lo)


def verify_report(
    q_max: int,
    digits: int = 35,
    fixtures: list[ReferenceRow] | None = None,
) -> VerificationReport:
    """Recompute brackets for q = 1..q_max and verify them.

    ``digits`` sets the oracle headroom: pi is obtained at
    ``digits + ORACLE_HEADROOM`` places, and must resolve the narrowest
    bracket with ten decimal orders to spare, otherwise a
    :class:`PrecisionError` says how many digits are needed.
    """
    if q_max < 1:
        raise DomainError(f"q_max must be >= 1, got {q_max}")
    if digits < 35:
        raise DomainError(f"digits must be >= 35, got {digits}")

    narrowest = bracket_width(q_max)
    if narrowest * 10**digits < 1:
        needed = 1
        while narrowest * 10**needed < 1:
            needed += 1
        raise PrecisionError(
            f"{digits} digits cannot resolve the q={q_max} bracket; need >= {needed}"
        )

    oracle_digits = digits + ORACLE_HEADROOM
    oracle: PiApproximation = pi_scaled(oracle_digits)
    pi_interval = oracle.as_interval()

    if fixtures is None:
        fixtures = load_reference_tables()
    bounds_rows = {
        row.index: row for row in fixtures if row.table == "bounds"
    }

    entries = []
    trunc_reproduces = True
    round_reproduces = True
    for q in range(1, q_max + 1):
        record = bracket_pi(q)
        brackets = record.lower < pi_interval[0] and pi_interval[1] < record.upper
        row = bounds_rows.get(q)
        if row is None:
            match, consistency, contains = "absent", None, None
        else:
            lo_close, lo_trunc, lo_round = _compare_endpoint(record.lower, row.lower)
            hi_close, hi_trunc, hi_round = _compare_endpoint(record.upper, row.upper)
            match = "match" if (lo_close and hi_close) else "mismatch"
            consistency = row.consistency
            contains = _printed_interval_contains(row.lower, row.upper, pi_interval)
            if consistency == EXPECTED_CONSISTENT:
                trunc_reproduces &= lo_trunc and hi_trunc
                round_reproduces &= lo_round and hi_round
        entries.append(
            QVerification(
                record=record,
                oracle_digits=oracle_digits,
                brackets_pi=brackets,
                reference_match=match,
                consistency=consistency,
                reference_contains_pi=contains,
            )
        )

    if round_reproduces and trunc_reproduces:
        mode = "both"
    elif round_reproduces:
        mode = "round_half_up"
    elif trunc_reproduces:
        mode = "truncate"
    else:
        mode = "neither"
    return VerificationReport(
        q_min=1,
        q_max=q_max,
        digits=digits,
        oracle_digits=oracle_digits,
        entries=tuple(entries),
        rounding_mode=mode,
    )


def format_report(report: VerificationReport) -> str:
    """Human-readable rendering of a report (stable, line-oriented)."""
    lines = [
        f"pi bracket verification, q = 1..{report.q_max}",
        f"oracle digits: {report.oracle_digits}",
        "  q  brackets_pi  reference",
    ]
    for entry in report.entries:
        q = entry.record.q
        flag = "ok " if entry.brackets_pi else "BAD"
        if entry.reference_match == "absent":
            ref = "absent"
        else:
            ref = f"{entry.reference_match} ({entry.consistency}"
            if entry.reference_contains_pi is False:
                ref += "; printed row misses pi"
            ref += ")"
        lines.append(f"{q:>3}  {flag}          {ref}")
    counts = report.counts()
    lines.append(
        "summary: {q_values} q values, {brackets_ok} bracket pi; reference rows: "
        "{match} match, {mismatch} mismatch, {absent} absent".format(**counts)
    )
    lines.append(
        f"rounding mode reproducing consistent rows: {report.rounding_mode}"
    )
    lines.append("result: " + ("PASS" if report.ok else "FAIL"))
    return "\n".join(lines) + "\n"
