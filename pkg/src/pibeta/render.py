"""Exact decimal rendering and table emission.

Rendering is base-10 long division on the exact rational, never through a
float.  Tables come out in markdown, CSV (comma separator, ``.`` decimal
point, LF line endings), or JSON; in JSON every exact rational is
serialized as ``{"num": "<decimal string>", "den": "<decimal string>"}``
so consumers never lose precision to native number types.  Output is a
pure function of the inputs, byte-for-byte.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction

from .bounds import bracket_pi, pi_approximant
from .errors import DomainError
from .special_values import beta_int

MODES = ("truncate", "round_half_up")
TABLES = ("a_values", "beta_8p1", "beta_8p5", "bounds")
FORMATS = ("markdown", "csv", "json")

DEFAULT_MAX_Q = 1000


def max_q() -> int:
    """Cap on q, from PIBETA_MAX_Q (default 1000), to bound factorial sizes."""
    raw = os.environ.get("PIBETA_MAX_Q")
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"PIBETA_MAX_Q must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"PIBETA_MAX_Q must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class DecimalRendering:
    """A decimal string with exactly ``digits`` places after the point,
    produced by exact long division of ``source``."""

    source: Fraction
    digits: int
    mode: str
    text: str


def to_decimal(value: Fraction, digits: int, mode: str = "truncate") -> DecimalRendering:
    """Render an exact rational with exactly ``digits`` decimal places.

    ``truncate`` cuts the expansion; ``round_half_up`` rounds the last
    place, halves away from zero.  Negative values get a leading minus
    with the same digit contract applied to the magnitude.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    value = Fraction(value)
    num, den = abs(value.numerator), value.denominator
    scaled, rem = divmod(num * 10**digits, den)
    if mode == "round_half_up" and 2 * rem >= den:
        scaled += 1
    shift = 10**digits
    text = f"{scaled // shift}.{scaled % shift:0{digits}d}"
    if value < 0:
        text = "-" + text
    return DecimalRendering(source=value, digits=digits, mode=mode, text=text)


def _rational_json(value: Fraction) -> dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _table_rows(which: str, start: int, stop: int, digits: int):
    """(header, rows) pairs; row cells are strings except in JSON mode,
    where the caller re-serializes rationals."""
    if which == "a_values":
        header = ("p", "approximant")
        rows = [(p, pi_approximant(p)) for p in range(start, stop + 1)]
    elif which == "beta_8p1":
        header = ("p", "beta_8p1")
        rows = [(p, beta_int(8 * p + 1, 8 * p + 1).value) for p in range(start, stop + 1)]
    elif which == "beta_8p5":
        header = ("p", "beta_8p5")
        rows = [(p, beta_int(8 * p + 5, 8 * p + 5).value) for p in range(start, stop + 1)]
    else:
        header = ("q", "lower", "upper")
        rows = []
        for q in range(start, stop + 1):
            rec = bracket_pi(q)
            rows.append(
                (
                    q,
                    to_decimal(rec.lower, digits).text,
                    to_decimal(rec.upper, digits).text,
                )
            )
    return header, rows


def emit_table(
    which: str,
    start: int,
    stop: int,
    fmt: str = "csv",
    digits: int = 34,
) -> str:
    """Emit one table over an inclusive index range.

    ``a_values`` and the two Beta tables carry exact fraction strings;
    ``bounds`` rows carry truncated decimal renderings at ``digits``
    places.  The range must be nonempty and within 1..max_q().
    """
    if which not in TABLES:
        raise DomainError(f"table must be one of {TABLES}, got {which!r}")
    if fmt not in FORMATS:
        raise DomainError(f"format must be one of {FORMATS}, got {fmt!r}")
    cap = max_q()
    if start < 1 or stop > cap or start > stop:
        raise DomainError(
            f"range {start}..{stop} must be nonempty and within 1..{cap}"
        )
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")

    header, rows = _table_rows(which, start, stop, digits)

    if fmt == "json":
        payload: dict = {"table": which, "from": start, "to": stop}
        if which == "bounds":
            payload["digits"] = digits
            payload["mode"] = "truncate"
        out_rows = []
        for row in rows:
            cells: dict = {header[0]: row[0]}
            for key, cell in zip(header[1:], row[1:]):
                cells[key] = _rational_json(cell) if isinstance(cell, Fraction) else cell
            out_rows.append(cells)
        payload["rows"] = out_rows
        return json.dumps(payload, indent=2) + "\n"

    text_rows = [
        tuple(str(cell) for cell in row) for row in rows
    ]
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(row) for row in text_rows]
        return "\n".join(lines) + "\n"

    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    lines += ["| " + " | ".join(row) + " |" for row in text_rows]
    return "\n".join(lines) + "\n"
