"""Integer-argument Euler Beta values and the divisibility coefficient.

For positive integers r, s the Euler Beta function reduces to a ratio of
factorials, B(r, s) = (r-1)! (s-1)! / (r+s-1)!, which is computed here
exactly.  The underlying integral of x^(r-1) (1-x)^(s-1) over [0, 1]
converges only for positive arguments, so nonpositive r or s is a domain
error.  The symmetric value B(4q+1, 4q+1) is the integral of
x^(4q) (1-x)^(4q) over [0, 1] and sets the scale of every bracketing
interval in :mod:`pibeta.bounds`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import factorial


@dataclass(frozen=True)
class BetaValue:
    """An exact integer-argument Beta value, tagged with its arguments so
    table emitters can label rows without recomputation."""

    r: int
    s: int
    value: Fraction


def beta_int(r: int, s: int) -> BetaValue:
    """B(r, s) for positive integers, via the factorial formula."""
    if r < 1 or s < 1:
        raise DomainError(
            f"beta_int requires positive integer arguments, got ({r}, {s})"
        )
    value = Fraction(factorial(r - 1) * factorial(s - 1), factorial(r + s - 1))
    return BetaValue(r=r, s=s, value=value)


def divisibility_coefficient(q: int) -> Fraction:
    """(-1/4)^(q-1): the unique coefficient of x^(4q) (1-x)^(4q) that makes
    x^2 + 1 divide the degree-8q polynomial of :mod:`pibeta.polynomial`.

    Positive exactly when q is odd.
    """
    if q < 1:
        raise DomainError(f"q must be a positive integer, got {q}")
    return Fraction(-1, 4) ** (q - 1)


def central_beta(q: int) -> BetaValue:
    """B(4q+1, 4q+1), the exact integral of x^(4q) (1-x)^(4q) over [0, 1]."""
    if q < 1:
        raise DomainError(f"q must be a positive integer, got {q}")
    return beta_int(4 * q + 1, 4 * q + 1)
