"""Independent fixed-point approximation of pi with a certified error bound.

The oracle exists solely to *check* the rational brackets produced
elsewhere; no bracket computation ever reads from it, and nothing here
reads Beta values or polynomials.  It uses Machin's two-term formula

    pi = 16 * arctan(1/5) - 4 * arctan(1/239)

in pure integer arithmetic, because its error analysis is elementary:
the arctangent series alternates, so truncation is bounded by the first
omitted term, and every rounding step is accounted for explicitly below.

Everything is scaled-integer (fixed point) rather than rational: the
oracle's contract is a digit count with a one-ulp guarantee, and exact
rational partial sums would drag along enormous denominators for no
benefit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalConsistencyError

GUARD_DIGITS = 10

# Internal headroom for arctan_recip_scaled: each series term is floored
# once, so the accumulated error is below the term count, which stays
# under 10^8 / 2 for any scale below ~10^(10^7) digits.
_ARCTAN_GUARD = 10**8


@dataclass(frozen=True)
class PiApproximation:
    """floor(pi * 10^digits), guaranteed to within ``max_error_ulp`` units
    in the last place."""

    digits: int
    scaled_value: int
    max_error_ulp: int

    def as_interval(self) -> tuple[Fraction, Fraction]:
        """A certified rational enclosure of pi."""
        denom = 10**self.digits
        return (
            Fraction(self.scaled_value - self.max_error_ulp, denom),
            Fraction(self.scaled_value + self.max_error_ulp, denom),
        )

    def decimal_string(self) -> str:
        scale = 10**self.digits
        return f"{self.scaled_value // scale}.{self.scaled_value % scale:0{self.digits}d}"


def arctan_recip_scaled(k: int, scale: int) -> int:
    """Round(scale * arctan(1/k)) with error at most 1 in the last digit.

    Sums the alternating series sum_n (-1)^n / ((2n+1) k^(2n+1)) at
    ``scale * 10^8`` working precision, with exact powers of k so each
    term is floored exactly once, then rounds half-up back to ``scale``.
    Error budget: N floored terms lose under N, the truncated tail is
    below the first omitted term (alternating series), and final rounding
    adds 1/2; with N < 10^8 / 2 the total stays under one ulp of ``scale``.
    """
    if k < 2:
        raise DomainError(f"arctan series needs k >= 2, got {k}")
    if scale < 10 or 10 ** (len(str(scale)) - 1) != scale:
        raise DomainError(f"scale must be a power of ten >= 10, got {scale}")
    work = scale * _ARCTAN_GUARD
    total = 0
    sign = 1
    n = 0
    kpow = k
    ksq = k * k
    while True:
        term = work // (kpow * (2 * n + 1))
        if term == 0:
            break
        total += sign * term
        sign = -sign
        n += 1
        kpow *= ksq
    quot, rem = divmod(total, _ARCTAN_GUARD)
    return quot + (1 if 2 * rem >= _ARCTAN_GUARD else 0)


def pi_scaled(digits: int) -> PiApproximation:
    """floor(pi * 10^digits) with at most one ulp of uncertainty.

    Evaluates the Machin combination with ``GUARD_DIGITS`` extra decimal
    places (combination error at most 16 + 4 = 20 ulp of the guard scale)
    and floors the guard digits away.  The floor is provably exact as long
    as the guard-scale remainder sits at least 100 away from a power-of-ten
    boundary; if pi's digit tail ever lands that close, the guard is
    widened and the computation repeated.
    """
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    for extra in (0, 10, 20, 40):
        guard = GUARD_DIGITS + extra
        guard_scale = 10 ** (digits + guard)
        combined = 16 * arctan_recip_scaled(5, guard_scale) - 4 * arctan_recip_scaled(
            239, guard_scale
        )
        shift = 10**guard
        scaled, rem = divmod(combined, shift)
        if 100 <= rem <= shift - 100:
            return PiApproximation(digits=digits, scaled_value=scaled, max_error_ulp=1)
    raise InternalConsistencyError(
        f"pi * 10^{digits} sits implausibly close to an integer"
    )
