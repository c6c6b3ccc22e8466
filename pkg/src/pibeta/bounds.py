"""Certified rational brackets of pi, one per positive integer q.

Pipeline for a given q: build the degree-8q polynomial
4 + c_q x^(4q) (1-x)^(4q), divide out x^2 + 1 (the remainder must vanish;
a nonzero remainder is an internal bug, not bad input), and integrate the
quotient over [0, 1].  The result A(q) is an exact rational, and

    A(q) - pi = c_q * J(q),   J(q) = integral of x^(4q)(1-x)^(4q) / (x^2+1)

with K(q)/2 < J(q) < K(q) for K(q) = B(4q+1, 4q+1), since 1 < x^2+1 < 2
on (0, 1).  Both endpoints of the bracket are therefore

    e1 = A(q) - c_q * K(q),    e2 = A(q) - c_q * K(q) / 2,

and pi lies strictly between min(e1, e2) and max(e1, e2).  Assembling
endpoints by min/max instead of branching on the parity of q (which only
flips the sign of c_q) removes the entire class of parity mix-ups; the
bundled reference table contains exactly such a mix-up in its even rows,
which :mod:`pibeta.verify` detects.

The independent cross-check :func:`hypergeometric_bracket` re-derives
A(q) - pi from a closed form: a rational prefactor obtained by reducing
sqrt(pi) * Gamma(4q+1) / (2^(10q-1) * Gamma(4q+3/2)) through the
half-integer Gamma identity Gamma(m + 1/2) = ((2m-1)!! / 2^m) sqrt(pi),
times a 3F2-type alternating series at unit negative argument whose
terms strictly shrink, so consecutive partial sums bracket the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InternalConsistencyError
from .exact import factorial
from .polynomial import dalzell_polynomial, divide_by_x2_plus_1, integrate_unit_interval
from .special_values import central_beta, divisibility_coefficient

MAX_AUTO_TERMS = 10000


@dataclass(frozen=True)
class ApproximationRecord:
    """Everything the bracket for one q is made of: the coefficient c_q,
    the rational approximant A(q), the Beta scale K(q), and the certified
    endpoints lower < pi < upper."""

    q: int
    coefficient: Fraction
    approximant: Fraction
    beta_value: Fraction
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower


@dataclass(frozen=True)
class HypergeomCertificate:
    """Alternating-series enclosure of A(q) - pi from the closed form.

    ``bracket_low <= A(q) - pi <= bracket_high`` is guaranteed by the
    strict alternation and strict magnitude decrease of the series terms;
    the width shrinks as ``n_terms`` grows.
    """

    q: int
    prefactor: Fraction
    n_terms: int
    bracket_low: Fraction
    bracket_high: Fraction

    @property
    def width(self) -> Fraction:
        return self.bracket_high - self.bracket_low


def pi_approximant(q: int) -> Fraction:
    """A(q): the exact integral of the divided polynomial over [0, 1].

    22/7 for q = 1, 47171/15015 for q = 2, and so on.
    """
    quotient, remainder = divide_by_x2_plus_1(dalzell_polynomial(q))
    if not remainder.is_zero:
        raise InternalConsistencyError(
            f"x^2 + 1 failed to divide the q={q} polynomial; remainder {remainder!r}"
        )
    return integrate_unit_interval(quotient)


def bracket_pi(q: int) -> ApproximationRecord:
    """The certified bracket lower < pi < upper for one q."""
    coeff = divisibility_coefficient(q)
    approx = pi_approximant(q)
    kval = central_beta(q).value
    e1 = approx - coeff * kval
    e2 = approx - coeff * kval / 2
    return ApproximationRecord(
        q=q,
        coefficient=coeff,
        approximant=approx,
        beta_value=kval,
        lower=min(e1, e2),
        upper=max(e1, e2),
    )


def bracket_width(q: int) -> Fraction:
    """|c_q| * K(q) / 2, the exact width of the q-th bracket."""
    return abs(divisibility_coefficient(q)) * central_beta(q).value / 2


def _double_factorial_odd(m: int) -> int:
    """1 * 3 * 5 * ... * m for odd m."""
    result = 1
    for i in range(3, m + 1, 2):
        result *= i
    return result


def hypergeometric_bracket(q: int, n_terms: int | None = None) -> HypergeomCertificate:
    """Enclose A(q) - pi by the closed form, independently of K(q).

    The prefactor is (-1)^(q+1) * 2^(4q+1) * (4q)! / (2^(10q-1) * (8q+1)!!),
    the exact rational reduction of the Gamma-quotient form.  Series term
    n carries rising factorials (2q+1/2)_n (2q+1)_n over
    (4q+1)_n (4q+3/2)_n with alternating sign; successive magnitudes
    strictly decrease, so the last two partial sums bracket the limit.

    With ``n_terms=None`` the series is extended until the enclosure is
    narrower than one hundredth of the bracket width for the same q
    (capped at ``MAX_AUTO_TERMS``); an explicit ``n_terms`` must be at
    least 2, the minimum that yields two partial sums.
    """
    if q < 1:
        raise DomainError(f"q must be a positive integer, got {q}")
    if n_terms is not None and n_terms < 2:
        raise DomainError(f"need at least 2 series terms for a bracket, got {n_terms}")

    sign = 1 if q % 2 else -1
    prefactor = Fraction(
        sign * 2 ** (4 * q + 1) * factorial(4 * q),
        2 ** (10 * q - 1) * _double_factorial_odd(8 * q + 1),
    )

    target = None if n_terms is not None else bracket_width(q) / 100
    upper_a = Fraction(4 * q + 1, 2)  # 2q + 1/2
    upper_b = Fraction(2 * q + 1)
    lower_a = Fraction(4 * q + 1)
    lower_b = Fraction(8 * q + 3, 2)  # 4q + 3/2

    term = Fraction(1)
    partial_prev = Fraction(0)
    partial = term
    count = 1
    while True:
        if n_terms is not None:
            if count == n_terms:
                break
        elif count >= 2 and (
            abs(prefactor) * abs(term) < target or count >= MAX_AUTO_TERMS
        ):
            break
        n = count - 1
        term *= -((upper_a + n) * (upper_b + n)) / ((lower_a + n) * (lower_b + n))
        partial_prev, partial = partial, partial + term
        count += 1

    low, high = sorted((prefactor * partial_prev, prefactor * partial))
    return HypergeomCertificate(
        q=q, prefactor=prefactor, n_terms=count, bracket_low=low, bracket_high=high
    )
