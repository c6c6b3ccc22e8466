"""Dense univariate polynomials over exact rationals.

The polynomial family at the heart of the package is

    P(q; x) = 4 + c_q * x^(4q) * (1 - x)^(4q),       q = 1, 2, 3, ...

where c_q = (-1/4)^(q-1) is the unique coefficient for which x^2 + 1
divides P(q; x); equivalently P(q; i) = 4 + (-4)^q * c_q = 0.  Dividing
out x^2 + 1 and integrating the quotient over [0, 1] yields a rational
number close to pi, because the integral of 4/(x^2 + 1) over [0, 1] is pi
and the perturbation term is small on [0, 1].  For q = 1 the quotient is
4 - 4x^2 + 5x^4 - 4x^5 + x^6 and its integral is the classic 22/7.

Only division by the fixed divisor x^2 + 1 is provided; nothing here
needs general polynomial division.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import NamedTuple, Sequence, Union

from .errors import DomainError
from .exact import GaussianRational
from .special_values import divisibility_coefficient

Scalar = Union[Fraction, int]


class Polynomial:
    """Immutable dense polynomial; index k of ``coefficients`` is the
    coefficient of x^k.  Trailing zeros are trimmed on construction, so
    the zero polynomial is the empty tuple and ``degree`` is ``None``
    for it (never a sentinel number).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Sequence[Scalar] = ()) -> None:
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return Polynomial(summed)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (Fraction, int)):
            return Polynomial([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, point: "GaussianRational | Scalar"):
        """Exact Horner evaluation.

        A :class:`GaussianRational` argument produces a Gaussian-rational
        value (real arguments embed with zero imaginary part); a rational
        argument produces a rational.
        """
        if isinstance(point, GaussianRational):
            acc = GaussianRational(Fraction(0), Fraction(0))
            for c in reversed(self._coeffs):
                acc = acc * point + GaussianRational.from_real(c)
            return acc
        x = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs!r})"


X2_PLUS_1 = Polynomial((1, 0, 1))


class DivisionResult(NamedTuple):
    quotient: Polynomial
    remainder: Polynomial

    def reconstructs(self, dividend: Polynomial) -> bool:
        """Check the defining identity dividend = (x^2+1)*quotient + remainder."""
        return X2_PLUS_1 * self.quotient + self.remainder == dividend


def dalzell_polynomial(q: int) -> Polynomial:
    """The degree-8q polynomial 4 + c_q * x^(4q) * (1-x)^(4q).

    Coefficients come from the exact binomial expansion of (1-x)^(4q),
    shifted by x^(4q) and scaled by c_q = (-1/4)^(q-1).
    """
    if q < 1:
        raise DomainError(f"q must be a positive integer, got {q}")
    coeff = divisibility_coefficient(q)
    n = 4 * q
    coeffs = [Fraction(0)] * (8 * q + 1)
    coeffs[0] = Fraction(4)
    for j in range(n + 1):
        term = coeff * comb(n, j)
        coeffs[n + j] += -term if j % 2 else term
    return Polynomial(coeffs)


def divide_by_x2_plus_1(p: Polynomial) -> DivisionResult:
    """Exact long division by x^2 + 1, highest degree first.

    Always succeeds; the remainder has degree at most 1 and the
    reconstruction identity holds coefficientwise.
    """
    work = list(p.coefficients)
    quot = [Fraction(0)] * max(len(work) - 2, 0)
    for k in range(len(work) - 1, 1, -1):
        c = work[k]
        if c:
            quot[k - 2] = c
            work[k] = Fraction(0)
            work[k - 2] -= c
    return DivisionResult(Polynomial(quot), Polynomial(work[:2]))


def integrate_unit_interval(p: Polynomial) -> Fraction:
    """The exact integral of p over [0, 1]: sum of c_k / (k + 1)."""
    return sum((c / (k + 1) for k, c in enumerate(p.coefficients)), Fraction(0))
