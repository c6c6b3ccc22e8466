"""Exact arithmetic substrate: rationals, big integers, Gaussian rationals.

Every scalar in this package is exact.  Rationals are
``fractions.Fraction`` values (arbitrary-precision, kept normalized with a
positive denominator and coprime numerator/denominator), integers are
Python's unbounded ``int``, and points off the real line are
:class:`GaussianRational` pairs of rationals.  No floating-point type
appears anywhere in the computation paths.

Field arithmetic on rationals is the native ``+ - * /`` of ``Fraction``;
division by zero raises ``ZeroDivisionError``.  :func:`rat_cmp` supplies
the three-way ordering that Python 3 dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial as _math_factorial

Rational = Fraction


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    """Build a normalized rational; the sign ends up on the numerator.

    Raises ``ZeroDivisionError`` for a zero denominator.
    """
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numerator, denominator)


def rat_cmp(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1 if a < b, 0 if a == b, +1 if a > b."""
    if a < b:
        return -1
    return 1 if a > b else 0


def rat_pow(base: Fraction, exponent: int) -> Fraction:
    """Exact integer power of a rational; ``base ** 0 == 1``.

    Raises ``ZeroDivisionError`` when zero is raised to a negative power.
    """
    if base == 0 and exponent < 0:
        raise ZeroDivisionError("zero raised to a negative power")
    return Fraction(base) ** exponent


def factorial(n: int) -> int:
    """Exact n! for n >= 0 (raises ``ValueError`` on negative input)."""
    return _math_factorial(n)


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Arithmetic is componentwise-exact; there is deliberately no division,
    absolute value, or float conversion.  Used to evaluate polynomials at
    the imaginary unit, where a zero value witnesses divisibility by
    x^2 + 1.
    """

    re: Fraction
    im: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def from_real(cls, value: Fraction | int) -> "GaussianRational":
        return cls(Fraction(value), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"


I = GaussianRational(Fraction(0), Fraction(1))
MINUS_I = GaussianRational(Fraction(0), Fraction(-1))
