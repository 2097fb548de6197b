"""Exact scalar arithmetic.

Every coefficient in this package is either a rational number or a Gaussian
rational (a + b*i with rational a, b).  Rationals are ``fractions.Fraction``,
which is always stored normalized, so equality of coefficients is structural
and identity checks elsewhere reduce to comparing term maps.  Gaussian
rationals exist because the hypergeometric definition of the Meixner-Pollaczek
polynomials at angle pi/2 involves powers of the imaginary unit and nothing
else that is transcendental; arbitrary angles are rejected by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]


def rational(num: int, den: int = 1) -> Fraction:
    """Exact rational constructor; raises ZeroDivisionError on den == 0."""
    return Fraction(num, den)


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply one of {add, sub, mul, div} to two rationals, exactly."""
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b  # ZeroDivisionError on b == 0
    raise ValueError(f"unknown operation {op!r}")


class GaussianRational:
    """A Gaussian rational re + im*i with i*i = -1, exact in both parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        conj = other.conjugate()
        prod = self * conj
        return GaussianRational(prod.re / norm, prod.im / norm)

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return GaussianRational(1) / self ** (-exponent)
        result = GaussianRational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        unit = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        if self.re == 0:
            return unit if self.im > 0 else f"-{unit}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{unit}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


I_UNIT = GaussianRational(0, 1)


def gaussian_arith(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    """Apply one of {add, sub, mul, div} to two Gaussian rationals, exactly."""
    a, b = GaussianRational.coerce(a), GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def i_power(exponent: int) -> GaussianRational:
    """i**exponent for any integer exponent, including negative ones."""
    return (GaussianRational(1), I_UNIT, GaussianRational(-1), -I_UNIT)[exponent % 4]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the usual zero extension for k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def pochhammer(x, length: int):
    """Rising factorial x(x+1)...(x+length-1); empty product is 1.

    Works for any scalar supporting + int and *, i.e. int, Fraction and
    GaussianRational; the result has the same type as x.
    """
    if length < 0:
        raise ValueError("pochhammer requires length >= 0")
    result = x * 0 + 1
    for i in range(length):
        result = result * (x + i)
    return result
