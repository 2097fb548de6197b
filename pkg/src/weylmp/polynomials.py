"""Exact univariate polynomials and the Meixner-Pollaczek machinery.

Two routes to the same polynomial family live here.

``mp_real_form(n, alpha)`` builds the degree-n rational polynomial

    Q_n^(alpha)(x) = sum_k C(n,k) * (-1)^k * (alpha - x/2)_k * (alpha + x/2)_{n-k}

directly from rising factorials of linear polynomials.  This is the real
combination n! * i^(-n) * P_n^(alpha)(i*x/2; pi/2) of the Meixner-Pollaczek
polynomial at angle pi/2, and it is the quantity every ordering identity
is phrased in, so it gets first-class status.

``mp_definition_eval(n, alpha, x)`` evaluates P_n^(alpha)(x; pi/2) by its
hypergeometric definition

    P_n^(alpha)(x; pi/2) = ((2*alpha)_n / n!) * i^n * 2F1[-n, alpha + i*x; 2*alpha; 2]

over the Gaussian rationals (the angle is hard-fixed at pi/2, where e^{i*phi}
is the exact scalar i and the 2F1 argument 1 - e^{-2*i*phi} is exactly 2).
The two routes are compared point by point in the identity harness.

``transformation_chain`` evaluates the three-stage rewrite connecting them:

    (2a)_n * 2F1[-n, a - x/2; 2a; 2]
        = (a + x/2)_n * 2F1[-n, a - x/2; 1 - n - a - x/2; -1]
        = Q_n^(a)(x)

The middle stage has a rational function of x hiding behind it: its lower
parameter can be a non-positive integer at isolated rational points even
though the limit value is finite.  We therefore evaluate it as an exact
ratio of polynomials in x and cancel the common factor when the denominator
vanishes; such cells are flagged as limit evaluations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .scalars import (
    I_UNIT,
    GaussianRational,
    binomial,
    factorial,
    i_power,
    pochhammer,
)

_SCALARS = (int, Fraction)


class ParameterError(ValueError):
    """A hypergeometric lower parameter hit a forbidden non-positive integer."""


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "_coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def coefficients(self) -> Iterator[Fraction]:
        """Coefficients in ascending degree order (empty for the zero poly)."""
        return iter(self._coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, _SCALARS):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, _SCALARS):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            (self[i] + other[i] for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial((-c for c in self._coeffs))

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, _SCALARS):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, _SCALARS):
            return Polynomial((Fraction(other) * c for c in self._coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __getitem__(self, index: int) -> Fraction:
        if 0 <= index < len(self._coeffs):
            return self._coeffs[index]
        return Fraction(0)

    def __call__(self, x):
        """Horner evaluation; x may be rational or Gaussian rational."""
        result = x * 0
        for coeff in reversed(self._coeffs):
            result = result * x + coeff
        return result

    def shift(self, offset) -> "Polynomial":
        """The composed polynomial f(x + offset)."""
        offset = Fraction(offset)
        result = Polynomial()
        base = Polynomial((offset, 1))
        for coeff in reversed(self._coeffs):
            result = result * base + coeff
        return result

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for deg in range(len(self._coeffs) - 1, -1, -1):
            coeff = self._coeffs[deg]
            if not coeff:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if deg == 0:
                body = str(magnitude)
            else:
                power = "x" if deg == 1 else f"x^{deg}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"<Polynomial {self}>"


X = Polynomial((0, 1))


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """Apply one of {add, sub, mul} to two polynomials."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def poly_shift(f: Polynomial, offset) -> Polynomial:
    return f.shift(offset)


def pochhammer_poly(base: Polynomial, length: int) -> Polynomial:
    """Rising factorial base*(base+1)*...*(base+length-1) of a polynomial."""
    if length < 0:
        raise ValueError("pochhammer_poly requires length >= 0")
    result = Polynomial((1,))
    for i in range(length):
        result = result * (base + i)
    return result


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of exact polynomial division by nonzero g."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    remainder = list(f.coefficients())
    quotient = [Fraction(0)] * max(len(remainder) - g.degree, 0)
    lead = g.leading_coefficient()
    gdeg = g.degree
    for top in range(len(remainder) - 1, gdeg - 1, -1):
        factor = remainder[top] / lead
        if factor:
            quotient[top - gdeg] = factor
            for j in range(gdeg + 1):
                remainder[top - gdeg + j] -= factor * g[j]
    return Polynomial(quotient), Polynomial(remainder)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals."""
    while not g.is_zero:
        _, r = poly_divmod(f, g)
        f, g = g, r
    if f.is_zero:
        return f
    return f * (1 / f.leading_coefficient())


# -- Meixner-Pollaczek at angle pi/2 -------------------------------------


def mp_real_form(n: int, alpha) -> Polynomial:
    """The real degree-n polynomial Q_n^(alpha)(x); see the module docstring."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    alpha = Fraction(alpha)
    half = Fraction(1, 2)
    minus = Polynomial((alpha, -half))  # alpha - x/2
    plus = Polynomial((alpha, half))  # alpha + x/2
    total = Polynomial()
    for k in range(n + 1):
        sign = -1 if k % 2 else 1
        total = total + (
            sign * binomial(n, k) * pochhammer_poly(minus, k) * pochhammer_poly(plus, n - k)
        )
    return total


def hyp2f1_terminating(n: int, b, c, z) -> GaussianRational:
    """The terminating series 2F1[-n, b; c; z] summed exactly to k = n.

    The upper parameter -n forces (-n)_k = 0 beyond k = n, so no convergence
    question arises.  Raises ParameterError if (c)_k vanishes for some
    k <= n, i.e. when c is a non-positive integer > -n.
    """
    if n < 0:
        raise ValueError("series order must be non-negative")
    b = GaussianRational.coerce(b)
    c = GaussianRational.coerce(c)
    z = GaussianRational.coerce(z)
    if c.is_real and c.re.denominator == 1 and -(n - 1) <= c.re <= 0:
        raise ParameterError(
            f"lower parameter {c} makes ({c})_k vanish before the series terminates"
        )
    total = GaussianRational(1)
    term = GaussianRational(1)
    for k in range(n):
        term = term * Fraction(-n + k) * (b + k) / (c + k) * z * Fraction(1, k + 1)
        total = total + term
    return total


def mp_definition_eval(n: int, alpha, x) -> GaussianRational:
    """P_n^(alpha)(x; pi/2) through the hypergeometric definition.

    With the angle fixed at pi/2 the phase e^{i*n*phi} is i^n and the series
    argument is exactly 2.
    """
    alpha = Fraction(alpha)
    x = GaussianRational.coerce(x)
    prefactor = pochhammer(2 * alpha, n) / factorial(n)
    series = hyp2f1_terminating(n, alpha + I_UNIT * x, 2 * alpha, 2)
    return prefactor * i_power(n) * series


def mp_via_definition_real(n: int, alpha, t) -> Fraction:
    """n! * i^(-n) * P_n^(alpha)(i*t/2; pi/2), which must be purely real.

    This is the definitional route to the same value as
    ``mp_real_form(n, alpha)(t)``; a nonzero imaginary part means the
    evaluator is broken, so it is an error rather than a verdict.
    """
    t = Fraction(t)
    value = factorial(n) * i_power(-n) * mp_definition_eval(
        n, alpha, GaussianRational(0, t / 2)
    )
    if value.im != 0:
        raise ArithmeticError(
            f"definitional evaluation produced nonzero imaginary part {value.im}"
        )
    return value.re


class ChainValues(NamedTuple):
    """The three stages of the hypergeometric transformation chain at x."""

    first: Fraction
    middle: Fraction
    closed: Fraction
    middle_is_limit: bool


def transformation_chain(n: int, alpha, x) -> ChainValues:
    """Evaluate all three chain stages exactly at rational x.

    The first stage is a plain terminating series.  The middle stage is
    evaluated as a ratio of polynomials in x so that points where its lower
    parameter degenerates (a removable singularity) still get their exact
    limit value; ``middle_is_limit`` records when that fallback fired.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    alpha = Fraction(alpha)
    x = Fraction(x)
    half = Fraction(1, 2)

    first_series = hyp2f1_terminating(n, alpha - x / 2, 2 * alpha, 2)
    if not first_series.is_real:
        raise ArithmeticError("real series produced an imaginary part")
    first = pochhammer(2 * alpha, n) * first_series.re

    # Middle stage as N(x)/D(x): multiply the k-th series term by
    # (c)_n / (c)_k = (c+k)_{n-k}, a polynomial, and keep D = (c)_n.
    b_poly = Polynomial((alpha, -half))  # alpha - x/2
    c_poly = Polynomial((1 - n - alpha, -half))  # 1 - n - alpha - x/2
    plus_poly = Polynomial((alpha, half))  # alpha + x/2
    series_numerator = Polynomial()
    for k in range(n + 1):
        coeff = Fraction(pochhammer(-n, k) * (-1) ** k, factorial(k))
        series_numerator = series_numerator + (
            coeff * pochhammer_poly(b_poly, k) * pochhammer_poly(c_poly + k, n - k)
        )
    numerator = pochhammer_poly(plus_poly, n) * series_numerator
    denominator = pochhammer_poly(c_poly, n)

    middle_is_limit = False
    den_value = denominator(x)
    if den_value != 0:
        middle = numerator(x) / den_value
    else:
        middle_is_limit = True
        common = poly_gcd(numerator, denominator)
        reduced_num, rem_num = poly_divmod(numerator, common)
        reduced_den, rem_den = poly_divmod(denominator, common)
        assert rem_num.is_zero and rem_den.is_zero
        den_value = reduced_den(x)
        if den_value == 0:
            raise ParameterError(
                f"middle stage has a genuine pole at x = {x} (n={n}, alpha={alpha})"
            )
        middle = reduced_num(x) / den_value

    closed = mp_real_form(n, alpha)(x)
    return ChainValues(first, middle, closed, middle_is_limit)
