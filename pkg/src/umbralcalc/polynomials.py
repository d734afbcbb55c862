"""Exact rational scalars and dense univariate polynomials in x.

Scalars are `fractions.Fraction` throughout, which already maintains the
canonical form this library relies on (positive denominator, reduced to
lowest terms, zero as 0/1), so equality is plain structural comparison.

A polynomial is stored dense, lowest power first, trailing zeros trimmed.
The zero polynomial has an empty coefficient tuple and degree -1.  Values
are immutable: every operation returns a new polynomial, so instances can
be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Polynomial",
    "X",
    "falling_factorial",
    "rising_factorial",
    "parse_rational",
    "format_rational",
    "to_json_value",
]


def parse_rational(text: str) -> Fraction:
    """Parse a rational written as "p/q" (or just "p")."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Scalar) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


class Polynomial:
    """Dense univariate polynomial over the rationals.

    Supports the full ring interface (+, -, *, **), exact scalar division,
    evaluation via call syntax, `shift` (composition with x + c), and the
    formal `derivative`.  Scalars (int, Fraction) mix freely on either side
    of the arithmetic operators; a constant polynomial compares equal to
    the scalar it represents.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        items = [Fraction(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self._coeffs = tuple(items)

    @classmethod
    def _make(cls, items: list) -> "Polynomial":
        # internal fast path: items are already exact scalars
        while items and not items[-1]:
            items.pop()
        poly = cls.__new__(cls)
        poly._coeffs = tuple(items)
        return poly

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        """Return coeff * x**power."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0] * power + [coeff])

    @property
    def coefficients(self) -> tuple:
        """Coefficients lowest power first, trailing zeros trimmed."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x**power (zero beyond the degree)."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __call__(self, point: Scalar) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def shift(self, offset: Scalar) -> "Polynomial":
        """Return p(x + offset), computed by binomial expansion."""
        c = Fraction(offset)
        if not c or not self._coeffs:
            return self
        out = [Fraction(0)] * len(self._coeffs)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            power = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += a * comb(i, j) * power
                power *= c
        return Polynomial._make(out)

    def derivative(self) -> "Polynomial":
        """Formal derivative."""
        return Polynomial._make([k * c for k, c in enumerate(self._coeffs) if k])

    def __add__(self, other):
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] += c
            return Polynomial._make(out)
        if isinstance(other, (int, Fraction)):
            out = list(self._coeffs) or [Fraction(0)]
            out[0] += other
            return Polynomial._make(out)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make([-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            return self + (-other if isinstance(other, Polynomial) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self._coeffs, other._coeffs
            if not a or not b:
                return Polynomial()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
            return Polynomial._make(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial._make([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        # scalar / polynomial: defined only for nonzero constants, which are
        # the invertible elements of the polynomial ring
        if isinstance(other, (int, Fraction)):
            if self.degree > 0:
                raise ValueError("only constant polynomials are invertible")
            if not self._coeffs:
                raise ZeroDivisionError("division by the zero polynomial")
            return Fraction(other) / self._coeffs[0]
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            if not self._coeffs:
                return other == 0
            return len(self._coeffs) == 1 and self._coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # constant polynomials hash like the scalar they equal
        if len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else Fraction(0))
        return hash(self._coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


#: The polynomial x.
X = Polynomial((0, 1))


def falling_factorial(n: int) -> Polynomial:
    """x(x-1)...(x-n+1); the constant 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Polynomial([1])
    for i in range(n):
        result = result * Polynomial([-i, 1])
    return result


def rising_factorial(n: int) -> Polynomial:
    """x(x+1)...(x+n-1); the constant 1 for n = 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Polynomial([1])
    for i in range(n):
        result = result * Polynomial([i, 1])
    return result


def to_json_value(value):
    """JSON form of a ring element: "p/q" for rationals, a coefficient
    list (lowest power first) for polynomials."""
    if isinstance(value, Polynomial):
        return [str(c) for c in value.coefficients]
    return str(Fraction(value))
