# src/polynomial.py
"""Exact integer polynomials in one variable.

A polynomial is a tuple of coefficients indexed by degree, e.g.
(1, 3, 2) is 1 + 3x + 2x^2. Trailing zeros are trimmed, so the zero
polynomial is the empty tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable


def _normalize(coefficients: Iterable[int]) -> tuple[int, ...]:
    cs = list(coefficients)
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coefficients:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an integer")
        object.__setattr__(self, "coefficients", _normalize(self.coefficients))

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def binomial_power(cls, a: int, k: int) -> IntPolynomial:
        """(x + a)^k, expanded with exact binomial coefficients."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        return cls(tuple(comb(k, i) * a ** (k - i) for i in range(k + 1)))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def padded(self, length: int) -> tuple[int, ...]:
        """Coefficients of degrees 0..length-1, zero-filled."""
        return tuple(self.coefficient(k) for k in range(length))

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _promote(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_promote(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _promote(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _promote(other)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("exponent must be non-negative")
        result = IntPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def compose_shift(self, a: int) -> IntPolynomial:
        """p(x + a), by Horner's rule over polynomials."""
        shift = IntPolynomial((a, 1))
        result = IntPolynomial.zero()
        for c in reversed(self.coefficients):
            result = result * shift + c
        return result

    def __str__(self) -> str:
        terms = []
        for deg in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[deg]
            if c == 0:
                continue
            if deg == 0:
                terms.append(str(c))
            elif deg == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{deg}" if c == 1 else f"{c}*x^{deg}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _promote(value: IntPolynomial | int) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(value)
