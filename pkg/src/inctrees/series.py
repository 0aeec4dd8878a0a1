"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the coefficients ``c[0] .. c[N]`` of a power series
truncated at order ``N`` and keeps track of the order each result is
guaranteed to be valid to:

* sums and products are valid to the minimum order of the operands,
* differentiation loses one order, integration gains one,
* composition ``outer(inner)`` (``inner`` with zero constant term) and
  reversion keep the minimum order of the operands.

All coefficients are :class:`fractions.Fraction` values, so arithmetic is
exact; floats are rejected at construction.  Series are immutable and every
operation returns a fresh instance, which makes them safe to share between
threads.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def as_fraction(value: Scalar) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting inexact types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


def is_rational_square(value: Fraction) -> bool:
    """True if value is the square of a rational number."""
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


class Series:
    """Immutable truncated power series over exact rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar]):
        coeffs = tuple(as_fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series":
        return cls([as_fraction(value)] + [Fraction(0)] * order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series ``z`` at the given truncation order."""
        if order < 1:
            raise ValueError("identity series needs order >= 1")
        coeffs = [Fraction(0)] * (order + 1)
        coeffs[1] = Fraction(1)
        return cls(coeffs)

    # -- inspection ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def coefficient(self, index: int) -> Fraction:
        if not 0 <= index <= self.order:
            raise IndexError(
                f"coefficient {index} beyond guaranteed order {self.order}"
            )
        return self._coeffs[index]

    __getitem__ = coefficient

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 for the zero series)."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return self.order + 1

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(
                f"cannot extend guaranteed order {self.order} to {order}"
            )
        return Series(self._coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"Series([{shown}{tail}], order={self.order})"

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)]
        )

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series(
            [self._coeffs[i] - other._coeffs[i] for i in range(n + 1)]
        )

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs])

    def scale(self, factor: Scalar) -> "Series":
        f = as_fraction(factor)
        return Series([f * c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self._coeffs[i]
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return Series(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- calculus -----------------------------------------------------

    def differentiate(self) -> "Series":
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return Series(
            [i * self._coeffs[i] for i in range(1, self.order + 1)]
        )

    def integrate(self) -> "Series":
        """Antiderivative with zero constant term; order grows by one."""
        out = [Fraction(0)]
        out.extend(self._coeffs[i] / (i + 1) for i in range(self.order + 1))
        return Series(out)

    # -- composition and inverses --------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner(z)); inner must have zero constant term."""
        if inner._coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner_t = inner.truncate(n) if inner.order > n else inner
        result = Series.constant(self._coeffs[n], n)
        for k in range(n - 1, -1, -1):
            result = result * inner_t + Series.constant(self._coeffs[k], n)
        return result

    def reciprocal(self) -> "Series":
        a0 = self._coeffs[0]
        if a0 == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a0
        for i in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, i + 1):
                acc += self._coeffs[k] * out[i - k]
            out[i] = -acc / a0
        return Series(out)

    def sqrt(self) -> "Series":
        """Formal square root with positive constant coefficient."""
        a0 = self._coeffs[0]
        if not is_rational_square(a0) or a0 == 0:
            raise ValueError(
                "sqrt needs a constant term that is the square of a nonzero rational"
            )
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(isqrt(a0.numerator), isqrt(a0.denominator))
        for i in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, i):
                acc += out[k] * out[i - k]
            out[i] = (self._coeffs[i] - acc) / (2 * out[0])
        return Series(out)

    def reversion(self) -> "Series":
        """Compositional inverse g with self(g(z)) = z up to the truncation order."""
        if self._coeffs[0] != 0:
            raise ValueError("reversion needs a series with zero constant term")
        if self.order < 1 or self._coeffs[1] == 0:
            raise ValueError("reversion needs a nonzero linear coefficient")
        n = self.order
        a1 = self._coeffs[1]
        g = [Fraction(0)] * (n + 1)
        g[1] = 1 / a1
        for m in range(2, n + 1):
            # after fixing g[1..m-1], the z^m coefficient of self(g) is
            # off by a1 * g[m]
            err = self.truncate(m).compose(Series(g[: m + 1]))._coeffs[m]
            g[m] = -err / a1
        return Series(g)
