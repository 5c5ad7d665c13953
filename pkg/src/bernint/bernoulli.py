"""Bernoulli numbers and polynomials over exact rationals.

The polynomial type is dense: coeffs[i] is the coefficient of x^i, stored in
canonical form (no trailing zeros; the zero polynomial has an empty tuple).
Bernoulli numbers use the B_1 = -1/2 convention and come from the recurrence
sum_{j=0}^{n-1} C(n+1, j) B_j = -(n+1) B_n; the polynomials from the
expansion B_n(x) = sum_j C(n, j) B_j x^{n-j}.  Both constructions are
cross-checked in the test suite against an exact power-series expansion of
t*e^{xt}/(e^t - 1), which is the defining generating function.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Union

from . import kernels

Scalar = Union[int, Fraction]

__all__ = [
    "DEFAULT_CACHE",
    "BernoulliCache",
    "Polynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
]


class Polynomial:
    """Immutable dense polynomial in one variable with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at x by Horner's rule."""
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self._coeffs):
            out = out * x + c
        return out

    def _as_int_coeffs(self) -> tuple[list[int], int]:
        # common-denominator form used by the convolution kernel
        den = math.lcm(*(c.denominator for c in self._coeffs)) if self._coeffs else 1
        return [c.numerator * (den // c.denominator) for c in self._coeffs], den

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return Polynomial([other]) + (-self)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial([c * a for a in self._coeffs])
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        na, da = self._as_int_coeffs()
        nb, db = other._as_int_coeffs()
        den = da * db
        return Polynomial(Fraction(n, den) for n in kernels.convolve(na, nb))

    __rmul__ = __mul__

    def derivative(self) -> Polynomial:
        """Formal derivative."""
        return Polynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def antiderivative(self) -> Polynomial:
        """The antiderivative P with P(0) = 0."""
        return Polynomial([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self._coeffs)])

    def integrate(self, lo: Scalar, hi: Scalar) -> Fraction:
        """Exact definite integral over [lo, hi]."""
        anti = self.antiderivative()
        return anti(hi) - anti(lo)

    def compose(self, inner: Polynomial) -> Polynomial:
        """The polynomial self(inner(x))."""
        out = Polynomial()
        for c in reversed(self._coeffs):
            out = out * inner + c
        return out


class BernoulliCache:
    """Grow-only memo of Bernoulli numbers B_0, B_1, ... as Fractions.

    Extending the table never changes existing entries, so concurrent reads
    are safe; growth itself is serialized by an internal lock.  One shared
    instance (`DEFAULT_CACHE`) backs the whole package by default.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def number(self, k: int) -> Fraction:
        """Return B_k, growing the table if needed."""
        if k < 0:
            raise ValueError(f"Bernoulli numbers are indexed by k >= 0 (got {k})")
        values = self._values
        if k < len(values):
            return values[k]
        with self._lock:
            while len(values) <= k:
                n = len(values)
                s = sum(math.comb(n + 1, j) * values[j] for j in range(n))
                values.append(Fraction(-s, n + 1))
        return values[k]


DEFAULT_CACHE = BernoulliCache()


def bernoulli_number(k: int, cache: BernoulliCache | None = None) -> Fraction:
    """The Bernoulli number B_k (B_1 = -1/2 convention)."""
    return (cache or DEFAULT_CACHE).number(k)


def bernoulli_polynomial(k: int, cache: BernoulliCache | None = None) -> Polynomial:
    """The Bernoulli polynomial B_k(x) with exact rational coefficients."""
    if k < 0:
        raise ValueError(f"Bernoulli polynomials are indexed by k >= 0 (got {k})")
    cache = cache or DEFAULT_CACHE
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        coeffs[k - j] = math.comb(k, j) * cache.number(j)
    return Polynomial(coeffs)
