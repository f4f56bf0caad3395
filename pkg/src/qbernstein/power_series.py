"""Truncated formal power series over the rationals.

Reading ``n! * a_n`` off a truncated series is the formal content of a
residue extraction, so generating-function identities can be checked
exactly with no complex integration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum(coefficients[i] * t**i)`` known modulo ``t**order``."""

    coefficients: tuple

    def __init__(self, coefficients: Sequence):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries(a + b for a, b in zip(self.coefficients[:m], other.coefficients[:m]))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(c * a for a in self.coefficients)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coefficients)}])"


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries([1] + [0] * (order - 1))


def exp_ct(c, order: int) -> TruncatedSeries:
    """``exp(c t)``: coefficient n is ``c**n / n!``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order):
        coeffs.append(coeffs[-1] * c / n)
    return TruncatedSeries(coeffs)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the shorter operand."""
    m = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    return TruncatedSeries(sum(ac[i] * bc[n - i] for i in range(n + 1)) for n in range(m))


def shift_mul_tk(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by ``t**k``; the order is unchanged, so the top k terms drop off."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return TruncatedSeries(([0] * k + list(a.coefficients))[: a.order])


def invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    if a.order == 0 or a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / a[0]
    b = [inv0]
    for n in range(1, a.order):
        b.append(-inv0 * sum(a[i] * b[n - i] for i in range(1, n + 1)))
    return TruncatedSeries(b)


def pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("k must be non-negative")
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def egf_coefficient(a: TruncatedSeries, n: int) -> Fraction:
    """``n! * a_n``; raises if the series was truncated below degree n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= a.order:
        raise IndexError(f"coefficient {n} requested from a series truncated at order {a.order}")
    return math.factorial(n) * a[n]
