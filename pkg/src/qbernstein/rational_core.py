"""Exact q-numbers, q-factorials and Gaussian binomials.

Rationals are :class:`fractions.Fraction`. An evaluation point is stored as
``(q, X)`` with ``X = q**x``, so every quantity that depends on ``x`` only
through ``q**x`` (``[x]_q``, ``[1-x]_q``, ``[x-j]_q``) stays rational.

The helpers are written against plain arithmetic, so the same functions
accept a :class:`FloatPoint` (or float ``q``) and return floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction.

    Floats are rejected: a binary float is almost never the rational the
    caller meant.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing to coerce float {value!r} to an exact rational")
    return Fraction(value)


@dataclass(frozen=True)
class QPoint:
    """Exact evaluation point: ``q`` and ``X = q**x`` for an implicit x in [0, 1]."""

    q: Fraction
    X: Fraction

    def __post_init__(self):
        q = as_rational(self.q)
        X = as_rational(self.X)
        if not 0 < q < 1:
            raise ValueError(f"q must lie in (0, 1), got {q}")
        if not q <= X <= 1:
            raise ValueError(f"X = q**x must lie in [q, 1] = [{q}, 1], got {X}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "X", X)

    @classmethod
    def from_power(cls, q, num: int, den: int = 1) -> "QPoint":
        """Point at x = num/den, valid only when q**x is rational.

        ``q`` must be a perfect ``den``-th power of a rational.
        """
        q = as_rational(q)
        if den <= 0 or not 0 <= num <= den:
            raise ValueError("x = num/den must lie in [0, 1]")
        root = Fraction(_exact_root(q.numerator, den), _exact_root(q.denominator, den))
        return cls(q, root**num)

    def to_float(self) -> "FloatPoint":
        q = float(self.q)
        x = math.log(self.X) / math.log(self.q) if self.X != 1 else 0.0
        return FloatPoint(q, x)

    def __str__(self) -> str:
        return f"q={self.q},X={self.X}"


def _exact_root(n: int, k: int) -> int:
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    raise ValueError(f"{n} is not a perfect {k}-th power")


@dataclass(frozen=True)
class FloatPoint:
    """Floating evaluation point ``(q, x)``; ``X`` is derived as ``q**x``."""

    q: float
    x: float

    def __post_init__(self):
        if not 0.0 < self.q < 1.0:
            raise ValueError(f"q must lie in (0, 1), got {self.q}")
        if not 0.0 <= self.x <= 1.0:
            raise ValueError(f"x must lie in [0, 1], got {self.x}")

    @property
    def X(self) -> float:
        # float pow is exact at x in {0, 1}, which keeps endpoint values exact
        return self.q**self.x

    def __str__(self) -> str:
        return f"q={self.q!r},x={self.x!r}"


def q_number(p):
    """``[x]_q = (1 - q**x) / (1 - q)``."""
    return (1 - p.X) / (1 - p.q)


def q_complement(p):
    """``[1-x]_q``, using ``q**(1-x) = q / X``."""
    return (1 - p.q / p.X) / (1 - p.q)


def q_shifted(p, j: int):
    """``[x-j]_q``; negative once ``x < j``."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return (1 - p.X / p.q**j) / (1 - p.q)


def q_int(n: int, q):
    """``[n]_q = 1 + q + ... + q**(n-1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    total = 0 * q
    term = 1
    for _ in range(n):
        total += term
        term *= q
    return total


def q_factorial(k: int, q):
    result = 1 + 0 * q
    for i in range(1, k + 1):
        result *= q_int(i, q)
    return result


def gaussian_binomial(n: int, k: int, q):
    """Gaussian binomial by the q-Pascal rule ``C(n,k) = C(n-1,k-1) + q**k C(n-1,k)``."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return 0 * q
    return _gaussian_row(n, q)[k]


@lru_cache(maxsize=1024, typed=True)
def _gaussian_row(n: int, q) -> tuple:
    row = [1 + 0 * q]
    for m in range(1, n + 1):
        nxt = [1 + 0 * q] * (m + 1)
        for k in range(1, m):
            nxt[k] = row[k - 1] + q**k * row[k]
        row = nxt
    return tuple(row)


def gaussian_binomial_quotient(n: int, k: int, q):
    """Factorial-quotient form ``[n]! / ([k]! [n-k]!)``; cross-check only."""
    if k > n:
        return 0 * q
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q))


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


def q_x_binomial(p, k: int):
    """``[x choose k]_q = [x]_q [x-1]_q ... [x-k+1]_q / [k]_q!``."""
    num = 1
    for j in range(k):
        num *= q_shifted(p, j)
    return num / q_factorial(k, p.q)
