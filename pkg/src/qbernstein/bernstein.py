"""Classical and modified q-Bernstein bases and the modified q-Bernstein operator.

``B_{k,n}(x, q) = C(n, k) [x]_q**k [1-x]_q**(n-k)``, zero for ``k > n``.
Every identity below is written as an independent evaluation of one side,
so tests can compare it with :func:`q_basis` exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import power_series as ps
from .rational_core import QPoint, FloatPoint, binomial, q_complement, q_number


class DomainError(ValueError):
    """An identity was evaluated at a point where one of its factors is singular."""


@dataclass(frozen=True)
class BasisValue:
    k: int
    n: int
    point: QPoint
    value: Fraction


@dataclass(frozen=True)
class SampledFunction:
    """Samples ``f(j/n)`` for ``j = 0..n``."""

    n: int
    samples: tuple

    def __post_init__(self):
        if len(self.samples) != self.n + 1:
            raise ValueError(f"need {self.n + 1} samples, got {len(self.samples)}")
        object.__setattr__(self, "samples", tuple(self.samples))

    @classmethod
    def from_callable(cls, f, n: int) -> "SampledFunction":
        """Sample ``f`` at ``Fraction(j, n)``; f decides whether values stay exact."""
        if n == 0:
            return cls(0, (f(Fraction(0)),))
        return cls(n, tuple(f(Fraction(j, n)) for j in range(n + 1)))


def classical_basis(k: int, n: int, x):
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if k > n:
        return 0 * x
    return binomial(n, k) * x**k * (1 - x) ** (n - k)


def q_basis(k: int, n: int, p):
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    if k > n:
        return 0 * p.q
    return binomial(n, k) * q_number(p) ** k * q_complement(p) ** (n - k)


def basis_value(k: int, n: int, p: QPoint) -> BasisValue:
    return BasisValue(k, n, p, q_basis(k, n, p))


def q_basis_oracle(k: int, n: int, p: QPoint) -> Fraction:
    """Read ``B_{k,n}`` off the generating function ``([x]_q t)**k / k! * exp([1-x]_q t)``."""
    order = n + 1
    series = ps.shift_mul_tk(ps.exp_ct(q_complement(p), order), k)
    series = series.scale(q_number(p) ** k / math.factorial(k))
    return ps.egf_coefficient(series, n)


def additive_recurrence(k: int, n: int, p):
    if n < 1:
        raise ValueError("n must be at least 1")
    lower = q_basis(k - 1, n - 1, p) if k >= 1 else 0
    return q_complement(p) * q_basis(k, n - 1, p) + q_number(p) * lower


def derivative(k: int, n: int, fp: FloatPoint) -> float:
    """d/dx of ``B_{k,n}(x, q)`` at a floating point strictly inside (0, 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 < fp.x < 1.0:
        raise ValueError("derivative is only evaluated for 0 < x < 1")
    q, x = fp.q, fp.x
    lower = q_basis(k - 1, n - 1, fp) if k >= 1 else 0.0
    return n * (q**x * lower - q ** (1 - x) * q_basis(k, n - 1, fp)) * math.log(q) / (q - 1)


def central_difference(k: int, n: int, fp: FloatPoint, h: float = 1e-6) -> float:
    q, x = fp.q, fp.x
    return (q_basis(k, n, FloatPoint(q, x + h)) - q_basis(k, n, FloatPoint(q, x - h))) / (2 * h)


def sum_factor(p):
    """``1 + (1-q) [x]_q [1-x]_q``, which equals ``[x]_q + [1-x]_q``."""
    return 1 + (1 - p.q) * q_number(p) * q_complement(p)


def operator_apply(f: SampledFunction, p):
    return sum(f.samples[j] * q_basis(j, f.n, p) for j in range(f.n + 1))


def sum_basis(n: int, p):
    return sum_factor(p) ** n


def literal_sum(n: int, p):
    return sum(q_basis(k, n, p) for k in range(n + 1))


def identity_operator_closed_form(n: int, p):
    """Closed form of the operator applied to ``f(x) = x``; only valid for that f."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return q_number(p) * sum_factor(p) ** (n - 1)


def reflect(p):
    """Point for ``1 - x``: ``X -> q / X``."""
    if isinstance(p, FloatPoint):
        return FloatPoint(p.q, 1.0 - p.x)
    return QPoint(p.q, p.q / p.X)


def degree_reduction(k: int, n: int, p):
    """``(n-k)/n B_{k,n} + (k+1)/n B_{k+1,n}``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    return Fraction(n - k, n) * q_basis(k, n, p) + Fraction(k + 1, n) * q_basis(k + 1, n, p)


def degree_reduction_rhs(k: int, n: int, p):
    return q_basis(k, n - 1, p) * (1 + (1 - p.q) * q_number(p) * q_complement(p))


def ratio_identity(k: int, n: int, p):
    """``(n-k+1)/k * [x]_q/[1-x]_q * B_{k-1,n}``; singular at x = 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    comp = q_complement(p)
    if comp == 0:
        raise DomainError(f"[1-x]_q = 0 at {p}; the ratio identity is undefined at x = 1")
    return Fraction(n - k + 1, k) * (q_number(p) / comp) * q_basis(k - 1, n, p)


def monomial_expansion(k: int, n: int, p):
    """Alternating power-basis expansion in ``[x]_q``, with ``q**(1-x) = q/X``."""
    x_q = q_number(p)
    r = p.q / p.X
    return sum(
        binomial(i, k) * binomial(n, i) * (-1) ** (i - k) * r ** (i - k) * x_q**i
        for i in range(k, n + 1)
    )


def moment_identity(i: int, n: int, p):
    # the k = i-1 term carries C(i-1, i) = 0, so the sum starts at k = i
    if i < 1:
        raise ValueError("i must be at least 1")
    if i > n:
        raise ValueError(f"moment index i={i} exceeds degree n={n}")
    weighted = sum(Fraction(binomial(k, i), binomial(n, i)) * q_basis(k, n, p) for k in range(i, n + 1))
    return weighted / (q_complement(p) + q_number(p)) ** (n - i)


def classical_limit_check(k: int, n: int, x: float, qs: Sequence[float]) -> list:
    target = classical_basis(k, n, x)
    return [abs(q_basis(k, n, FloatPoint(q, x)) - target) for q in qs]
