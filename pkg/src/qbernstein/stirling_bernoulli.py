"""Stirling numbers, higher-order Bernoulli numbers, and their q-analogs.

Classical S(n, k) come from the triangular recurrence; the finite-difference
and generating-function routes are kept as independent cross-checks. The
q-Stirling numbers likewise have a closed finite sum and a series route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import power_series as ps
from .bernstein import moment_identity
from .rational_core import (
    QPoint,
    binomial,
    gaussian_binomial,
    q_complement,
    q_factorial,
    q_int,
    q_number,
    q_x_binomial,
)


@dataclass(frozen=True)
class StirlingTable:
    max_n: int
    max_k: int
    entries: tuple

    def __call__(self, n: int, k: int) -> Fraction:
        if k > n:
            return Fraction(0)
        return self.entries[n][k]

    def row_sum(self, n: int) -> Fraction:
        return sum(self.entries[n])


@dataclass(frozen=True)
class BernoulliOrderTable:
    order: int
    numbers: tuple

    def __getitem__(self, n: int) -> Fraction:
        return self.numbers[n]


@dataclass(frozen=True)
class QStirlingTable:
    q: object
    max_n: int
    max_k: int
    entries: tuple

    def __call__(self, n: int, k: int):
        if k > n:
            return 0 * self.q
        return self.entries[n][k]


@lru_cache(maxsize=None)
def stirling2_recurrence(max_n: int) -> StirlingTable:
    """Table of S(n, k), built from ``S(n,k) = k S(n-1,k) + S(n-1,k-1)``."""
    rows = [[Fraction(1)]]
    for n in range(1, max_n + 1):
        prev = rows[-1]
        row = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
        rows.append(row)
    return StirlingTable(max_n, max_n, tuple(tuple(r) for r in rows))


def forward_difference_at_zero(values, n: int):
    """``Δ^n f(0) = sum_k C(n,k) (-1)**(n-k) f(k)`` from the table ``f(0..n)``."""
    if len(values) < n + 1:
        raise ValueError(f"need f(0..{n}), got {len(values)} values")
    return sum(binomial(n, k) * (-1) ** (n - k) * values[k] for k in range(n + 1))


def stirling2_difference(n: int, k: int) -> Fraction:
    """``S(n, k) = Δ^k 0^n / k!`` (with ``0**0 = 1``)."""
    powers = [l**n for l in range(k + 1)]
    return Fraction(forward_difference_at_zero(powers, k), math.factorial(k))


def stirling2_series_oracle(n: int, k: int) -> Fraction:
    """``n!`` times the ``t**n`` coefficient of ``(e**t - 1)**k / k!``."""
    order = n + 1
    e_minus_one = ps.exp_ct(1, order) - ps.one(order)
    series = ps.pow(e_minus_one, k).scale(Fraction(1, math.factorial(k)))
    return ps.egf_coefficient(series, n)


def bell_numbers(max_n: int) -> list:
    """Bell numbers from ``B(n+1) = sum_k C(n,k) B(k)``."""
    bell = [1]
    for n in range(max_n):
        bell.append(sum(binomial(n, k) * bell[k] for k in range(n + 1)))
    return bell


def _t_over_expm1(order: int) -> ps.TruncatedSeries:
    # (e^t - 1)/t has coefficients 1/(i+1)!
    return ps.invert_unit(ps.TruncatedSeries(Fraction(1, math.factorial(i + 1)) for i in range(order)))


@lru_cache(maxsize=None)
def bernoulli_order(k: int, max_n: int) -> BernoulliOrderTable:
    """``B_n^{(k)}`` for n = 0..max_n, from ``(t / (e**t - 1))**k``."""
    series = ps.pow(_t_over_expm1(max_n + 1), k)
    return BernoulliOrderTable(k, tuple(ps.egf_coefficient(series, n) for n in range(max_n + 1)))


def bernoulli_order_poly(k: int, n: int, y):
    """``B_n^{(k)}(y) = sum_j C(n,j) B_j^{(k)} y**(n-j)``."""
    table = bernoulli_order(k, n)
    return sum(binomial(n, j) * table[j] * y ** (n - j) for j in range(n + 1))


def bernoulli_order_poly_series(k: int, n: int, y) -> Fraction:
    """Same value read off ``(t/(e**t-1))**k * exp(y t)``."""
    order = n + 1
    series = ps.mul(ps.pow(_t_over_expm1(order), k), ps.exp_ct(y, order))
    return ps.egf_coefficient(series, n)


def qbern_via_bernoulli(k: int, l: int, p: QPoint):
    """Modified q-Bernstein value rebuilt from Bernoulli polynomials of order k and Stirling numbers."""
    y = q_complement(p)
    total = sum(
        bernoulli_order_poly(k, n, y) * binomial(l, n) * stirling2_difference(l - n, k)
        for n in range(l + 1)
    )
    return q_number(p) ** k * total


def q_difference_at_zero(f_values, n: int, q):
    """Apply ``prod_{i<n} (E - q**i I)`` to the table ``f(0..n)`` and read it at 0."""
    if len(f_values) < n + 1:
        raise ValueError(f"need f(0..{n}), got {len(f_values)} values")
    g = list(f_values[: n + 1])
    for i in range(n):
        qi = q**i
        g = [g[m + 1] - qi * g[m] for m in range(len(g) - 1)]
    return g[0]


def q_difference_expanded(f_values, n: int, q):
    """q-binomial expansion of the same operator, ``sum_j (-1)**j q**C(j,2) C(n,j)_q f(n-j)``."""
    return sum(
        (-1) ** j * q ** binomial(j, 2) * gaussian_binomial(n, j, q) * f_values[n - j]
        for j in range(n + 1)
    )


def q_difference_misprint(f_values, n: int, q):
    """Expansion with the constant factor ``q**C(n,2)``; disagrees with the operator for n >= 2."""
    return sum(
        gaussian_binomial(n, k, q) * (-1) ** k * q ** binomial(n, 2) * f_values[n - k]
        for k in range(n + 1)
    )


def _qpow(base, n: int):
    # 0**0 = 1 for the n = 0 column
    return base**n if n else 1 + 0 * base


@lru_cache(maxsize=4096, typed=True)
def q_stirling(n: int, k: int, q):
    """S(n, k:q) as a finite alternating sum over Gaussian binomials."""
    total = sum(
        (-1) ** j * q ** binomial(j, 2) * gaussian_binomial(k, j, q) * _qpow(q_int(k - j, q), n)
        for j in range(k + 1)
    )
    return q ** (-binomial(k, 2)) * total / q_factorial(k, q)


def q_stirling_via_difference(n: int, k: int, q):
    values = [_qpow(q_int(j, q), n) for j in range(k + 1)]
    return q ** (-binomial(k, 2)) * q_difference_at_zero(values, k, q) / q_factorial(k, q)


def q_stirling_series_oracle(n: int, k: int, q) -> Fraction:
    """S(n, k:q) read off the exponential generating function in ``e**([j]_q t)``."""
    q = Fraction(q)
    order = n + 1
    series = ps.TruncatedSeries([0] * order)
    for j in range(k + 1):
        weight = (-1) ** (k - j) * gaussian_binomial(k, j, q) * q ** binomial(k - j, 2)
        series = series + ps.exp_ct(q_int(j, q), order).scale(weight)
    series = series.scale(q ** (-binomial(k, 2)) / q_factorial(k, q))
    return ps.egf_coefficient(series, n)


def q_stirling_table(max_n: int, q) -> QStirlingTable:
    entries = tuple(tuple(q_stirling(n, k, q) for k in range(n + 1)) for n in range(max_n + 1))
    return QStirlingTable(q, max_n, max_n, entries)


def q_power_expansion(i: int, p):
    """``sum_k q**C(k,2) [x choose k]_q [k]_q! S(i,k:q)``, which equals ``[x]_q**i``."""
    q = p.q
    return sum(
        q ** binomial(k, 2) * q_x_binomial(p, k) * q_factorial(k, q) * q_stirling(i, k, q)
        for k in range(i + 1)
    )


def theorem8_check(i: int, n: int, p) -> tuple:
    """Normalized Bernstein moment and q-Stirling power expansion of ``[x]_q**i``."""
    if i > n:
        raise ValueError(f"i={i} exceeds n={n}")
    return moment_identity(i, n, p), q_power_expansion(i, p)
