"""Exact arithmetic for the modified q-Bernstein polynomials and their q-Stirling/Bernoulli tower."""

from .bernstein import (
    DomainError,
    classical_basis,
    q_basis,
    q_basis_oracle,
    sum_basis,
)
from .rational_core import FloatPoint, QPoint, gaussian_binomial, q_complement, q_number
from .stirling_bernoulli import bernoulli_order, q_stirling, stirling2_recurrence

__all__ = [
    "DomainError",
    "FloatPoint",
    "QPoint",
    "bernoulli_order",
    "classical_basis",
    "gaussian_binomial",
    "q_basis",
    "q_basis_oracle",
    "q_complement",
    "q_number",
    "q_stirling",
    "stirling2_recurrence",
    "sum_basis",
]
