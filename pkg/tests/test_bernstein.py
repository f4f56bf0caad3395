from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbernstein import bernstein as bs
from qbernstein.rational_core import FloatPoint, QPoint, binomial, q_complement, q_number

from .conftest import qpoints

degrees = st.integers(0, 12).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n)))


# examples


def test_classical_basis_examples():
    assert bs.classical_basis(1, 2, F(1, 2)) == F(1, 2)
    assert bs.classical_basis(0, 3, F(0)) == 1
    assert bs.classical_basis(2, 1, F(1, 2)) == 0
    with pytest.raises(ValueError):
        bs.classical_basis(0, 1, F(3, 2))


def test_q_basis_examples(p_quarter):
    assert bs.q_basis(0, 0, QPoint(F(1, 3), F(1, 2))) == 1
    assert bs.q_basis(1, 2, p_quarter) == F(8, 9)
    assert bs.q_basis(3, 2, p_quarter) == 0


def test_oracle_examples(p_quarter):
    assert bs.q_basis_oracle(0, 0, p_quarter) == 1
    assert bs.q_basis_oracle(1, 2, p_quarter) == F(8, 9)
    assert bs.q_basis_oracle(2, 1, p_quarter) == 0


def test_additive_recurrence_examples(p_quarter):
    assert bs.additive_recurrence(0, 1, QPoint(F(1, 2), F(1))) == 1
    assert bs.additive_recurrence(1, 2, p_quarter) == F(8, 9)
    assert bs.additive_recurrence(2, 2, p_quarter) == F(4, 9)


def test_derivative_classical_limits():
    q = 1 - 1e-6
    assert bs.derivative(0, 1, FloatPoint(q, 0.5)) == pytest.approx(-1, rel=1e-5)
    assert bs.derivative(1, 1, FloatPoint(q, 0.5)) == pytest.approx(1, rel=1e-5)


def test_derivative_matches_central_difference():
    fp = FloatPoint(0.5, 0.3)
    assert bs.derivative(1, 2, fp) == pytest.approx(bs.central_difference(1, 2, fp, 1e-6), rel=1e-5)


def test_derivative_rejects_boundary():
    with pytest.raises(ValueError):
        bs.derivative(1, 2, FloatPoint(0.5, 0.0))
    with pytest.raises(ValueError):
        bs.derivative(1, 2, FloatPoint(0.5, 1.0))


def test_derivative_vanishes_at_centre_for_middle_index():
    # B_{k,2k} is symmetric about x = 1/2
    for q in (0.3, 0.5, 0.9):
        for k in (1, 2, 3):
            assert abs(bs.derivative(k, 2 * k, FloatPoint(q, 0.5))) < 1e-14


def test_operator_examples(p_quarter):
    ones = bs.SampledFunction(3, (1, 1, 1, 1))
    assert bs.operator_apply(ones, p_quarter) == bs.sum_basis(3, p_quarter)
    ident = bs.SampledFunction.from_callable(lambda x: x, 2)
    assert bs.operator_apply(ident, p_quarter) == F(2, 3) * (1 + F(3, 4) * F(2, 3) * F(2, 3))
    assert bs.operator_apply(ident, p_quarter) == F(8, 9)
    zeros = bs.SampledFunction(5, (0,) * 6)
    assert bs.operator_apply(zeros, p_quarter) == 0
    with pytest.raises(ValueError):
        bs.SampledFunction(3, (1, 2))


def test_sum_basis_examples(p_quarter):
    assert bs.sum_basis(0, p_quarter) == 1
    assert bs.sum_basis(1, p_quarter) == F(4, 3)
    assert bs.sum_basis(2, p_quarter) == F(16, 9)


def test_reflect_examples():
    assert bs.reflect(QPoint(F(1, 2), F(1))) == QPoint(F(1, 2), F(1, 2))
    assert bs.reflect(QPoint(F(1, 4), F(1, 2))) == QPoint(F(1, 4), F(1, 2))
    assert bs.reflect(QPoint(F(1, 2), F(3, 4))) == QPoint(F(1, 2), F(2, 3))


def test_degree_reduction_examples(p_quarter):
    assert bs.degree_reduction(0, 1, p_quarter) == F(4, 3)
    assert bs.degree_reduction(2, 2, p_quarter) == 0
    assert bs.degree_reduction_rhs(2, 2, p_quarter) == 0
    assert bs.degree_reduction(1, 2, p_quarter) == F(1, 2) * F(8, 9) + F(4, 9)
    assert bs.degree_reduction(1, 2, p_quarter) == bs.degree_reduction_rhs(1, 2, p_quarter)


def test_ratio_examples(p_quarter):
    assert bs.ratio_identity(1, 1, p_quarter) == F(2, 3)
    assert bs.ratio_identity(2, 2, p_quarter) == F(4, 9)
    with pytest.raises(bs.DomainError):
        bs.ratio_identity(1, 1, QPoint(F(1, 4), F(1, 4)))


def test_monomial_examples(p_quarter):
    for n in range(6):
        assert bs.monomial_expansion(n, n, p_quarter) == q_number(p_quarter) ** n
    assert bs.monomial_expansion(0, 1, p_quarter) == 1 - F(1, 2) * F(2, 3)
    assert bs.monomial_expansion(1, 2, p_quarter) == F(8, 9)


def test_moment_examples(p_quarter):
    for n in range(1, 6):
        assert bs.moment_identity(n, n, p_quarter) == q_number(p_quarter) ** n
    assert bs.moment_identity(1, 2, p_quarter) == F(2, 3)
    assert bs.moment_identity(2, 2, p_quarter) == F(4, 9)
    with pytest.raises(ValueError):
        bs.moment_identity(3, 2, p_quarter)


def test_classical_limit_examples():
    assert bs.classical_limit_check(1, 2, 0.5, [1 - 1e-6])[0] < 1e-5
    assert bs.classical_limit_check(0, 0, 0.3, [0.5, 0.9]) == [0.0, 0.0]
    assert bs.classical_limit_check(1, 1, 1.0, [0.2, 0.5, 0.99]) == [0.0, 0.0, 0.0]


# properties


@given(qpoints(), degrees)
def test_oracle_equivalence(p, kn):
    k, n = kn
    assert bs.q_basis_oracle(k, n, p) == bs.q_basis(k, n, p)


@given(qpoints(), st.integers(0, 16).flatmap(lambda n: st.tuples(st.integers(0, n + 1), st.just(n + 1))))
def test_recurrence(p, kn):
    k, n = kn
    assert bs.additive_recurrence(k, n, p) == bs.q_basis(k, n, p)


@given(qpoints(), degrees)
def test_symmetry(p, kn):
    k, n = kn
    assert bs.q_basis(n - k, n, bs.reflect(p)) == bs.q_basis(k, n, p)


@given(qpoints())
def test_reflect_is_involution(p):
    assert bs.reflect(bs.reflect(p)) == p


@given(qpoints(), st.integers(0, 16))
def test_sum_identity(p, n):
    literal = bs.literal_sum(n, p)
    assert literal == bs.sum_basis(n, p)
    assert literal == (q_number(p) + q_complement(p)) ** n


@given(qpoints(interior=True), st.integers(1, 10))
def test_sum_identity_pins_the_sign(p, n):
    wrong = (1 + (p.q - 1) * q_number(p) * q_complement(p)) ** n
    assert bs.literal_sum(n, p) != wrong


@given(qpoints(), st.integers(1, 16).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))))
def test_degree_reduction(p, kn):
    k, n = kn
    assert bs.degree_reduction(k, n, p) == bs.degree_reduction_rhs(k, n, p)


@given(qpoints(), st.integers(1, 12).flatmap(lambda n: st.tuples(st.integers(1, n), st.just(n))))
def test_ratio(p, kn):
    k, n = kn
    if q_complement(p) == 0:
        with pytest.raises(bs.DomainError):
            bs.ratio_identity(k, n, p)
    else:
        assert bs.ratio_identity(k, n, p) == bs.q_basis(k, n, p)


@given(qpoints(), degrees)
def test_monomial(p, kn):
    k, n = kn
    assert bs.monomial_expansion(k, n, p) == bs.q_basis(k, n, p)


@given(qpoints(), st.integers(1, 12).flatmap(lambda n: st.tuples(st.integers(1, n), st.just(n))))
def test_moment(p, i_n):
    i, n = i_n
    assert bs.moment_identity(i, n, p) == q_number(p) ** i


@given(qpoints(), st.integers(1, 12))
def test_operator_on_identity(p, n):
    f = bs.SampledFunction.from_callable(lambda x: x, n)
    assert bs.operator_apply(f, p) == bs.identity_operator_closed_form(n, p)


@given(qpoints(interior=True), st.integers(1, 8))
def test_closed_form_does_not_extend_to_constant_function(p, n):
    f = bs.SampledFunction.from_callable(lambda x: F(1), n)
    general = 1 * bs.sum_factor(p) ** (n - 1)
    assert bs.operator_apply(f, p) != general


@given(qpoints(), degrees)
def test_positivity(p, kn):
    k, n = kn
    v = bs.q_basis(k, n, p)
    assert v >= 0
    vanishes = (q_number(p) == 0 and k >= 1) or (q_complement(p) == 0 and k < n)
    assert (v == 0) == vanishes


def test_basis_value_record(p_quarter):
    bv = bs.basis_value(1, 2, p_quarter)
    assert (bv.k, bv.n, bv.point, bv.value) == (1, 2, p_quarter, F(8, 9))
    assert bs.basis_value(3, 2, p_quarter).value == 0


def test_classical_basis_matches_q_to_one():
    for n in range(9):
        for k in range(n + 1):
            for x in (0.1, 0.5, 0.9):
                diffs = bs.classical_limit_check(k, n, x, [0.9, 0.99, 0.999, 1 - 1e-4])
                assert all(b <= a for a, b in zip(diffs, diffs[1:]))
                assert diffs[-1] < 1e-3


def test_binomial_coefficient_in_classical_basis():
    for n in range(8):
        assert sum(bs.classical_basis(k, n, F(1, 3)) for k in range(n + 1)) == 1
        assert bs.classical_basis(n, n, F(1)) == binomial(n, n)
