from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmcert.cybe import IntegrityError
from rmcert.liecore import DomainError
from rmcert.quantum.reps import (QField, check_relations, counit_check, delta_pullback, eval_rep,
                                 opposite_pullback, vector_rep)


def test_q_is_s_to_the_forty():
    qf = QField()
    assert qf.qpow(Fraction(1, 8)) == qf.spow(5)
    with pytest.raises(IntegrityError):
        qf.qpow(Fraction(1, 3))


@pytest.mark.parametrize("rep", [vector_rep(2), vector_rep(5), eval_rep(3), eval_rep(4)])
def test_relations(rep):
    assert check_relations(rep) == []
    assert counit_check(rep) == []


def test_coproduct_is_a_homomorphism():
    v = vector_rep(3)
    assert check_relations(delta_pullback(v, v)) == []
    a, b = eval_rep(4, "u1"), eval_rep(4, "u2")
    assert check_relations(delta_pullback(a, b)) == []
    assert check_relations(opposite_pullback(a, b)) == []


@given(st.fractions(min_value=Fraction(1, 3), max_value=3, max_denominator=5).filter(lambda x: x != 1))
def test_relations_at_rational_s(value):
    qf = QField(value)
    v = vector_rep(3, qf)
    assert check_relations(delta_pullback(v, v)) == []


def test_broken_rep_detected():
    rep = vector_rep(3)
    rep.e[1] = rep.e[1].scale(rep.qfield.q)
    assert check_relations(rep) != []


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_rep(2)
