from fractions import Fraction

import pytest

from rmcert.cybe import IntegrityError
from rmcert.fixtures import R0_SL5, R0HAT_SL4
from rmcert.linalg import SpMat
from rmcert.quantum.reps import QField, eval_rep, vector_rep
from rmcert.quantum.twist import (AFFINE_LITERAL, AFFINE_REPAIRED, LITERAL, REPAIRED, cartan_builder,
                                  cartan_twist, cartan_twist_inverse, cocycle_check, exp_q2, factor_labels,
                                  iota_cartan, reading_table, shift_twist, shift_twist_inverse, spec_builder,
                                  twist_factor, twisted_coproduct_check)


@pytest.fixture(scope="module")
def v5():
    return vector_rep(5)


def test_factor_structure():
    labels = factor_labels(REPAIRED)
    assert len(labels) == 10
    assert [lab for lab, k, *_ in labels if k == 3] == ["k3:a1..a1"]


def test_exp_q2_terminates_on_nilpotent():
    one = vector_rep(2).qfield.spow(0)
    n = SpMat.unit(2, 0, 1, one)
    assert exp_q2(n, one) == SpMat.identity(2) + n


def test_cartan_twist_inverse(v5):
    k = cartan_twist(R0_SL5, v5, v5)
    assert k @ cartan_twist_inverse(R0_SL5, v5, v5) == SpMat.identity(25)
    assert cartan_twist([[0] * 4] * 4, v5, v5) == SpMat.identity(25)


def test_shift_twist_inverse(v5):
    f = shift_twist(v5, v5)
    assert f @ shift_twist_inverse(v5, v5) == SpMat.identity(25)


def test_third_factor_single(v5):
    f3 = twist_factor(3, v5, v5)
    assert (f3 - SpMat.identity(25)).nnz() == 1


def test_cocycles_finite(v5):
    reps = [v5, v5, v5]
    assert cocycle_check(cartan_builder(R0_SL5), reps).ok
    assert cocycle_check(spec_builder(REPAIRED), reps).ok
    assert cocycle_check(spec_builder(LITERAL), reps).nonzero_entries == 30


def test_reading_table_only_repaired_reversed(v5):
    table = {(c, o): k for c, o, k in reading_table(LITERAL, [v5, v5, v5])}
    assert table[("repaired", "reversed")] == 0
    assert all(k > 0 for key, k in table.items() if key != ("repaired", "reversed"))


def test_cocycles_affine():
    reps = [eval_rep(4, u) for u in ("u1", "u2", "u3")]
    assert cocycle_check(cartan_builder(R0HAT_SL4), reps).ok
    assert cocycle_check(spec_builder(AFFINE_REPAIRED), reps).ok
    assert not cocycle_check(spec_builder(AFFINE_LITERAL), reps).ok


def test_specialized_cocycle_agrees():
    qf = QField(Fraction(3, 2))
    v = vector_rep(5, qf)
    assert cocycle_check(spec_builder(REPAIRED), [v, v, v]).ok


def test_twisted_coproducts(v5):
    assert twisted_coproduct_check(v5) == []


def test_iota_cartan():
    assert iota_cartan((Fraction(1, 5), Fraction(-3, 5), Fraction(-2, 5), Fraction(-1, 5))) == \
        [Fraction(1, 4), Fraction(-1, 2), Fraction(-1, 4)]
    with pytest.raises(IntegrityError):
        iota_cartan((1, 0, 0, 0))
