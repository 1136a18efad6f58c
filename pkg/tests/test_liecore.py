from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmcert.liecore import (DomainError, RootSystemA, build_sl, cartan_coords, cartan_element, cartan_matrix,
                            casimir, check_chevalley_relations, comm, contract_first, contract_second,
                            inverse_cartan, loop_realize, mat_mul, root_vector, trace_form, unit)


def test_cartan_matrices():
    assert cartan_matrix(2) == [[2, -1], [-1, 2]]
    aff = cartan_matrix(3, affine=True)
    assert aff[0] == [2, -1, 0, -1]


def test_build_sl_dimension_and_errors():
    assert build_sl(4).dim == 15
    with pytest.raises(DomainError):
        build_sl(1)


def test_trace_form_examples():
    assert trace_form(unit(1, 2), unit(2, 1)) == 1
    h1 = cartan_element([1])
    assert trace_form(h1, h1) == 2


@given(st.integers(0, 14), st.integers(0, 14), st.integers(0, 14))
def test_trace_form_invariance(i, j, k):
    alg = build_sl(4)
    x, y, w = alg.element(i), alg.element(j), alg.element(k)
    assert trace_form(comm(x, y), w) == trace_form(x, comm(y, w))
    assert trace_form(x, y) == trace_form(y, x)


def test_cartan_roundtrip():
    coeffs = [Fraction(1, 3), Fraction(-2), Fraction(5, 7)]
    assert cartan_coords(cartan_element(coeffs), 4) == coeffs


def test_casimir_term_count():
    om = casimir(3)
    # 6 off-diagonal terms plus the Cartan part expanded over diagonal units
    assert ((1, 2), (2, 1)) in om.terms


def test_inverse_cartan_sl5():
    inv = inverse_cartan(5)
    assert inv[0] == [Fraction(4, 5), Fraction(3, 5), Fraction(2, 5), Fraction(1, 5)]


def test_root_vectors_and_pairing():
    roots = RootSystemA(4)
    assert roots.pairing((1, 0, 0), (0, 1, 0)) == -1
    assert root_vector(4, (1, 1, 0), 1) == unit(1, 3)
    assert root_vector(4, (1, 1, 0), -1) == unit(3, 1)


def test_contractions_transpose():
    m = [[1, 2], [3, 4]]
    mt = [[1, 3], [2, 4]]
    assert contract_first(m, (1, 0)) == contract_second(mt, (1, 0))


def test_loop_realization_relations():
    assert check_chevalley_relations(4, affine=True) == []
    assert check_chevalley_relations(5, affine=False) == []
    assert loop_realize(4, "e0").degrees() == [1]
    with pytest.raises(DomainError):
        loop_realize(4, "x1")
