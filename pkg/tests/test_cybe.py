from fractions import Fraction

import pytest

from rmcert.bd import dj_rmatrix
from rmcert.cybe import (IntegrityError, Tensor2, cartan_tensor, cobracket, cybe_residual, sk,
                         spectral_unitarity_normalization, to_matrix, unitarity_residual, wedge)
from rmcert.liecore import casimir, unit
from rmcert.scalars import MultiPoly, RatFun

Z, T = MultiPoly.var("z"), MultiPoly.var("t")


def test_constant_dj_matrix_solves_cybe():
    assert cybe_residual(dj_rmatrix(3)).is_zero()
    assert unitarity_residual(dj_rmatrix(3)).is_zero()


def test_cartan_only_tensor_fails_unitarity():
    r = cartan_tensor(3, [[1, 0], [0, 1]])
    assert not unitarity_residual(r).is_zero()


def test_sk_is_antisymmetric():
    x = Tensor2(3, {((1, 2), (2, 3)): Z, ((2, 1), (1, 1)): T})
    y = sk(x)
    assert (y + y.flip()).is_zero()


def test_wedge_antisymmetric():
    w = wedge(3, unit(1, 2), unit(2, 3))
    assert (w + w.flip(swap_args=False)).is_zero()


def test_yang_rmatrix_passes_with_casimir_pole():
    # Omega / (z - t) is the rational Yang solution
    yang = casimir(2).map_coeffs(lambda c: RatFun(MultiPoly.const(c), Z - T))
    assert cybe_residual(yang).is_zero()
    assert spectral_unitarity_normalization(yang) == "zero"


def test_tomega_pole_alone_is_not_a_solution():
    # t Omega / (z - t) needs the polynomial correction r_DJ
    polar = casimir(3).map_coeffs(lambda c: RatFun(T * c, Z - T))
    assert not cybe_residual(polar).is_zero()
    base = polar + dj_rmatrix(3).map_coeffs(lambda c: MultiPoly.const(c))
    assert cybe_residual(base).is_zero()


def test_cobracket_pole_detected():
    polar = casimir(2).map_coeffs(lambda c: RatFun(T * c, Z - T))
    # a Yang-type kernel applied to a constant input cancels the pole
    out = cobracket(polar, [(unit(1, 2), MultiPoly.const(1))])
    assert isinstance(out, Tensor2)


def test_to_matrix_layout():
    r = Tensor2(2, {((1, 2), (2, 1)): Fraction(1)})
    m = to_matrix(r)
    # E12 (x) E21 maps e2 (x) e1 to e1 (x) e2: row (0,1) col (1,0)
    assert m.get(1, 2) == 1
