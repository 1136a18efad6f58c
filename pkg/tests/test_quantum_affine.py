import pytest

from rmcert.linalg import SpMat
from rmcert.quantum.affine import (DegenerateParameter, qybe_check, semiclassical_extract, solve_intertwiner,
                                   twisted_rmatrix)
from rmcert.quantum.reps import eval_rep
from rmcert.quantum.twist import AFFINE_LITERAL, shift_twist, shift_twist_inverse
from rmcert.quasitrig import _base, fixture_reconstructed


@pytest.fixture(scope="module")
def setup():
    r1, r2 = eval_rep(4, "u1"), eval_rep(4, "u2")
    return r1, r2, solve_intertwiner(r1, r2)


def test_intertwiner_shape(setup):
    _, _, rmat = setup
    assert rmat.shape == (16, 16) and rmat.nnz() == 28


def test_coinciding_parameters_flagged():
    with pytest.raises(DegenerateParameter):
        solve_intertwiner(eval_rep(4, "u1"), eval_rep(4, "u1"))


def test_qybe_untwisted(setup):
    assert qybe_check(setup[2]).ok


def test_identity_twist_is_noop(setup):
    r1, r2, rmat = setup
    ident = lambda a, b: SpMat.identity(a.dim * b.dim)
    assert twisted_rmatrix(rmat, r1, r2, ident, ident) == rmat


def test_twisted_qybe(setup):
    r1, r2, rmat = setup
    assert qybe_check(twisted_rmatrix(rmat, r1, r2)).ok
    literal = twisted_rmatrix(rmat, r1, r2, lambda a, b: shift_twist(a, b, AFFINE_LITERAL),
                              lambda a, b: shift_twist_inverse(a, b, AFFINE_LITERAL))
    assert not qybe_check(literal).ok


def test_semiclassical_untwisted(setup):
    rep = semiclassical_extract(setup[2], _base())
    assert rep.ok and rep.scale.num.constant_value() / rep.scale.den.constant_value() == -80


def test_semiclassical_twisted(setup):
    r1, r2, rmat = setup
    rep = semiclassical_extract(twisted_rmatrix(rmat, r1, r2), fixture_reconstructed().full())
    assert rep.ok
    assert rep.omega_multiple.is_zero()


def test_semiclassical_mismatch_reports_difference(setup):
    rep = semiclassical_extract(setup[2], fixture_reconstructed().full())
    assert not rep.matches_modulo_identity
    assert rep.difference is not None
