from fractions import Fraction

import pytest

from rmcert.cybe import cybe_residual, spectral_unitarity_normalization
from rmcert.fixtures import R0HAT_SL4
from rmcert.liecore import casimir, unit
from rmcert.quasitrig import (FixtureAmbiguity, T, build_lagrangian, check_lagrangian, check_transversal,
                              classical_twist, cobracket_sweep, constant_part_matches_shift_triple,
                              diagonal_subalgebra, fixture_reconstructed, fixture_sl4, literal_candidates,
                              polar_residue, split_form)


def test_split_form_examples():
    zero = {}
    assert split_form((unit(1, 2), zero), (unit(2, 1), zero)) == 1
    assert split_form((zero, unit(1, 2)), (zero, unit(2, 1))) == -1


def test_lagrangian_default_T():
    rep = check_lagrangian(build_lagrangian())
    assert rep.lagrangian and rep.dim == 15 and rep.isotropy_violations == 0


def test_identity_T_gives_diagonal():
    ident = [[int(i == j) for j in range(4)] for i in range(4)]
    w = build_lagrangian(ident)
    assert check_transversal(w, diagonal_subalgebra(4), 4).intersection_dim == 15


def test_default_W_against_diagonal():
    rep = check_transversal(build_lagrangian(), diagonal_subalgebra(4), 4)
    assert rep.intersection_dim == 3 and not rep.transversal


def test_singular_T_rejected():
    with pytest.raises(ValueError):
        build_lagrangian([[1, 1], [1, 1]])


@pytest.fixture(scope="module")
def candidates():
    return literal_candidates()


def test_no_printed_reading_passes(candidates):
    assert len(candidates) == 24
    assert not any(c.passes for c in candidates)


def test_fixture_sl4_raises_with_dump():
    with pytest.raises(FixtureAmbiguity) as info:
        fixture_sl4()
    assert len(info.value.candidates) == 24


def test_reconstructed_reading():
    xr = fixture_reconstructed()
    full = xr.full()
    assert cybe_residual(full).is_zero()
    assert spectral_unitarity_normalization(full) == "zero"
    assert (polar_residue(full) - casimir(4).map_coeffs(lambda c: T * c)).is_zero()
    r0 = constant_part_matches_shift_triple(xr)
    assert r0 == [list(row) for row in R0HAT_SL4]
    count, failures = cobracket_sweep(xr, max_degree=1)
    assert failures == [] and count == 30


def test_classical_twist_degree():
    tw = classical_twist(fixture_reconstructed())
    for c in tw.terms.values():
        if hasattr(c, "degree"):
            assert c.degree("z") <= 1 and c.degree("t") <= 1
