import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmcert.bd import (BDTriple, assemble_rmatrix, certify, cg_triple, dj_rmatrix, empty_triple,
                       enumerate_triples, in_solution_space, solve_r0, tau_chains, validate_triple)
from rmcert.fixtures import R0_SL5, R0HAT_SL4
from rmcert.liecore import DomainError


def test_enumeration_counts():
    assert [len(enumerate_triples(n)) for n in (2, 3, 4, 5)] == [1, 3, 9, 33]


def test_validation_examples():
    assert validate_triple(cg_triple(5))[0]
    assert not validate_triple(BDTriple.make(4, {1: 2, 2: 1}))[0]  # not nilpotent
    assert not validate_triple(BDTriple.make(4, {1: 3, 2: 3}))[0]  # not injective
    assert validate_triple(BDTriple.make(5, {1: 4, 2: 3}))[0]      # orientation reversing


def test_json_roundtrip():
    t = cg_triple(4)
    assert BDTriple.from_json(t.to_json()) == t


def test_fixture_cartan_parts_solve_system():
    assert in_solution_space(cg_triple(5), R0_SL5)
    assert in_solution_space(cg_triple(4), R0HAT_SL4)
    assert not in_solution_space(cg_triple(5), [[0] * 4] * 4)


def test_kernel_dimension_cg():
    # for the shift triple the Cartan system leaves no freedom beyond the symmetric part
    sol = solve_r0(cg_triple(4))
    assert in_solution_space(cg_triple(4), sol.particular)


def test_chains_of_cg5():
    chains = tau_chains(cg_triple(5))
    assert max(k for _, _, k, _ in chains) == 3


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_triples_certify(n):
    for triple in enumerate_triples(n):
        r = assemble_rmatrix(triple, solve_r0(triple).particular)
        assert certify(r) == (True, True), triple


@given(st.integers(0, 32), st.integers(0, 10_000))
def test_kernel_shifts_preserve_cybe(index, seed):
    triple = enumerate_triples(5)[index]
    sol = solve_r0(triple)
    rng = random.Random(seed)
    r0 = [row[:] for row in sol.particular]
    for basis in sol.kernel:
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        r0 = [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(r0, basis)]
    assert certify(assemble_rmatrix(triple, r0)) == (True, True)


def test_invalid_triple_rejected():
    with pytest.raises(DomainError):
        solve_r0(BDTriple.make(4, {1: 2, 2: 1}))


def test_dj_is_empty_triple_assembly():
    assert certify(dj_rmatrix(4)) == (True, True)
    assert empty_triple(3).tau == ()
