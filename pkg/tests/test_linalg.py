from fractions import Fraction

from hypothesis import given, strategies as st

from rmcert import linalg
from rmcert.linalg import SpMat, kron, swap_permutation, unipotent_inverse
from rmcert.scalars import MultiPoly

entry = st.integers(-3, 3)


@given(st.lists(st.lists(entry, min_size=3, max_size=3), min_size=3, max_size=3))
def test_nullspace_vectors_are_annihilated(rows):
    for vec in linalg.nullspace(rows, 3):
        assert all(sum(Fraction(a) * x for a, x in zip(row, vec)) == 0 for row in rows)
    assert linalg.rank(rows) + len(linalg.nullspace(rows, 3)) == 3


def test_inverse_and_det():
    m = [[0, 1, 0, 0], [1, 0, 1, 0], [0, 0, 1, 0], [0, 1, 0, 1]]
    assert linalg.det(m) == -1
    inv = linalg.inverse(m)
    assert linalg.matmul(m, inv) == [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]


def test_solve_affine_inconsistent():
    particular, kernel = linalg.solve_affine([[1, 1], [1, 1]], [1, 2])
    assert particular is None


def test_poly_nullspace_over_function_field():
    x = MultiPoly.var("u1")
    one = MultiPoly.const(1)
    # x * a - b = 0
    basis = linalg.poly_nullspace([{0: x, 1: -one}], 2, ("u1",))
    assert len(basis) == 1
    a, b = basis[0]
    assert (x * a - b).is_zero()


def test_unipotent_inverse():
    one = MultiPoly.const(1)
    m = SpMat.identity(3) + SpMat.unit(3, 0, 1, MultiPoly.var("s")) + SpMat.unit(3, 1, 2, one)
    assert m @ unipotent_inverse(m) == SpMat.identity(3)


def test_swap_permutation_conjugates_kron():
    a = SpMat.unit(2, 0, 1, MultiPoly.const(1))
    b = SpMat.unit(3, 2, 0, MultiPoly.const(5))
    assert kron(b, a).permute(swap_permutation(3, 2)) == kron(a, b)
