"""sl_n in the matrix-unit basis, its root system, Casimir elements and loop realization.

Matrices are sparse dicts ``{(i, j): Fraction}`` with 1-based indices, so that the
matrix unit E_ij is literally ``{(i, j): 1}``.  The bilinear form is the trace form
tr(xy) throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import linalg

Matrix = Dict[Tuple[int, int], Fraction]
Root = Tuple[int, ...]


class DomainError(ValueError):
    pass


# sparse matrix helpers

def unit(i: int, j: int, c=1) -> Matrix:
    return {(i, j): Fraction(c)}


def mat_add(*mats: Matrix) -> Matrix:
    out: Matrix = {}
    for m in mats:
        for key, v in m.items():
            out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v != 0}


def mat_scale(m: Matrix, c) -> Matrix:
    c = Fraction(c)
    return {k: v * c for k, v in m.items() if v * c != 0}


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(a, mat_scale(b, -1))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: Matrix = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {k: v for k, v in out.items() if v != 0}


def comm(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def trace(m: Matrix) -> Fraction:
    return sum((v for (i, j), v in m.items() if i == j), Fraction(0))


def trace_form(x: Matrix, y: Matrix, n: int | None = None) -> Fraction:
    if n is not None:
        for (i, j) in list(x) + list(y):
            if not (1 <= i <= n and 1 <= j <= n):
                raise DomainError("matrix index outside sl_n")
    return trace(mat_mul(x, y))


def cartan_element(coeffs: Sequence) -> Matrix:
    """sum_k coeffs[k] h_{k+1} as a diagonal matrix."""
    out: Matrix = {}
    for k, c in enumerate(coeffs, start=1):
        c = Fraction(c)
        if c:
            out[(k, k)] = out.get((k, k), 0) + c
            out[(k + 1, k + 1)] = out.get((k + 1, k + 1), 0) - c
    return {k: v for k, v in out.items() if v != 0}


def cartan_coords(m: Matrix, n: int) -> List[Fraction]:
    """Coordinates of a traceless diagonal matrix in the h_1..h_{n-1} basis."""
    diag = [m.get((a, a), Fraction(0)) for a in range(1, n + 1)]
    coords, acc = [], Fraction(0)
    for a in range(n - 1):
        acc += diag[a]
        coords.append(acc)
    if acc + diag[n - 1] != 0:
        raise DomainError("diagonal matrix is not traceless")
    return coords


# root system

def cartan_matrix(rank: int, affine: bool = False) -> List[List[int]]:
    size = rank + 1 if affine else rank
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        out[i][i] = 2
        for j in range(size):
            if i != j:
                adjacent = abs(i - j) == 1 or (affine and abs(i - j) == size - 1)
                out[i][j] = -1 if adjacent else 0
    if affine and size == 2:
        out[0][1] = out[1][0] = -2
    return out


@dataclass(frozen=True)
class RootSystemA:
    rank: int
    affine: bool = False
    cartan: Tuple[Tuple[int, ...], ...] = field(init=False)
    positive_roots: Tuple[Root, ...] = field(init=False)
    simple_labels: Tuple[str, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "cartan", tuple(tuple(r) for r in cartan_matrix(self.rank, self.affine)))
        roots = []
        for i in range(self.rank):
            for j in range(i, self.rank):
                roots.append(tuple(int(i <= k <= j) for k in range(self.rank)))
        object.__setattr__(self, "positive_roots", tuple(roots))
        labels = [f"alpha{k}" for k in range(1, self.rank + 1)]
        if self.affine:
            labels = ["alpha0"] + labels
        object.__setattr__(self, "simple_labels", tuple(labels))

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(x * self.cartan[i][j] * y for i, x in enumerate(a) for j, y in enumerate(b))


def root_interval(root: Sequence[int]) -> Tuple[int, int]:
    """(i, j) with root = alpha_i + ... + alpha_{j-1}; raises for non-roots."""
    support = [k for k, c in enumerate(root, start=1) if c]
    if not support or any(c not in (0, 1) for c in root):
        raise DomainError(f"not a positive root: {tuple(root)}")
    lo, hi = support[0], support[-1]
    if support != list(range(lo, hi + 1)):
        raise DomainError(f"not a positive root: {tuple(root)}")
    return lo, hi + 1


def interval_root(i: int, j: int, rank: int) -> Root:
    return tuple(int(i <= k < j) for k in range(1, rank + 1))


# the Lie algebra

@dataclass(frozen=True)
class LieAlgSL:
    n: int
    labels: Tuple[str, ...]
    basis: Tuple[Tuple[Tuple[Tuple[int, int], Fraction], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, k: int) -> Matrix:
        return dict(self.basis[k])

    def elements(self) -> List[Matrix]:
        return [dict(b) for b in self.basis]


def build_sl(n: int) -> LieAlgSL:
    if n < 2:
        raise DomainError("sl_n needs n >= 2")
    labels, basis = [], []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                labels.append(f"E{i}{j}")
                basis.append(unit(i, j))
    for k in range(1, n):
        labels.append(f"h{k}")
        basis.append(cartan_element([int(m == k) for m in range(1, n)]))
    frozen = tuple(tuple(sorted(m.items())) for m in basis)
    return LieAlgSL(n, tuple(labels), frozen)


def inverse_cartan(n: int) -> List[List[Fraction]]:
    return linalg.inverse(cartan_matrix(n - 1))


def cartan_casimir(n: int) -> List[List[Fraction]]:
    """h (x) h part of the Casimir in the h_i (x) h_j basis: the inverse Cartan matrix."""
    return inverse_cartan(n)


def casimir(n: int):
    from .cybe import Tensor2, cartan_tensor

    terms = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                terms[((i, j), (j, i))] = Fraction(1)
    return Tensor2(n, terms) + cartan_tensor(n, cartan_casimir(n))


def root_vector(n: int, root: Sequence[int], sign: int) -> Matrix:
    if len(root) != n - 1:
        raise DomainError("root has wrong rank")
    i, j = root_interval(root)
    return unit(i, j) if sign > 0 else unit(j, i)


def contract_first(matrix: Sequence[Sequence], functional: Sequence) -> List[Fraction]:
    """(alpha (x) id)(c) for alpha given in simple-root coordinates."""
    size = len(matrix)
    rank_cartan = cartan_matrix(size)
    weights = [sum(Fraction(a) * rank_cartan[k][i] for k, a in enumerate(functional)) for i in range(size)]
    return [sum(weights[i] * Fraction(matrix[i][j]) for i in range(size)) for j in range(size)]


def contract_second(matrix: Sequence[Sequence], functional: Sequence) -> List[Fraction]:
    """(id (x) alpha)(c) for alpha given in simple-root coordinates."""
    size = len(matrix)
    rank_cartan = cartan_matrix(size)
    weights = [sum(Fraction(a) * rank_cartan[k][j] for k, a in enumerate(functional)) for j in range(size)]
    return [sum(Fraction(matrix[i][j]) * weights[j] for j in range(size)) for i in range(size)]


def simple_root(rank: int, k: int) -> Root:
    return tuple(int(m == k) for m in range(1, rank + 1))


# loop algebra sl_n[u, u^-1] without central extension

class LoopElement:
    """Finite sum of matrix (x) u^k; the associative product is used for Serre checks."""

    __slots__ = ("parts",)

    def __init__(self, parts: Dict[int, Matrix] | None = None):
        self.parts: Dict[int, Matrix] = {k: m for k, m in (parts or {}).items() if m}

    @classmethod
    def of(cls, mat: Matrix, degree: int = 0) -> "LoopElement":
        return cls({degree: mat})

    def __add__(self, other: "LoopElement") -> "LoopElement":
        parts = dict(self.parts)
        for k, m in other.parts.items():
            parts[k] = mat_add(parts.get(k, {}), m)
        return LoopElement(parts)

    def scale(self, c) -> "LoopElement":
        return LoopElement({k: mat_scale(m, c) for k, m in self.parts.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LoopElement") -> "LoopElement":
        out = LoopElement()
        for a, x in self.parts.items():
            for b, y in other.parts.items():
                out = out + LoopElement({a + b: mat_mul(x, y)})
        return out

    def bracket(self, other: "LoopElement") -> "LoopElement":
        return self * other - other * self

    def degrees(self) -> List[int]:
        return sorted(self.parts)

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"LoopElement({self.parts})"


def loop_realize(n: int, label: str) -> LoopElement:
    """Images of affine Chevalley generators: labels 'e{i}', 'f{i}', 'h{i}' for i = 0..n-1."""
    kind, idx = label[0], int(label[1:])
    if kind not in "efh" or not 0 <= idx < n:
        raise DomainError(f"bad generator label {label!r}")
    if idx == 0:
        if kind == "e":
            return LoopElement.of(unit(n, 1), 1)
        if kind == "f":
            return LoopElement.of(unit(1, n), -1)
        return LoopElement.of(mat_sub(unit(n, n), unit(1, 1)), 0)
    if kind == "e":
        return LoopElement.of(unit(idx, idx + 1))
    if kind == "f":
        return LoopElement.of(unit(idx + 1, idx))
    return LoopElement.of(mat_sub(unit(idx, idx), unit(idx + 1, idx + 1)))


def check_chevalley_relations(n: int, affine: bool) -> List[str]:
    """Verify Cartan, Chevalley and Serre relations; returns a list of failures."""
    size = n if affine else n - 1
    cart = cartan_matrix(n - 1, affine)
    offset = 0 if affine else 1
    gen = {}
    for k in range(size):
        idx = k + offset
        for kind in "efh":
            gen[kind, k] = loop_realize(n, f"{kind}{idx}")
    failures = []
    for a in range(size):
        for b in range(size):
            hab = gen["h", a].bracket(gen["e", b])
            if hab != gen["e", b].scale(cart[a][b]):
                failures.append(f"[h{a + offset}, e{b + offset}]")
            if gen["h", a].bracket(gen["f", b]) != gen["f", b].scale(-cart[a][b]):
                failures.append(f"[h{a + offset}, f{b + offset}]")
            expected = gen["h", a] if a == b else LoopElement()
            if gen["e", a].bracket(gen["f", b]) != expected:
                failures.append(f"[e{a + offset}, f{b + offset}]")
            if a == b:
                continue
            for kind in "ef":
                x, y = gen[kind, a], gen[kind, b]
                if cart[a][b] == -1:
                    serre = x * x * y - (x * y * x).scale(2) + y * x * x
                elif cart[a][b] == 0:
                    serre = x * y - y * x
                else:
                    continue
                if not serre.is_zero():
                    failures.append(f"serre {kind}{a + offset},{kind}{b + offset}")
    return failures
