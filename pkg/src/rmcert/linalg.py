"""Sparse matrices over exact scalars, plus bridges to sympy's exact linear algebra."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import sympy
from sympy.polys.matrices import DomainMatrix

from .scalars import VARIABLES, MultiPoly, RatFun, StructuralError

_SYMBOLS = sympy.symbols(" ".join(VARIABLES))
_SYMBOL_OF = dict(zip(VARIABLES, _SYMBOLS))


# rational matrices

def _qq(rows: Sequence[Sequence]) -> DomainMatrix:
    data = [[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix.from_list_sympy(len(rows), ncols, data).convert_to(sympy.QQ)


def _to_fraction(x) -> Fraction:
    return Fraction(int(sympy.QQ.numer(x)), int(sympy.QQ.denom(x)))


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return _qq(rows).rank()


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> List[List[Fraction]]:
    """Basis of {x : rows @ x = 0} over Q."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ns = _qq(rows).nullspace().to_list()
    return [[_to_fraction(x) for x in vec] for vec in ns]


def solve_affine(rows: Sequence[Sequence], rhs: Sequence) -> Tuple[List[Fraction] | None, List[List[Fraction]]]:
    """Particular solution (or None) and kernel basis of rows @ x = rhs."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ns = nullspace(aug, ncols + 1)
    particular = None
    for vec in ns:
        if vec[-1] != 0:
            particular = [-x / vec[-1] for x in vec[:-1]]
            break
    kernel = nullspace(rows, ncols)
    return particular, kernel


def inverse(rows: Sequence[Sequence]) -> List[List[Fraction]]:
    inv = _qq(rows).inv().to_list()
    return [[_to_fraction(x) for x in row] for row in inv]


def det(rows: Sequence[Sequence]) -> Fraction:
    return _to_fraction(_qq(rows).det())


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List[Fraction]]:
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in zip(*b)] for row in a]


# polynomial bridge

def to_sympy(poly: MultiPoly):
    expr = sympy.Integer(0)
    for exps, c in poly.terms():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for k, e in enumerate(exps):
            if e:
                term *= _SYMBOLS[k] ** e
        expr += term
    return expr


def from_sympy(expr) -> MultiPoly:
    expr = sympy.expand(expr)
    out = MultiPoly()
    if expr == 0:
        return out
    poly = sympy.Poly(expr, *_SYMBOLS)
    for monom, c in poly.terms():
        c = sympy.Rational(c)
        out = out + MultiPoly.monomial(dict(zip(VARIABLES, monom)), Fraction(int(c.p), int(c.q)))
    return out


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Polynomial gcd (delegated to sympy); monomial shifts are factored out first."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    pa = a * a.monomial_content() ** -1
    pb = b * b.monomial_content() ** -1
    g = sympy.gcd(sympy.Poly(to_sympy(pa), *_SYMBOLS), sympy.Poly(to_sympy(pb), *_SYMBOLS))
    return from_sympy(g.as_expr())


def poly_nullspace(rows: Sequence[Dict[int, MultiPoly]], ncols: int, gens: Sequence[str]) -> List[List[MultiPoly]]:
    """Kernel of a matrix with Laurent-polynomial entries over Q(gens).

    Rows are sparse dicts column -> MultiPoly.  Each row is shifted by a monomial so
    that all entries are polynomials, then sympy computes the kernel over the
    fraction field.  Returned vectors are primitive polynomial vectors.
    """
    syms = [_SYMBOL_OF[g] for g in gens]
    dense = []
    for row in rows:
        shift = None
        for val in row.values():
            mc = val.monomial_content()
            shift = mc if shift is None else _monomial_min(shift, mc)
        inv = shift ** -1 if shift is not None else MultiPoly.const(1)
        line = [sympy.Integer(0)] * ncols
        for col, val in row.items():
            line[col] = to_sympy(val * inv)
        dense.append(line)
    ring = sympy.QQ[tuple(syms)]
    mat = DomainMatrix.from_list_sympy(len(dense), ncols, dense).convert_to(ring)
    field_mat = mat.convert_to(ring.get_field())
    basis = field_mat.nullspace().to_Matrix()
    out = []
    for r in range(basis.rows):
        vec = [sympy.together(basis[r, c]) for c in range(ncols)]
        den = sympy.Integer(1)
        for v in vec:
            den = sympy.lcm(den, sympy.denom(v))
        vec = [sympy.expand(sympy.cancel(v * den)) for v in vec]
        content = sympy.Integer(0)
        for v in vec:
            if v != 0:
                content = sympy.gcd(content, v)
        vec = [sympy.expand(sympy.cancel(v / content)) for v in vec]
        out.append([from_sympy(v) for v in vec])
    return out


def _monomial_min(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    (ea, _), = a.terms()
    (eb, _), = b.terms()
    return MultiPoly.monomial({VARIABLES[k]: min(x, y) for k, (x, y) in enumerate(zip(ea, eb))})


# sparse matrices

class SpMat:
    """Sparse square-or-rectangular matrix over exact ring elements.

    Rows are stored as dicts; entries are MultiPoly, RatFun, int or Fraction and are
    combined with plain Python arithmetic.
    """

    __slots__ = ("shape", "rows")

    def __init__(self, shape: Tuple[int, int], rows: Dict[int, Dict[int, object]] | None = None):
        self.shape = shape
        self.rows: Dict[int, Dict[int, object]] = {}
        if rows:
            for i, row in rows.items():
                clean = {j: v for j, v in row.items() if not _is_zero(v)}
                if clean:
                    self.rows[i] = clean

    @classmethod
    def identity(cls, dim: int, one=None) -> "SpMat":
        one = MultiPoly.const(1) if one is None else one
        return cls((dim, dim), {i: {i: one} for i in range(dim)})

    @classmethod
    def diag(cls, entries: Sequence) -> "SpMat":
        return cls((len(entries), len(entries)), {i: {i: v} for i, v in enumerate(entries)})

    @classmethod
    def unit(cls, dim: int, i: int, j: int, value=None) -> "SpMat":
        value = MultiPoly.const(1) if value is None else value
        return cls((dim, dim), {i: {j: value}})

    @classmethod
    def from_entries(cls, shape, entries: Iterable[Tuple[int, int, object]]) -> "SpMat":
        rows: Dict[int, Dict[int, object]] = {}
        for i, j, v in entries:
            row = rows.setdefault(i, {})
            row[j] = row[j] + v if j in row else v
        return cls(shape, rows)

    def entries(self):
        for i, row in self.rows.items():
            for j, v in row.items():
                yield i, j, v

    def get(self, i: int, j: int):
        return self.rows.get(i, {}).get(j, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def __add__(self, other: "SpMat") -> "SpMat":
        if self.shape != other.shape:
            raise StructuralError("shape mismatch")
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                tgt[j] = tgt[j] + v if j in tgt else v
        return SpMat(self.shape, rows)

    def __neg__(self) -> "SpMat":
        return SpMat(self.shape, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other: "SpMat") -> "SpMat":
        return self + (-other)

    def scale(self, c) -> "SpMat":
        return SpMat(self.shape, {i: {j: v * c for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other: "SpMat") -> "SpMat":
        if self.shape[1] != other.shape[0]:
            raise StructuralError("shape mismatch in product")
        out: Dict[int, Dict[int, object]] = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: Dict[int, object] = {}
            for k, a in r.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    prod = a * b
                    acc[j] = acc[j] + prod if j in acc else prod
            if acc:
                out[i] = acc
        return SpMat((self.shape[0], other.shape[1]), out)

    def map(self, fn) -> "SpMat":
        return SpMat(self.shape, {i: {j: fn(v) for j, v in r.items()} for i, r in self.rows.items()})

    def transpose(self) -> "SpMat":
        return SpMat.from_entries((self.shape[1], self.shape[0]), ((j, i, v) for i, j, v in self.entries()))

    def permute(self, perm: Sequence[int]) -> "SpMat":
        """Conjugate by the permutation matrix sending basis i to perm[i]."""
        return SpMat(self.shape, {perm[i]: {perm[j]: v for j, v in r.items()} for i, r in self.rows.items()})

    def __eq__(self, other):
        if not isinstance(other, SpMat):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"SpMat(shape={self.shape}, nnz={self.nnz()})"


def _is_zero(v) -> bool:
    if isinstance(v, (MultiPoly, RatFun)):
        return v.is_zero()
    return v == 0


def kron(a: SpMat, b: SpMat) -> SpMat:
    rb, cb = b.shape
    rows: Dict[int, Dict[int, object]] = {}
    for i, ra in a.rows.items():
        for k, rbrow in b.rows.items():
            tgt = rows.setdefault(i * rb + k, {})
            for j, va in ra.items():
                for l, vb in rbrow.items():
                    tgt[j * cb + l] = va * vb
    return SpMat((a.shape[0] * rb, a.shape[1] * cb), rows)


def kron_all(*mats: SpMat) -> SpMat:
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def swap_permutation(d1: int, d2: int) -> List[int]:
    """Index map of V1 (x) V2 -> V2 (x) V1."""
    return [b * d1 + a for a in range(d1) for b in range(d2)]


def flip(mat: SpMat, d1: int, d2: int) -> SpMat:
    """Conjugate an operator on V1 (x) V2 by the tensor flip, landing on V2 (x) V1."""
    return mat.permute(swap_permutation(d1, d2))


def unipotent_inverse(mat: SpMat) -> SpMat:
    """Inverse of I + N for nilpotent N via the terminating Neumann series."""
    dim = mat.shape[0]
    ident = SpMat.identity(dim)
    nil = mat - ident
    out = ident
    power = ident
    for _ in range(dim + 1):
        power = -(power @ nil)
        if power.is_zero():
            return out
        out = out + power
    raise StructuralError("matrix is not unipotent")
