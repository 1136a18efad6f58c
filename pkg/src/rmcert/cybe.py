"""Tensors in g(x)g and g(x)g(x)g over matrix units, and the classical Yang-Baxter oracle.

Keys are tuples of matrix units ``((i, j), (k, l))``; coefficients are Fractions,
MultiPolys or RatFuns in the spectral variables.  Spectral two-tensors use the
variables (z, t); the three-leg residual uses (z1, z2, z3).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .linalg import SpMat
from .liecore import Matrix, cartan_element, comm, mat_mul
from .scalars import MultiPoly, RatFun, StructuralError

Unit = Tuple[int, int]


class IntegrityError(RuntimeError):
    pass


def _zero(c) -> bool:
    if isinstance(c, (MultiPoly, RatFun)):
        return c.is_zero()
    return c == 0


def _subs(c, mapping):
    if isinstance(c, (MultiPoly, RatFun)):
        return c.subs(mapping)
    return c


def _mul(a, b):
    if isinstance(a, Fraction) and isinstance(b, (MultiPoly, RatFun)):
        return b * a
    return a * b


class _TensorBase:
    legs = 0

    def __init__(self, n: int, terms: Dict[tuple, object] | None = None):
        self.n = n
        self.terms: Dict[tuple, object] = {}
        for key, c in (terms or {}).items():
            if isinstance(c, int):
                c = Fraction(c)
            if not _zero(c):
                self.terms[key] = c

    def _new(self, terms):
        return type(self)(self.n, terms)

    def __add__(self, other):
        if other.n != self.n:
            raise StructuralError("algebra size mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = Fraction(c)
        return self._new({k: _mul(v, c) for k, v in self.terms.items()})

    def map_coeffs(self, fn):
        return self._new({k: fn(v) for k, v in self.terms.items()})

    def subs(self, mapping):
        return self.map_coeffs(lambda c: _subs(c, mapping))

    def is_zero(self) -> bool:
        return all(_zero(c) for c in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, _TensorBase):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def to_json(self) -> List[dict]:
        out = []
        for key in sorted(self.terms):
            out.append({"legs": [list(u) for u in key], "coeff": coeff_json(self.terms[key])})
        return out

    def __len__(self):
        return len(self.terms)


class Tensor2(_TensorBase):
    legs = 2

    def flip(self, swap_args: bool = True) -> "Tensor2":
        """Swap tensor legs; for spectral coefficients also swap z and t."""
        terms = {}
        for (a, b), c in self.terms.items():
            if swap_args and isinstance(c, (MultiPoly, RatFun)):
                c = c.subs({"z": MultiPoly.var("t"), "t": MultiPoly.var("z")})
            terms[(b, a)] = terms[(b, a)] + c if (b, a) in terms else c
        return Tensor2(self.n, terms)

    def constant_part(self) -> "Tensor2":
        """Coefficientwise value at z = t = 0 for polynomial coefficients."""
        def at_zero(c):
            if isinstance(c, RatFun):
                if not c.is_polynomial():
                    raise StructuralError("constant part needs polynomial coefficients")
                c = c.num
            if isinstance(c, MultiPoly):
                return c.subs({"z": 0, "t": 0}).constant_value()
            return c
        return Tensor2(self.n, {k: at_zero(c) for k, c in self.terms.items()})


class Tensor3(_TensorBase):
    legs = 3


def coeff_json(c) -> dict:
    if isinstance(c, RatFun):
        return {"num": str(c.num), "den": str(c.den)}
    if isinstance(c, MultiPoly):
        return {"num": str(c), "den": "1"}
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def tensor_from_matrices(n: int, pairs: Iterable[Tuple[Matrix, Matrix, object]]) -> Tensor2:
    terms: Dict[tuple, object] = {}
    for x, y, c in pairs:
        for ka, va in x.items():
            for kb, vb in y.items():
                val = _mul(c, va * vb) if not isinstance(c, Fraction) else c * va * vb
                key = (ka, kb)
                terms[key] = terms[key] + val if key in terms else val
    return Tensor2(n, terms)


def cartan_tensor(n: int, coeffs: Sequence[Sequence]) -> Tensor2:
    """Sum c_ij h_i (x) h_j as a Tensor2 over matrix units."""
    hs = [cartan_element([int(m == k) for m in range(n - 1)]) for k in range(n - 1)]
    pairs = []
    for i in range(n - 1):
        for j in range(n - 1):
            c = Fraction(coeffs[i][j])
            if c:
                pairs.append((hs[i], hs[j], c))
    return tensor_from_matrices(n, pairs)


def wedge(n: int, x: Matrix, y: Matrix, c=Fraction(1)) -> Tensor2:
    return tensor_from_matrices(n, [(x, y, Fraction(c)), (y, x, -Fraction(c))])


def sk(tensor: Tensor2) -> Tensor2:
    return tensor - tensor.flip()


# three-leg brackets

def _embed(tensor: Tensor2, slots: Tuple[int, int], names: Tuple[str, str]):
    out = []
    mapping = {"z": MultiPoly.var(names[0]), "t": MultiPoly.var(names[1])}
    for (a, b), c in tensor.terms.items():
        key = [None, None, None]
        key[slots[0]] = a
        key[slots[1]] = b
        out.append((tuple(key), _subs(c, mapping)))
    return out


def _unit_mul(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a[1] != b[0]:
        return False
    return (a[0], b[1])


def _bracket3(left, right, acc: Dict[tuple, object], factor=None):
    for ka, ca in left:
        for kb, cb in right:
            for sign, first, second in ((1, ka, kb), (-1, kb, ka)):
                key = []
                for x, y in zip(first, second):
                    m = _unit_mul(x, y)
                    if m is False:
                        break
                    key.append(m)
                else:
                    key = tuple(key)
                    val = _mul(ca, cb)
                    if factor is not None:
                        val = val * factor
                    if sign < 0:
                        val = -val
                    acc[key] = acc[key] + val if key in acc else val


def common_denominator(tensor: Tensor2) -> Tuple[Tensor2, MultiPoly]:
    """Write tensor = numerators / den with polynomial numerators."""
    dens: List[MultiPoly] = []
    for c in tensor.terms.values():
        if isinstance(c, RatFun) and not c.is_polynomial():
            if all(c.den != d and c.den != -d for d in dens):
                dens.append(c.den)
    den = MultiPoly.const(1)
    for d in dens:
        den = den * d
    terms = {}
    for k, c in tensor.terms.items():
        if isinstance(c, RatFun):
            terms[k] = c.num * den.exact_div(c.den)
        elif isinstance(c, MultiPoly):
            terms[k] = c * den
        else:
            terms[k] = den * Fraction(c)
    return Tensor2(tensor.n, terms), den


def cybe_residual(rmat: Tensor2) -> Tensor3:
    """[r12, r13] + [r12, r23] + [r13, r23] with legs at (z1, z2), (z1, z3), (z2, z3).

    The sum is formed as a cleared-denominator polynomial identity and returned as
    a Tensor3 whose coefficients carry the full denominator.
    """
    numer, den = common_denominator(rmat)
    r12 = _embed(numer, (0, 1), ("z1", "z2"))
    r13 = _embed(numer, (0, 2), ("z1", "z3"))
    r23 = _embed(numer, (1, 2), ("z2", "z3"))
    if den == 1:
        d12 = d13 = d23 = None
        full = MultiPoly.const(1)
    else:
        d12 = den.subs({"z": MultiPoly.var("z1"), "t": MultiPoly.var("z2")})
        d13 = den.subs({"z": MultiPoly.var("z1"), "t": MultiPoly.var("z3")})
        d23 = den.subs({"z": MultiPoly.var("z2"), "t": MultiPoly.var("z3")})
        full = d12 * d13 * d23
    acc: Dict[tuple, object] = {}
    _bracket3(r12, r13, acc, d23)
    _bracket3(r12, r23, acc, d13)
    _bracket3(r13, r23, acc, d12)
    if full == 1:
        return Tensor3(rmat.n, acc)
    return Tensor3(rmat.n, {k: RatFun(v if isinstance(v, MultiPoly) else MultiPoly.const(v), full)
                            for k, v in acc.items() if not _zero(v)})


def cleared_cybe_numerator(rmat: Tensor2) -> Tensor3:
    res = cybe_residual(rmat)
    return res.map_coeffs(lambda c: c.num if isinstance(c, RatFun) else c)


def unitarity_residual(rmat: Tensor2, target: Tensor2 | None = None) -> Tensor2:
    """r(z, t) + r21(t, z) - target, with the Casimir as default target."""
    from .liecore import casimir

    if target is None:
        target = casimir(rmat.n)
    return rmat + rmat.flip() - target


def spectral_unitarity_normalization(rmat: Tensor2) -> str | None:
    """Which right-hand side makes r(z,t) + r21(t,z) vanish: 'zero', 'casimir' or None."""
    from .liecore import casimir

    total = rmat + rmat.flip()
    if total.is_zero():
        return "zero"
    if (total - casimir(rmat.n)).is_zero():
        return "casimir"
    return None


# cobracket

def cobracket(xmat: Tensor2, amap: Sequence[Tuple[Matrix, MultiPoly]]) -> Tensor2:
    """[X(z,t), A(t) (x) 1 + 1 (x) A(z)] with the z = t pole cancelled exactly.

    ``amap`` is a polynomial map t -> sl_n given as (matrix, polynomial in t) pairs.
    """
    left = [(m, p) for m, p in amap]
    right = [(m, p.subs({"t": MultiPoly.var("z")})) for m, p in amap]
    acc: Dict[tuple, object] = {}

    def add(key, val):
        acc[key] = acc[key] + val if key in acc else val

    for (a, b), c in xmat.terms.items():
        ua = {a: Fraction(1)}
        ub = {b: Fraction(1)}
        for m, p in left:
            for k, v in comm(ua, m).items():
                add((k, b), _mul(c, p * v))
        for m, p in right:
            for k, v in comm(ub, m).items():
                add((a, k), _mul(c, p * v))
    out = {}
    for key, val in acc.items():
        if isinstance(val, RatFun) and not val.is_polynomial():
            quot, rem = val.num.divmod(val.den)
            if not rem.is_zero():
                raise IntegrityError(f"pole at z = t survives in coefficient of {key}")
            val = quot
        elif isinstance(val, RatFun):
            val = val.num
        if not _zero(val):
            out[key] = val
    return Tensor2(xmat.n, out)


# vector representation

def to_matrix(tensor: Tensor2) -> SpMat:
    """Image in End(V (x) V) for the defining representation."""
    n = tensor.n
    entries = []
    for ((i, j), (k, l)), c in tensor.terms.items():
        if isinstance(c, Fraction):
            c = MultiPoly.const(c)
        entries.append(((i - 1) * n + (k - 1), (j - 1) * n + (l - 1), c))
    return SpMat.from_entries((n * n, n * n), entries)


def matrix_product_check(x: Matrix, y: Matrix) -> Matrix:
    return mat_mul(x, y)
