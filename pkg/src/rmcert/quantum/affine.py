"""Affine side: the R-matrix of U_q(sl_4 hat) in evaluation representations, its twist by the
affinized shift twist, the quantum Yang-Baxter check and the first-order classical limit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .. import linalg
from ..cybe import IntegrityError, Tensor2, cybe_residual
from ..liecore import casimir
from ..linalg import SpMat, kron, swap_permutation
from ..scalars import MultiPoly, RatFun, expand_at_one
from .reps import QRep, delta_pullback, opposite_pullback
from .twist import AFFINE_REPAIRED, TwistSpec, shift_twist, shift_twist_inverse


class DegenerateParameter(IntegrityError):
    pass


def affine_twist(first: QRep, second: QRep, spec: TwistSpec = AFFINE_REPAIRED) -> SpMat:
    """Image of the affinized twist: seaweed-routed F^(3)F^(2)F^(1), then K-hat_4."""
    if not (first.affine and second.affine):
        raise IntegrityError("affine twist needs evaluation representations")
    return shift_twist(first, second, spec)


def _used_gens(rows: Sequence[Dict[int, MultiPoly]]) -> Tuple[str, ...]:
    names = set()
    for row in rows:
        for v in row.values():
            names.update(v.used_variables())
    return tuple(sorted(names))


def intertwiner_system(first: QRep, second: QRep):
    """Rows of R Delta(x) - Delta^op(x) R = 0 over weight-preserving unknowns R[i, j]."""
    pulled = delta_pullback(first, second)
    opp = opposite_pullback(first, second)
    dim = pulled.dim
    unknowns = [(i, j) for i in range(dim) for j in range(dim) if pulled.weights[i] == pulled.weights[j]]
    index = {p: k for k, p in enumerate(unknowns)}
    by_row: Dict[int, List[int]] = {}
    by_col: Dict[int, List[int]] = {}
    for i, j in unknowns:
        by_row.setdefault(i, []).append(j)
        by_col.setdefault(j, []).append(i)
    rows = []
    for node in pulled.nodes:
        for x, y in ((pulled.e[node], opp.e[node]), (pulled.f[node], opp.f[node])):
            eqs: Dict[Tuple[int, int], Dict[int, MultiPoly]] = {}
            for k, j, v in x.entries():
                for i in by_col.get(k, ()):
                    row = eqs.setdefault((i, j), {})
                    col = index[(i, k)]
                    row[col] = row[col] + v if col in row else v
            for i, k, v in y.entries():
                for j in by_row.get(k, ()):
                    row = eqs.setdefault((i, j), {})
                    col = index[(k, j)]
                    row[col] = row[col] - v if col in row else -v
            for row in eqs.values():
                row = {c: v for c, v in row.items() if not v.is_zero()}
                if row:
                    rows.append(row)
    return rows, unknowns, dim


def solve_intertwiner(first: QRep, second: QRep) -> SpMat:
    """Unique-up-to-scalar R with R Delta(x) = Delta^op(x) R on generators.

    The kernel vector is returned primitive with polynomial entries (no entry is forced to 1,
    which would introduce denominators).
    """
    rows, unknowns, dim = intertwiner_system(first, second)
    basis = linalg.poly_nullspace(rows, len(unknowns), _used_gens(rows))
    if len(basis) != 1:
        raise DegenerateParameter(f"intertwiner space has dimension {len(basis)}")
    vec = basis[0]
    rmat = SpMat.from_entries((dim, dim), ((i, j, v) for (i, j), v in zip(unknowns, vec) if not v.is_zero()))
    if is_flip_proportional(rmat, first.dim, second.dim):
        raise DegenerateParameter("intertwiner is proportional to the flip (coinciding spectral parameters)")
    return rmat


def is_flip_proportional(mat: SpMat, d1: int, d2: int) -> bool:
    perm = swap_permutation(d1, d2)
    entries = list(mat.entries())
    if len(entries) != d1 * d2:
        return False
    first = entries[0][2]
    return all(perm[j] == i and v == first for i, j, v in entries)


def flip_operator(mat: SpMat, d1: int, d2: int) -> SpMat:
    """P M P for M acting on V2 (x) V1, landing on V1 (x) V2."""
    return mat.permute(swap_permutation(d2, d1))


def twisted_rmatrix(rmat: SpMat, first: QRep, second: QRep,
                    builder: Callable[[QRep, QRep], SpMat] | None = None,
                    inverse_builder: Callable[[QRep, QRep], SpMat] | None = None) -> SpMat:
    """R_F = F21 R F^{-1}, where F21 is the flip of F built on (second, first)."""
    if builder is None:
        builder = affine_twist
        inverse_builder = lambda a, b: shift_twist_inverse(a, b, AFFINE_REPAIRED)
    f21 = flip_operator(builder(second, first), first.dim, second.dim)
    finv = inverse_builder(first, second)
    return f21 @ rmat @ finv


def relabel(mat: SpMat, mapping: Dict[str, str]) -> SpMat:
    images = {a: MultiPoly.var(b) for a, b in mapping.items()}
    return mat.map(lambda v: v.subs(images))


# quantum Yang-Baxter

def leg_embeddings(r12: SpMat, r13: SpMat, r23: SpMat, dim: int) -> Tuple[SpMat, SpMat, SpMat]:
    ident = SpMat.identity(dim)
    perm = [0] * dim ** 3
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                perm[(a * dim + c) * dim + b] = (a * dim + b) * dim + c
    return kron(r12, ident), kron(r13, ident).permute(perm), kron(ident, r23)


@dataclass
class QybeReport:
    nonzero_entries: int
    dim: int

    @property
    def ok(self) -> bool:
        return self.nonzero_entries == 0


def qybe_check(rmat_u1u2: SpMat, dim: int = 4) -> QybeReport:
    """R12(u1,u2) R13(u1,u3) R23(u2,u3) = R23 R13 R12, from one symbolic R(u1, u2)."""
    r13 = relabel(rmat_u1u2, {"u2": "u3"})
    r23 = relabel(rmat_u1u2, {"u1": "u2", "u2": "u3"})
    a, b, c = leg_embeddings(rmat_u1u2, r13, r23, dim)
    resid = a @ b @ c - c @ b @ a
    return QybeReport(resid.nnz(), dim ** 3)


# classical limit

@dataclass
class SemiclassicalReport:
    leading_is_scalar: bool
    scale: Optional[RatFun]
    matches_modulo_identity: bool
    cybe_ok: bool
    unitarity_ok: bool
    omega_multiple: Optional[RatFun] = None
    extracted: Optional[Tensor2] = None
    difference: Optional[Tensor2] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.leading_is_scalar and self.matches_modulo_identity and self.cybe_ok and self.unitarity_ok


def _matrix_to_tensor(entries: Dict[Tuple[int, int], object], n: int) -> Tensor2:
    terms = {}
    for (row, col), v in entries.items():
        i, k = divmod(row, n)
        j, l = divmod(col, n)
        terms[((i + 1, j + 1), (k + 1, l + 1))] = v
    return Tensor2(n, terms)


def tensor_to_entries(tensor: Tensor2) -> Dict[Tuple[int, int], RatFun]:
    n = tensor.n
    out: Dict[Tuple[int, int], RatFun] = {}
    for ((i, j), (k, l)), c in tensor.terms.items():
        key = ((i - 1) * n + (k - 1), (j - 1) * n + (l - 1))
        c = _as_ratfun(c)
        out[key] = out[key] + c if key in out else c
    return out


def _as_ratfun(v) -> RatFun:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, MultiPoly):
        return RatFun(v)
    return RatFun(MultiPoly.const(v))


ZERO = RatFun(MultiPoly.const(0))


def identity_residue(entries: Dict[Tuple[int, int], RatFun], dim: int) -> Optional[RatFun]:
    """f when entries == f Id, else None."""
    for (i, j), v in entries.items():
        if i != j and not v.is_zero():
            return None
    vals = [entries.get((i, i), ZERO) for i in range(dim)]
    if any(v != vals[0] for v in vals[1:]):
        return None
    return vals[0]


def _solve_multiple(entries, basis_entries) -> Optional[RatFun]:
    """mu with entries - mu * basis off-diagonal-free and scalar on the diagonal, read off an off-diagonal entry."""
    for key, bv in basis_entries.items():
        if key[0] != key[1] and not bv.is_zero():
            return (entries.get(key, ZERO) / bv).reduced()
    return None


def _subtract(entries, basis_entries, mu):
    out = dict(entries)
    for key, bv in basis_entries.items():
        out[key] = out.get(key, ZERO) - mu * bv
    return out


def first_order(rmat: SpMat) -> Tuple[Dict[Tuple[int, int], MultiPoly], Dict[Tuple[int, int], MultiPoly]]:
    """Coefficients of eps^0 and eps^1 after s = 1 + eps, with u1 -> z, u2 -> t."""
    ren = {"u1": MultiPoly.var("z"), "u2": MultiPoly.var("t")}
    zeroth, first = {}, {}
    for i, j, v in rmat.entries():
        series = expand_at_one(v.subs(ren), "s", 3)
        c0, c1 = series.coeffs[0], series.coeffs[1]
        if not c0.is_zero():
            zeroth[(i, j)] = c0
        if not c1.is_zero():
            first[(i, j)] = c1
    return zeroth, first


def semiclassical_extract(rmat: SpMat, target: Tensor2) -> SemiclassicalReport:
    """Compare the order-eps term of rmat (normalized by its scalar leading term) with target.

    target is X(z, t) as a Tensor2 (z = u1, t = u2).  The proportionality between the
    first-order term and target is solved for and reported; agreement is modulo
    multiples of the identity.  Unitarity asks r + r21(t, z) to lie in
    Q(z, t) Omega + Q(z, t) Id; the Omega multiple is reported.
    """
    dim = rmat.shape[0]
    n = target.n
    zeroth, first = first_order(rmat)
    lead = identity_residue({k: RatFun(v) for k, v in zeroth.items()}, dim)
    notes = []
    if lead is None or lead.is_zero():
        return SemiclassicalReport(False, None, False, False, False, notes=["eps^0 term is not a scalar"])
    extracted = {k: (RatFun(v) / lead).reduced() for k, v in first.items()}
    target_entries = tensor_to_entries(target)
    scale = _solve_multiple(extracted, target_entries)
    if scale is None:
        return SemiclassicalReport(True, None, False, False, False, notes=["target has no off-diagonal entry"])
    diff = _subtract(extracted, target_entries, scale)
    matches = identity_residue(diff, dim) is not None
    if not (scale.num.is_constant() and scale.den.is_constant()):
        notes.append("proportionality factor depends on the spectral parameters")
        matches = False
    rtensor = _matrix_to_tensor(extracted, n)
    cybe_ok = cybe_residual(rtensor).is_zero()
    sym = tensor_to_entries(rtensor + rtensor.flip())
    omega = tensor_to_entries(casimir(n))
    mu = _solve_multiple(sym, omega)
    unitarity_ok = mu is not None and identity_residue(_subtract(sym, omega, mu), dim) is not None
    difference = None if matches else _matrix_to_tensor(diff, n)
    return SemiclassicalReport(True, scale, matches, cybe_ok, unitarity_ok, mu, rtensor, difference, notes)
