"""Quasi-trigonometric r-matrices on sl_n: the sl_4 fixture, its bracket readings,
the Lagrangian subalgebra W of sl_n + sl_n, and the classical twist."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .bd import assemble_rmatrix, cg_triple, dj_rmatrix, in_solution_space
from .cybe import (IntegrityError, Tensor2, cartan_tensor, cobracket, cybe_residual,
                   spectral_unitarity_normalization, sk)
from .fixtures import FIXTURE_WEDGE, FIXTURE_ZT_BLOCK, FIXTURE_ZT_PAIRS, R0HAT_SL4, T_MATRIX
from .liecore import Matrix, build_sl, casimir, comm, mat_mul, trace_form, unit
from .scalars import MultiPoly, RatFun
from .seaweed import LinearSpan

Z = MultiPoly.var("z")
T = MultiPoly.var("t")
ONE = MultiPoly.const(1)


@dataclass
class QuasiTrigR:
    """X(z, t) = t Omega / (z - t) + poly_part(z, t)."""
    n: int
    poly_part: Tensor2

    def polar(self) -> Tensor2:
        return casimir(self.n).map_coeffs(lambda c: RatFun(T * c, Z - T))

    def full(self) -> Tensor2:
        return self.polar() + self.poly_part

    def constant_part(self) -> Tensor2:
        return self.poly_part.constant_part()


def polar_residue(xmat: Tensor2) -> Tensor2:
    """(z - t) X evaluated at z = t."""
    out = {}
    for k, c in xmat.terms.items():
        if isinstance(c, RatFun):
            num, den = c.num, c.den
            quot, rem = den.divmod(Z - T)
            if not rem.is_zero():
                raise IntegrityError("denominator is not a multiple of z - t")
            val = RatFun(num, quot).subs({"z": T})
        else:
            val = MultiPoly.const(0)
        out[k] = val
    return Tensor2(xmat.n, out)


# the printed sl_4 pieces

def _pieces(spec) -> Tensor2:
    return Tensor2(4, {key: ONE for key in spec})


def fixture_wedge_block() -> Tensor2:
    return _pieces(FIXTURE_WEDGE)


def fixture_polynomial_block() -> Tensor2:
    """(z - t)(e21 e41 + e41 e21 + e31 e31) + z e31 e42 - t e42 e31 + z e41 e32 - t e32 e41."""
    terms: Dict[tuple, MultiPoly] = {}
    for key in FIXTURE_ZT_BLOCK:
        terms[key] = Z - T
    for a, b in FIXTURE_ZT_PAIRS:
        terms[(a, b)] = terms.get((a, b), MultiPoly.const(0)) + Z
        terms[(b, a)] = terms.get((b, a), MultiPoly.const(0)) - T
    return Tensor2(4, terms)


def r0hat_tensor(flipped: bool = False) -> Tensor2:
    rt = cartan_tensor(4, R0HAT_SL4)
    return rt.flip() if flipped else rt


def _spectral(tensor: Tensor2) -> Tensor2:
    return tensor.map_coeffs(lambda c: c if isinstance(c, (MultiPoly, RatFun)) else MultiPoly.const(c))


def _base() -> Tensor2:
    return QuasiTrigR(4, _spectral(dj_rmatrix(4))).full()


SCOPES = ("wedge", "wedge+r0", "entire")
COEFFICIENTS = (Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1))


@dataclass
class Candidate:
    scope: str
    coefficient: Fraction
    flipped: bool
    tensor: Tensor2
    residual_terms: int = -1

    @property
    def name(self) -> str:
        return f"scope={self.scope},coef={self.coefficient},r0={'flip' if self.flipped else 'plain'}"

    @property
    def passes(self) -> bool:
        return self.residual_terms == 0


def literal_candidate(scope: str, coefficient: Fraction, flipped: bool) -> Tensor2:
    wedge_block = _spectral(fixture_wedge_block())
    correction = _spectral(r0hat_tensor(flipped).scale(coefficient))
    poly = fixture_polynomial_block()
    if scope == "wedge":
        inner, outer = wedge_block, correction + poly
    elif scope == "wedge+r0":
        inner, outer = wedge_block + correction, poly
    elif scope == "entire":
        inner, outer = wedge_block + correction + poly, Tensor2(4)
    else:
        raise ValueError(scope)
    return _base() + sk(inner) + outer


def literal_candidates(evaluate: bool = True) -> List[Candidate]:
    out = []
    for scope, coef, flipped in itertools.product(SCOPES, COEFFICIENTS, (False, True)):
        cand = Candidate(scope, coef, flipped, literal_candidate(scope, coef, flipped))
        if evaluate:
            cand.residual_terms = len(cybe_residual(cand.tensor).terms)
        out.append(cand)
    return out


class FixtureAmbiguity(IntegrityError):
    def __init__(self, message: str, candidates: List[Candidate]):
        super().__init__(message)
        self.candidates = candidates


def fixture_sl4() -> Tuple[QuasiTrigR, Candidate, List[Candidate]]:
    """Unique printed-reading candidate passing the CYBE oracle, or FixtureAmbiguity."""
    cands = literal_candidates()
    winners = [c for c in cands if c.passes]
    if len(winners) != 1:
        dump = ", ".join(f"{c.name}:{c.residual_terms}" for c in cands)
        raise FixtureAmbiguity(f"{len(winners)} candidate readings pass CYBE; residual term counts: {dump}", cands)
    win = winners[0]
    return QuasiTrigR(4, win.tensor - QuasiTrigR(4, Tensor2(4)).polar()), win, cands


# reading consistent with the quantized twist (see classical limit of the quantum module)

FIXTURE_M_BLOCK = (
    ((2, 1), (4, 1)),
    ((4, 1), (2, 1)),
    ((3, 1), (3, 1)),
    ((3, 1), (4, 2)),
    ((4, 1), (3, 2)),
    ((4, 1), (4, 3)),
)


def reconstructed_twist() -> Tensor2:
    """-SK(W - r0hat/2 + z M) with SK swapping z and t."""
    inner = _spectral(fixture_wedge_block()) - _spectral(r0hat_tensor().scale(Fraction(1, 2)))
    inner = inner + Tensor2(4, {key: Z for key in FIXTURE_M_BLOCK})
    return -sk(inner)


def fixture_reconstructed() -> QuasiTrigR:
    return QuasiTrigR(4, _spectral(dj_rmatrix(4)) + reconstructed_twist())


def classical_twist(xr: QuasiTrigR) -> Tensor2:
    """X - t Omega/(z - t) - r_DJ: polynomial in z, t."""
    return xr.poly_part - _spectral(dj_rmatrix(xr.n))


def constant_part_matches_shift_triple(xr: QuasiTrigR) -> Optional[List[List[Fraction]]]:
    """Return the Cartan part r0 when the constant part is a shift-triple output, else None."""
    const = xr.constant_part()
    n = xr.n
    rank = n - 1
    diag_terms = {}
    for ((i, j), (k, l)), c in const.terms.items():
        if i == j and k == l:
            diag_terms[(i, k)] = c
    # recover c_ab from diagonal matrix entries: h_a = E_aa - E_{a+1,a+1}
    # entry (i, k) = sum_ab c_ab h_a[i] h_b[k]; cumulative sums invert it.
    r0 = [[Fraction(0)] * rank for _ in range(rank)]
    for a in range(rank):
        for b in range(rank):
            r0[a][b] = sum((diag_terms.get((i, k), Fraction(0))
                            for i in range(1, a + 2) for k in range(1, b + 2)), Fraction(0))
    triple = cg_triple(n)
    if not in_solution_space(triple, r0):
        return None
    if (assemble_rmatrix(triple, r0) - const).is_zero():
        return r0
    return None


def cobracket_sweep(xr: QuasiTrigR, max_degree: int = 2) -> Tuple[int, List[str]]:
    """Cobracket on b t^k for every sl_n basis element b, 0 <= k <= max_degree."""
    xfull = xr.full()
    alg = build_sl(xr.n)
    failures = []
    count = 0
    for label, elem in zip(alg.labels, alg.elements()):
        for k in range(max_degree + 1):
            count += 1
            try:
                cobracket(xfull, [(elem, T ** k)])
            except IntegrityError as exc:
                failures.append(f"{label} t^{k}: {exc}")
    return count, failures


# Lagrangian subalgebras of sl_n + sl_n

Pair = Tuple[Matrix, Matrix]


def split_form(a: Pair, b: Pair) -> Fraction:
    """Q((x1, x2), (y1, y2)) = tr(x1 y1) - tr(x2 y2)."""
    return trace_form(a[0], b[0]) - trace_form(a[1], b[1])


def _as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return {(i + 1, j + 1): Fraction(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v}


@dataclass
class LagrangianW:
    n: int
    conjugator: Tuple[Tuple[Fraction, ...], ...]
    basis: List[Pair]


def build_lagrangian(conjugator: Sequence[Sequence] = T_MATRIX) -> LagrangianW:
    n = len(conjugator)
    if linalg.det(conjugator) == 0:
        raise ValueError("conjugating matrix is singular")
    tm = _as_matrix(conjugator)
    tinv = _as_matrix(linalg.inverse(conjugator))
    basis = [(mat_mul(mat_mul(tm, b), tinv), b) for b in build_sl(n).elements()]
    frozen = tuple(tuple(Fraction(x) for x in row) for row in conjugator)
    return LagrangianW(n, frozen, basis)


def diagonal_subalgebra(n: int) -> List[Pair]:
    return [(b, b) for b in build_sl(n).elements()]


def _pair_vector(p: Pair) -> Dict:
    vec = {(0,) + k: v for k, v in p[0].items()}
    vec.update({(1,) + k: v for k, v in p[1].items()})
    return vec


def _span_of(pairs: Sequence[Pair]) -> LinearSpan:
    span = LinearSpan()
    for p in pairs:
        span.add(_pair_vector(p))
    return span


@dataclass
class LagrangianReport:
    dim: int
    ambient_dim: int
    isotropy_violations: int
    closed: bool

    @property
    def lagrangian(self) -> bool:
        return self.isotropy_violations == 0 and 2 * self.dim == self.ambient_dim and self.closed


def check_lagrangian(w: LagrangianW | Sequence[Pair], n: int | None = None) -> LagrangianReport:
    pairs = w.basis if isinstance(w, LagrangianW) else list(w)
    n = w.n if isinstance(w, LagrangianW) else n
    span = _span_of(pairs)
    violations = sum(1 for a in pairs for b in pairs if split_form(a, b) != 0)
    closed = all(span.coordinates(_pair_vector((comm(a[0], b[0]), comm(a[1], b[1])))) is not None
                 for a in pairs for b in pairs)
    return LagrangianReport(span.size, 2 * (n * n - 1), violations, closed)


@dataclass
class TransversalReport:
    intersection_dim: int
    sum_dim: int
    ambient_dim: int

    @property
    def transversal(self) -> bool:
        return self.intersection_dim == 0 and self.sum_dim == self.ambient_dim


def check_transversal(w: LagrangianW | Sequence[Pair], other: Sequence[Pair], n: int | None = None) -> TransversalReport:
    pairs = w.basis if isinstance(w, LagrangianW) else list(w)
    n = w.n if isinstance(w, LagrangianW) else n
    dim_w = _span_of(pairs).size
    dim_l = _span_of(other).size
    total = _span_of(list(pairs) + list(other)).size
    return TransversalReport(dim_w + dim_l - total, total, 2 * (n * n - 1))
