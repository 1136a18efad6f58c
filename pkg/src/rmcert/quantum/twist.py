"""Cartan twists, primed root vectors and the shift-by-one twist of U_q(sl_5), evaluated in representations.

Universal elements are kept as builders: a twist is a function of the two representations
it acts on, so Delta-pullbacks and leg embeddings are obtained by rebuilding on
delta_pullback(...) instead of manipulating bare matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..cybe import IntegrityError
from ..fixtures import P5, IOTA_P5, R0_SL5, R0HAT_SL4
from ..linalg import SpMat, kron, unipotent_inverse
from ..liecore import contract_first, contract_second, simple_root
from ..scalars import MultiPoly, RatFun
from .reps import QRep, delta_pullback

Vector = List[Fraction]


def cartan_twist(r0: Sequence[Sequence], first: QRep, second: QRep) -> SpMat:
    """Diagonal image of q^{r0} on weight vectors: q^{lambda r0 mu}."""
    rank = len(r0)
    entries = []
    for w1 in first.weights:
        for w2 in second.weights:
            expo = sum(Fraction(r0[i][j]) * w1[i] * w2[j] for i in range(rank) for j in range(rank))
            entries.append(first.qfield.qpow(expo))
    return SpMat.diag(entries)


def cartan_twist_inverse(r0: Sequence[Sequence], first: QRep, second: QRep) -> SpMat:
    neg = [[-Fraction(x) for x in row] for row in r0]
    return cartan_twist(neg, first, second)


def exp_q2(arg: SpMat, qsq: MultiPoly) -> SpMat:
    """exp_{q^2}(x) = sum x^n / (n)_{q^2}!, summed until the next power is exactly zero."""
    dim = arg.shape[0]
    result = SpMat.identity(dim)
    power = SpMat.identity(dim)
    factorial = MultiPoly.const(1)
    for n in range(1, dim + 2):
        power = power @ arg
        if power.is_zero():
            return result
        qint = sum((qsq ** k for k in range(n)), MultiPoly.const(0))
        factorial = factorial * qint
        if factorial == 1:
            result = result + power
        else:
            result = result.map(lambda v: v if isinstance(v, RatFun) else RatFun(v))
            result = result + power.map(lambda v: RatFun(v, factorial))
    raise IntegrityError("q-exponential argument is not nilpotent")


# generator routing: plain U_q(sl_5), or through the seaweed embedding into U_q(sl_4 hat)

@dataclass(frozen=True)
class GeneratorMap:
    name: str
    positive: Dict[int, int]
    negative: Dict[int, int]
    embeds_cartan: bool

    def pos(self, rep: QRep, l: int) -> SpMat:
        if l not in self.positive:
            raise IntegrityError(f"e_alpha{l} is outside the embedded subalgebra")
        return rep.e[self.positive[l]]

    def neg(self, rep: QRep, l: int) -> SpMat:
        if l not in self.negative:
            raise IntegrityError(f"e_-alpha{l} is outside the embedded subalgebra")
        return rep.f[self.negative[l]]

    def cartan(self, vec: Sequence) -> List[Fraction]:
        return iota_cartan(vec) if self.embeds_cartan else [Fraction(x) for x in vec]


FINITE = GeneratorMap("sl5", {1: 1, 2: 2, 3: 3, 4: 4}, {1: 1, 2: 2, 3: 3, 4: 4}, False)
# alpha_4 -> affine node 0 (the root delta - alpha_1 - alpha_2 - alpha_3); negative side extended to alpha_2, alpha_3
SEAWEED = GeneratorMap("seaweed", {2: 2, 3: 3, 4: 0}, {1: 1, 2: 2, 3: 3}, True)


def in_seaweed_cartan(vec: Sequence) -> bool:
    """Is sum c_k h_k in span{p5, h2, h3}?  Equivalent to c_1 + c_4 = 0."""
    return Fraction(vec[0]) + Fraction(vec[3]) == 0


def iota_cartan(vec: Sequence) -> List[Fraction]:
    """Image of x p5 + y h2 + z h3 in h-hat coordinates."""
    vec = [Fraction(x) for x in vec]
    if not in_seaweed_cartan(vec):
        raise IntegrityError(f"Cartan element {vec} is outside the restricted seaweed")
    x = vec[0] / P5[0]
    rest = [c - x * p for c, p in zip(vec, P5)]
    return [x * IOTA_P5[0], x * IOTA_P5[1] + rest[1], x * IOTA_P5[2] + rest[2]]


# primed root vectors

def dressing_positive(r0: Sequence[Sequence], l: int) -> Vector:
    """(alpha_l (x) id)(r0)."""
    return contract_first(r0, simple_root(len(r0), l))


def dressing_negative(r0: Sequence[Sequence], l: int) -> Vector:
    """(id (x) alpha_l)(r0)."""
    return contract_second(r0, simple_root(len(r0), l))


def root_vector_positive(rep: QRep, gmap: GeneratorMap, lo: int, hi: int) -> SpMat:
    """e_{alpha_lo + ... + alpha_hi}: x = e_hi, then x <- e_l x - q^{-1} x e_l for l = hi-1 .. lo."""
    qinv = rep.qfield.qpow(-1)
    x = gmap.pos(rep, hi)
    for l in range(hi - 1, lo - 1, -1):
        el = gmap.pos(rep, l)
        x = el @ x - (x @ el).scale(qinv)
    return x


def root_vector_negative(rep: QRep, gmap: GeneratorMap, lo: int, hi: int) -> SpMat:
    """e_{-(alpha_lo + ... + alpha_hi)}: x = f_hi, then x <- x f_l - q f_l x."""
    q = rep.qfield.q
    x = gmap.neg(rep, hi)
    for l in range(hi - 1, lo - 1, -1):
        fl = gmap.neg(rep, l)
        x = x @ fl - (fl @ x).scale(q)
    return x


def primed_positive(rep: QRep, gmap: GeneratorMap, r0, lo: int, hi: int) -> SpMat:
    total = [sum(col) for col in zip(*(dressing_positive(r0, l) for l in range(lo, hi + 1)))]
    return rep.qh(gmap.cartan(total)) @ root_vector_positive(rep, gmap, lo, hi)


def primed_negative(rep: QRep, gmap: GeneratorMap, r0, lo: int, hi: int) -> SpMat:
    total = [-sum(col) for col in zip(*(dressing_negative(r0, l) for l in range(lo, hi + 1)))]
    return rep.qh(gmap.cartan(total)) @ root_vector_negative(rep, gmap, lo, hi)


# the shift-by-one twist

NORMAL_ORDER = ((1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))  # alpha_1 < alpha_1+alpha_2 < ... < alpha_3


@dataclass(frozen=True)
class TwistSpec:
    """Reading of the exp-factor product.

    coefficient: 'literal' uses q^{-1} - q, 'repaired' uses (q^{-1} - q) q^{-1}.
    beta_order: 'normal' or 'reversed' order of beta inside each F^(k).
    overrides: per-factor coefficient readings keyed by factor label, for diagnostics.
    dropped: factor labels omitted, for diagnostics.
    """
    coefficient: str = "repaired"
    beta_order: str = "reversed"
    r0: Tuple[Tuple[Fraction, ...], ...] = R0_SL5
    cartan_r0: Optional[Tuple[Tuple[Fraction, ...], ...]] = R0_SL5
    gmap: GeneratorMap = FINITE
    overrides: Tuple[Tuple[str, str], ...] = ()
    dropped: Tuple[str, ...] = ()


LITERAL = TwistSpec(coefficient="literal", beta_order="normal")
REPAIRED = TwistSpec()
AFFINE_LITERAL = TwistSpec(coefficient="literal", beta_order="normal", cartan_r0=R0HAT_SL4, gmap=SEAWEED)
AFFINE_REPAIRED = TwistSpec(cartan_r0=R0HAT_SL4, gmap=SEAWEED)


def factor_labels(spec: TwistSpec = REPAIRED) -> List[Tuple[str, int, int, int]]:
    """(label, k, lo, hi) in product order; factors with tau^k(beta) not a root are omitted."""
    betas = list(NORMAL_ORDER)
    if spec.beta_order == "reversed":
        betas.reverse()
    elif spec.beta_order != "normal":
        raise ValueError(spec.beta_order)
    out = []
    for k in (3, 2, 1):
        for lo, hi in betas:
            if hi + k <= 4:
                out.append((f"k{k}:a{lo}..a{hi}", k, lo, hi))
    return out


def _coefficient(mode: str, rep: QRep) -> MultiPoly:
    q, qinv = rep.qfield.q, rep.qfield.qpow(-1)
    if mode == "literal":
        return qinv - q
    if mode == "repaired":
        return (qinv - q) * qinv
    raise ValueError(mode)


def twist_factors(first: QRep, second: QRep, spec: TwistSpec = REPAIRED) -> List[Tuple[str, SpMat]]:
    qsq = first.qfield.qpow(2)
    overrides = dict(spec.overrides)
    out = []
    for label, k, lo, hi in factor_labels(spec):
        if label in spec.dropped:
            continue
        coeff = _coefficient(overrides.get(label, spec.coefficient), first)
        arg = kron(primed_positive(first, spec.gmap, spec.r0, lo + k, hi + k),
                   primed_negative(second, spec.gmap, spec.r0, lo, hi)).scale(coeff)
        out.append((label, exp_q2(arg, qsq)))
    return out


def twist_factor(k: int, first: QRep, second: QRep, spec: TwistSpec = REPAIRED) -> SpMat:
    """F^(k): the product of the exp-factors with shift k."""
    out = SpMat.identity(first.dim * second.dim)
    for label, mat in twist_factors(first, second, spec):
        if label.startswith(f"k{k}:"):
            out = out @ mat
    return out


def shift_twist(first: QRep, second: QRep, spec: TwistSpec = REPAIRED) -> SpMat:
    """F^(3) F^(2) F^(1) times the Cartan twist (K_5, or K-hat_4 for the affine reading)."""
    out = SpMat.identity(first.dim * second.dim)
    for _, mat in twist_factors(first, second, spec):
        out = out @ mat
    if spec.cartan_r0 is not None:
        out = out @ cartan_twist(spec.cartan_r0, first, second)
    return out


def shift_twist_inverse(first: QRep, second: QRep, spec: TwistSpec = REPAIRED) -> SpMat:
    unip = SpMat.identity(first.dim * second.dim)
    for _, mat in twist_factors(first, second, spec):
        unip = unip @ mat
    inv = unipotent_inverse(unip)
    if spec.cartan_r0 is not None:
        inv = cartan_twist_inverse(spec.cartan_r0, first, second) @ inv
    return inv


# cocycle condition

TwistBuilder = Callable[[QRep, QRep], SpMat]


@dataclass
class CocycleReport:
    label: str
    dim: int
    nonzero_entries: int
    worst_entry: Optional[Tuple[int, int, str]] = None
    diagnostics: List[Tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.nonzero_entries == 0


def _worst(mat: SpMat):
    worst, best_deg = None, -1
    for i, j, v in mat.entries():
        deg = sum(abs(x) for x in v.leading()[0]) if isinstance(v, MultiPoly) and not v.is_zero() else 0
        if deg > best_deg:
            worst, best_deg = (i, j, str(v)), deg
    return worst


def cocycle_residual(builder: TwistBuilder, reps: Sequence[QRep]) -> SpMat:
    """F12 (Delta (x) id)(F) - F23 (id (x) Delta)(F) on V1 (x) V2 (x) V3."""
    v1, v2, v3 = reps
    lhs = kron(builder(v1, v2), v3.identity()) @ builder(delta_pullback(v1, v2), v3)
    rhs = kron(v1.identity(), builder(v2, v3)) @ builder(v1, delta_pullback(v2, v3))
    return lhs - rhs


def cocycle_check(builder: TwistBuilder, reps: Sequence[QRep], label: str = "twist") -> CocycleReport:
    resid = cocycle_residual(builder, reps)
    dim = reps[0].dim * reps[1].dim * reps[2].dim
    return CocycleReport(label, dim, resid.nnz(), _worst(resid) if resid.nnz() else None)


def spec_builder(spec: TwistSpec) -> TwistBuilder:
    return lambda a, b: shift_twist(a, b, spec)


def cartan_builder(r0) -> TwistBuilder:
    return lambda a, b: cartan_twist(r0, a, b)


def factor_diagnostics(spec: TwistSpec, reps: Sequence[QRep]) -> List[Tuple[str, int, int]]:
    """Per factor, starting from the repaired reading with spec's routing and Cartan part:
    residual entries when only that factor takes the literal coefficient, and when it is dropped."""
    base = replace(spec, coefficient="repaired", beta_order="reversed", overrides=(), dropped=())
    out = []
    for label, *_ in factor_labels(base):
        solo = replace(base, overrides=((label, "literal"),))
        without = replace(base, dropped=(label,))
        out.append((label, cocycle_residual(spec_builder(solo), reps).nnz(),
                    cocycle_residual(spec_builder(without), reps).nnz()))
    return out


def reading_table(spec: TwistSpec, reps: Sequence[QRep]) -> List[Tuple[str, str, int]]:
    """Cocycle residual entries for every (coefficient, beta order) reading."""
    out = []
    for coefficient in ("literal", "repaired"):
        for order in ("normal", "reversed"):
            variant = replace(spec, coefficient=coefficient, beta_order=order, overrides=(), dropped=())
            out.append((coefficient, order, cocycle_residual(spec_builder(variant), reps).nnz()))
    return out


# twisted coproducts of the primed generators

def twisted_coproduct_check(rep: QRep, r0=R0_SL5) -> List[str]:
    """K Delta(e') K^{-1} = e' (x) q^{2a} + 1 (x) e' and K Delta(f') K^{-1} = q^{-2b} (x) f' + f' (x) 1."""
    failures = []
    pulled = delta_pullback(rep, rep)
    twist = cartan_twist(r0, rep, rep)
    twist_inv = cartan_twist_inverse(r0, rep, rep)
    ident = rep.identity()
    for l in range(1, rep.n):
        a = dressing_positive(r0, l)
        b = dressing_negative(r0, l)
        eprime = rep.qh(a) @ rep.e[l]
        fprime = rep.qh([-x for x in b]) @ rep.f[l]
        lhs_e = twist @ (pulled.qh(a) @ pulled.e[l]) @ twist_inv
        rhs_e = kron(eprime, rep.qh([2 * x for x in a])) + kron(ident, eprime)
        if lhs_e != rhs_e:
            failures.append(f"e'_{l}")
        lhs_f = twist @ (pulled.qh([-x for x in b]) @ pulled.f[l]) @ twist_inv
        rhs_f = kron(rep.qh([-2 * x for x in b]), fprime) + kron(fprime, ident)
        if lhs_f != rhs_f:
            failures.append(f"f'_{l}")
    return failures
