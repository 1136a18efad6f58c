"""Matrix representations of U_q(sl_n) and U_q(sl_n hat) over Laurent polynomials in s, q = s^40.

Coproduct convention: Delta(e) = q^{-h} (x) e + e (x) 1, Delta(f) = f (x) q^{h} + 1 (x) f.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..cybe import IntegrityError
from ..linalg import SpMat, kron, swap_permutation
from ..liecore import DomainError, cartan_matrix
from ..scalars import MultiPoly

Q_EXPONENT = 40  # q = s^40 makes the fifths and eighths of the Cartan twists integral


class QField:
    """Scalars: Laurent polynomials in s, or exact rationals when s is specialized."""

    def __init__(self, s_value: Optional[Fraction] = None):
        self.s_value = None if s_value is None else Fraction(s_value)

    def spow(self, k: int) -> MultiPoly:
        if self.s_value is None:
            return MultiPoly.var("s", k) if k else MultiPoly.const(1)
        return MultiPoly.const(self.s_value ** k)

    def qpow(self, x) -> MultiPoly:
        x = Fraction(x) * Q_EXPONENT
        if x.denominator != 1:
            raise IntegrityError(f"q-exponent {x / Q_EXPONENT} is not integral in s")
        return self.spow(int(x))

    @property
    def q(self) -> MultiPoly:
        return self.qpow(1)

    def __eq__(self, other):
        return isinstance(other, QField) and other.s_value == self.s_value

    def __hash__(self):
        return hash(self.s_value)


SYMBOLIC = QField()


@dataclass
class QRep:
    """Images of e_i, f_i on a weight basis; weights are h_1..h_{n-1} eigenvalues."""
    n: int
    affine: bool
    e: Dict[int, SpMat]
    f: Dict[int, SpMat]
    weights: List[Tuple[int, ...]]
    qfield: QField = field(default_factory=QField)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def nodes(self) -> List[int]:
        return list(range(0, self.n)) if self.affine else list(range(1, self.n))

    def identity(self) -> SpMat:
        return SpMat.identity(self.dim)

    def qh(self, cartan: Sequence) -> SpMat:
        """Image of q^{sum c_k h_k}."""
        vals = [self.qfield.qpow(sum(Fraction(c) * w for c, w in zip(cartan, wt))) for wt in self.weights]
        return SpMat.diag(vals)

    def coroot(self, node: int) -> List[int]:
        rank = self.n - 1
        if node == 0:
            return [-1] * rank
        return [int(k == node) for k in range(1, rank + 1)]


def vector_rep(n: int, qfield: QField = SYMBOLIC) -> QRep:
    if n < 2:
        raise DomainError("vector representation needs n >= 2")
    one = MultiPoly.const(1)
    e = {i: SpMat.unit(n, i - 1, i, one) for i in range(1, n)}
    f = {i: SpMat.unit(n, i, i - 1, one) for i in range(1, n)}
    weights = [tuple(int(a == k) - int(a == k + 1) for k in range(1, n)) for a in range(1, n + 1)]
    return QRep(n, False, e, f, weights, qfield)


def eval_rep(n: int, spectral: str | MultiPoly = "u1", qfield: QField = SYMBOLIC) -> QRep:
    """Evaluation representation: e_0 = u E_{n1}, f_0 = u^{-1} E_{1n}."""
    if n < 3:
        raise DomainError("affine evaluation representation needs n >= 3")
    u = MultiPoly.var(spectral) if isinstance(spectral, str) else spectral
    base = vector_rep(n, qfield)
    e = dict(base.e)
    f = dict(base.f)
    e[0] = SpMat.unit(n, n - 1, 0, u)
    f[0] = SpMat.unit(n, 0, n - 1, u ** -1)
    return QRep(n, True, e, f, base.weights, qfield)


def delta_pullback(first: QRep, second: QRep) -> QRep:
    """Representation x -> (first (x) second)(Delta x) on the tensor product."""
    if first.n != second.n or first.affine != second.affine or first.qfield != second.qfield:
        raise DomainError("incompatible representations")
    id1, id2 = first.identity(), second.identity()
    e, f = {}, {}
    for node in first.nodes:
        h = first.coroot(node)
        e[node] = kron(first.qh([-c for c in h]), second.e[node]) + kron(first.e[node], id2)
        f[node] = kron(first.f[node], second.qh(h)) + kron(id1, second.f[node])
    weights = [tuple(a + b for a, b in zip(w1, w2)) for w1 in first.weights for w2 in second.weights]
    return QRep(first.n, first.affine, e, f, weights, first.qfield)


def opposite_pullback(first: QRep, second: QRep) -> QRep:
    """Delta^op on first (x) second, realized as P Delta_{second (x) first} P."""
    swapped = delta_pullback(second, first)
    perm = swap_permutation(second.dim, first.dim)
    return QRep(first.n, first.affine,
                {k: m.permute(perm) for k, m in swapped.e.items()},
                {k: m.permute(perm) for k, m in swapped.f.items()},
                [tuple(a + b for a, b in zip(w1, w2)) for w1 in first.weights for w2 in second.weights],
                first.qfield)


def trivial_rep(n: int, affine: bool = False, qfield: QField = SYMBOLIC) -> QRep:
    """The counit as a one-dimensional representation."""
    nodes = range(0, n) if affine else range(1, n)
    zero = SpMat((1, 1))
    return QRep(n, affine, {k: zero for k in nodes}, {k: zero for k in nodes}, [(0,) * (n - 1)], qfield)


def counit_check(rep: QRep) -> List[str]:
    """(eps (x) id) Delta and (id (x) eps) Delta reproduce every generator image."""
    triv = trivial_rep(rep.n, rep.affine, rep.qfield)
    failures = []
    for side, pulled in (("left", delta_pullback(triv, rep)), ("right", delta_pullback(rep, triv))):
        for node in rep.nodes:
            if pulled.e[node] != rep.e[node]:
                failures.append(f"{side} e{node}")
            if pulled.f[node] != rep.f[node]:
                failures.append(f"{side} f{node}")
    return failures


def _root_pairing(rep: QRep, i: int, j: int) -> int:
    cm = cartan_matrix(rep.n - 1, rep.affine)
    if rep.affine:
        return cm[i][j]
    return cm[i - 1][j - 1]


def _simple_weight(rep: QRep, node: int) -> Tuple[int, ...]:
    """alpha_node evaluated on h_1..h_{n-1}."""
    rank = rep.n - 1
    cm = cartan_matrix(rank)
    if node == 0:
        return tuple(-sum(cm[k][j] for j in range(rank)) for k in range(rank))
    return tuple(cm[k][node - 1] for k in range(rank))


def check_relations(rep: QRep) -> List[str]:
    """Weight, Chevalley and q-Serre relations of U_q for the given matrices."""
    failures = []
    q = rep.qfield.q
    qinv = rep.qfield.qpow(-1)
    for node in rep.nodes:
        alpha = _simple_weight(rep, node)
        for kind, mats, sign in (("e", rep.e, 1), ("f", rep.f, -1)):
            for r, c, _ in mats[node].entries():
                diff = tuple(a - b for a, b in zip(rep.weights[r], rep.weights[c]))
                if diff != tuple(sign * a for a in alpha):
                    failures.append(f"weight {kind}{node}")
                    break
    for i in rep.nodes:
        hi = rep.coroot(i)
        kplus, kminus = rep.qh(hi), rep.qh([-c for c in hi])
        for j in rep.nodes:
            lhs = (rep.e[i] @ rep.f[j] - rep.f[j] @ rep.e[i]).scale(q - qinv)
            rhs = kplus - kminus if i == j else SpMat((rep.dim, rep.dim))
            if lhs != rhs:
                failures.append(f"[e{i},f{j}]")
            if i == j:
                continue
            pairing = _root_pairing(rep, i, j)
            for kind, mats in (("e", rep.e), ("f", rep.f)):
                x, y = mats[i], mats[j]
                if pairing == -1:
                    serre = x @ x @ y - (x @ y @ x).scale(q + qinv) + y @ x @ x
                elif pairing == 0:
                    serre = x @ y - y @ x
                else:
                    continue
                if not serre.is_zero():
                    failures.append(f"serre {kind}{i},{kind}{j}")
    return failures
