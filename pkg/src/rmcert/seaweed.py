"""Seaweed subalgebras of sl_n, their index, and the loop embedding of the restricted sl_5 seaweed."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .cybe import IntegrityError
from .fixtures import IOTA_P5, P5
from .liecore import (DomainError, LoopElement, Matrix, cartan_element, comm, mat_add, mat_scale,
                      trace_form, unit)


class LinearSpan:
    """Incremental row-echelon span of sparse vectors (dict key -> Fraction)."""

    def __init__(self):
        self.pivots: List[Tuple[object, Dict, Dict[int, Fraction]]] = []
        self.size = 0

    def reduce(self, vec: Dict) -> Tuple[Dict, Dict[int, Fraction]]:
        """Residual of vec and its combination over the added vectors (by insertion index)."""
        vec = dict(vec)
        combo: Dict[int, Fraction] = {}
        for key, pvec, pcombo in self.pivots:
            c = vec.get(key, 0)
            if c:
                for k, v in pvec.items():
                    nv = vec.get(k, 0) - c * v
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                for k, v in pcombo.items():
                    nv = combo.get(k, 0) + c * v
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return vec, combo

    def add(self, vec: Dict) -> bool:
        """Add vec; returns False if it was already in the span."""
        resid, combo = self.reduce(vec)
        if not resid:
            return False
        key = min(resid, key=repr)
        lead = resid[key]
        pvec = {k: v / lead for k, v in resid.items()}
        # pivot row expressed through original vectors: (vec - combo) / lead
        pcombo = {k: -v / lead for k, v in combo.items()}
        pcombo[self.size] = Fraction(1) / lead
        # keep earlier pivots reduced against the new one
        new_pivots = []
        for pkey, ovec, ocombo in self.pivots:
            c = ovec.get(key, 0)
            if c:
                ovec = {k: ovec.get(k, 0) - c * pvec.get(k, 0) for k in set(ovec) | set(pvec)}
                ovec = {k: v for k, v in ovec.items() if v}
                ocombo = {k: ocombo.get(k, 0) - c * pcombo.get(k, 0) for k in set(ocombo) | set(pcombo)}
                ocombo = {k: v for k, v in ocombo.items() if v}
            new_pivots.append((pkey, ovec, ocombo))
        new_pivots.append((key, pvec, pcombo))
        self.pivots = new_pivots
        self.size += 1
        return True

    def coordinates(self, vec: Dict) -> Optional[Dict[int, Fraction]]:
        resid, combo = self.reduce(vec)
        return None if resid else combo


@dataclass
class SeaweedAlg:
    n: int
    label: str
    labels: List[str]
    basis: List[Matrix]
    span: LinearSpan = field(default_factory=LinearSpan, repr=False)

    def __post_init__(self):
        for b in self.basis:
            if not self.span.add(b):
                raise IntegrityError(f"{self.label}: basis is linearly dependent")
        for i, x in enumerate(self.basis):
            for y in self.basis[i + 1:]:
                if self.coordinates(comm(x, y)) is None:
                    raise IntegrityError(f"{self.label}: not closed under the bracket")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, mat: Matrix) -> Optional[List[Fraction]]:
        combo = self.span.coordinates(mat)
        if combo is None:
            return None
        return [combo.get(k, Fraction(0)) for k in range(self.dim)]

    def element(self, coords: Sequence) -> Matrix:
        return mat_add(*(mat_scale(b, c) for b, c in zip(self.basis, coords) if c))


def _contains(i: int, j: int, k: int) -> bool:
    """Does the root of E_ij (i < j) contain alpha_k?"""
    return i <= k < j


def build_seaweed(n: int, plus_index: int, minus_index: int, label: str | None = None) -> SeaweedAlg:
    """P_i^+ cap P_j^-: Cartan, positive roots avoiding alpha_i, negative roots avoiding alpha_j."""
    if n < 2 or not (1 <= plus_index < n and 1 <= minus_index < n):
        raise DomainError("seaweed indices out of range")
    labels, basis = [], []
    for k in range(1, n):
        labels.append(f"h{k}")
        basis.append(cartan_element([int(m == k) for m in range(1, n)]))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not _contains(i, j, plus_index):
                labels.append(f"E{i}{j}")
                basis.append(unit(i, j))
            if not _contains(i, j, minus_index):
                labels.append(f"E{j}{i}")
                basis.append(unit(j, i))
    return SeaweedAlg(n, label or f"SW({n};{plus_index},{minus_index})", labels, basis)


def p_element(n: int) -> List[Fraction]:
    return [Fraction(n - 2 * k, n) for k in range(1, n)]


def restricted_seaweed(n: int) -> SeaweedAlg:
    if n < 3:
        raise DomainError("restricted seaweed needs n >= 3")
    full = build_seaweed(n, 1, n - 1)
    labels, basis = ["p"], [cartan_element(p_element(n))]
    for lab, b in zip(full.labels, full.basis):
        if lab not in ("h1", f"h{n - 1}"):
            labels.append(lab)
            basis.append(b)
    return SeaweedAlg(n, f"SW'_{n}", labels, basis)


def algebra_index(alg: SeaweedAlg, trials: int = 8, seed: int = 0) -> int:
    """dim - max rank of (F([b_i, b_j])) over random functionals F = tr(M .)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    brackets = [[comm(x, y) for y in alg.basis] for x in alg.basis]
    best = 0
    for _ in range(trials):
        functional = {(i, j): Fraction(rng.randint(-50, 50), rng.randint(1, 7))
                      for i in range(1, alg.n + 1) for j in range(1, alg.n + 1)}
        form = [[trace_form(functional, b) for b in row] for row in brackets]
        best = max(best, linalg.rank(form))
        if best == alg.dim:
            break
    return alg.dim - best


def rebase(alg: SeaweedAlg, change: Sequence[Sequence]) -> SeaweedAlg:
    """Same algebra in the basis b'_i = sum_j change[i][j] b_j."""
    basis = [alg.element(row) for row in change]
    return SeaweedAlg(alg.n, alg.label, [f"b{k}" for k in range(len(basis))], basis)


# the embedding SW'_5 -> loop sl_4

EMBEDDING_GENERATORS = ("p5", "h2", "h3", "E21", "E23", "E32", "E34", "E43", "E45")


def source_generator(label: str) -> Matrix:
    if label == "p5":
        return cartan_element(P5)
    if label[0] == "h":
        k = int(label[1:])
        return cartan_element([int(m == k) for m in range(1, 5)])
    return unit(int(label[1]), int(label[2]))


@dataclass
class EmbeddingMap:
    assignments: Dict[str, LoopElement]

    def image(self, label: str) -> LoopElement:
        return self.assignments[label]


def embedding_sl5() -> EmbeddingMap:
    """Generator table of the embedding; E45 goes to E41 u, the affine alpha_0 root vector."""
    table = {
        "p5": LoopElement.of(cartan_element(IOTA_P5)),
        "h2": LoopElement.of(cartan_element((0, 1, 0))),
        "h3": LoopElement.of(cartan_element((0, 0, 1))),
        "E21": LoopElement.of(unit(2, 1)),
        "E23": LoopElement.of(unit(2, 3)),
        "E32": LoopElement.of(unit(3, 2)),
        "E34": LoopElement.of(unit(3, 4)),
        "E43": LoopElement.of(unit(4, 3)),
        "E45": LoopElement.of(unit(4, 1), 1),
    }
    return EmbeddingMap(table)


def _flat(elem: LoopElement) -> Dict:
    return {(d, k): v for d, m in elem.parts.items() for k, v in m.items()}


def _combine(images: List[LoopElement], combo: Dict[int, Fraction]) -> LoopElement:
    out = LoopElement()
    for k, c in combo.items():
        out = out + images[k].scale(c)
    return out


@dataclass
class EmbeddingReport:
    mismatches: List[str]
    pairs_checked: int
    generator_pairs_checked: int
    source_dim: int
    image_degrees: List[int]
    central_exposure: bool

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.central_exposure


def verify_embedding(emb: EmbeddingMap | None = None) -> EmbeddingReport:
    """Bracket preservation on generator pairs and on a full basis reached by brackets."""
    emb = emb or embedding_sl5()
    algebra = restricted_seaweed(5)
    mismatches: List[str] = []
    span = LinearSpan()
    sources: List[Matrix] = []
    images: List[LoopElement] = []
    names: List[str] = []

    def record(name: str, mat: Matrix, img: LoopElement):
        if algebra.coordinates(mat) is None:
            raise IntegrityError(f"{name} leaves the restricted seaweed")
        resid, combo = span.reduce(mat)
        if resid:
            span.add(mat)
            sources.append(mat)
            images.append(img)
            names.append(name)
        elif _combine(images, combo) != img:
            mismatches.append(name)

    for lab in EMBEDDING_GENERATORS:
        record(lab, source_generator(lab), emb.image(lab))
    frontier = list(range(len(sources)))
    while frontier:
        nxt = []
        for a in frontier:
            for b in range(len(sources)):
                before = len(sources)
                record(f"[{names[a]},{names[b]}]", comm(sources[a], sources[b]), images[a].bracket(images[b]))
                if len(sources) > before:
                    nxt.append(len(sources) - 1)
        frontier = nxt
    if len(sources) != algebra.dim:
        mismatches.append(f"generated dimension {len(sources)} != {algebra.dim}")

    generator_pairs = 0
    for x in EMBEDDING_GENERATORS:
        for y in EMBEDDING_GENERATORS:
            generator_pairs += 1
            src = comm(source_generator(x), source_generator(y))
            combo = span.coordinates(src)
            if combo is None or _combine(images, combo) != emb.image(x).bracket(emb.image(y)):
                mismatches.append(f"({x},{y})")

    pairs = 0
    for a in range(len(sources)):
        for b in range(len(sources)):
            pairs += 1
            combo = span.coordinates(comm(sources[a], sources[b]))
            if combo is None or _combine(images, combo) != images[a].bracket(images[b]):
                mismatches.append(f"basis ({names[a]},{names[b]})")

    degrees = sorted({d for lab in EMBEDDING_GENERATORS for d in emb.image(lab).degrees()})
    all_degrees = {d for img in images for d in img.degrees()}
    # a central term needs a product pairing u^k with u^-k, k != 0
    exposure = any(d > 0 for d in all_degrees) and any(d < 0 for d in all_degrees)
    return EmbeddingReport(sorted(set(mismatches)), pairs, generator_pairs, len(sources), degrees, exposure)
