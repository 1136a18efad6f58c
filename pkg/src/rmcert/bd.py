"""Belavin-Drinfeld triples on sl_n, the Cartan-part linear system and r-matrix assembly."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .cybe import IntegrityError, Tensor2, cartan_tensor, cybe_residual, unitarity_residual, wedge
from .liecore import DomainError, cartan_matrix, interval_root, inverse_cartan, root_interval, unit, comm

CartanTensor = List[List[Fraction]]

# Frozen wedge convention: X_{-a} ^ X_{tau^k a} with coefficient +1.
# calibrate_wedge_convention() re-derives it from the CYBE oracle on the sl_4 shift triple.
WEDGE_DIRECTION = "neg-source"
WEDGE_SIGN = 1


@dataclass(frozen=True)
class BDTriple:
    n: int
    gamma1: Tuple[int, ...]
    gamma2: Tuple[int, ...]
    tau: Tuple[Tuple[int, int], ...] = field(default=())

    @classmethod
    def make(cls, n: int, tau: Dict[int, int]) -> "BDTriple":
        src = tuple(sorted(tau))
        return cls(n, src, tuple(tau[a] for a in src), tuple(sorted(tau.items())))

    @property
    def tau_map(self) -> Dict[int, int]:
        return dict(self.tau)

    def to_json(self) -> dict:
        return {"n": self.n, "gamma1": list(self.gamma1), "gamma2": list(self.gamma2),
                "tau": {str(a): b for a, b in self.tau}}

    @classmethod
    def from_json(cls, doc: dict) -> "BDTriple":
        tau = {int(a): int(b) for a, b in doc.get("tau", {}).items()}
        return cls.make(int(doc["n"]), tau)


@dataclass
class R0Solution:
    particular: CartanTensor
    kernel: List[CartanTensor]


def cg_triple(n: int) -> BDTriple:
    if n < 3:
        raise DomainError("the shift-by-one triple needs n >= 3")
    return BDTriple.make(n, {i: i + 1 for i in range(1, n - 1)})


def empty_triple(n: int) -> BDTriple:
    if n < 2:
        raise DomainError("sl_n needs n >= 2")
    return BDTriple(n, (), (), ())


def validate_triple(triple: BDTriple) -> Tuple[bool, List[str]]:
    rank = triple.n - 1
    problems = []
    tau = triple.tau_map
    for a, b in tau.items():
        if not (1 <= a <= rank and 1 <= b <= rank):
            problems.append(f"index out of range: {a}->{b}")
    if problems:
        return False, problems
    if len(set(tau.values())) != len(tau):
        problems.append("tau is not injective")
    cm = cartan_matrix(rank)
    for a, b in itertools.combinations(sorted(tau), 2):
        if cm[a - 1][b - 1] != cm[tau[a] - 1][tau[b] - 1]:
            problems.append(f"isometry fails on ({a},{b})")
    for a in tau:
        seen, cur = set(), a
        while cur in tau:
            if cur in seen:
                problems.append(f"nilpotency fails at alpha{a}")
                break
            seen.add(cur)
            cur = tau[cur]
    return not problems, problems


def enumerate_triples(n: int) -> List[BDTriple]:
    """All valid triples on sl_n (exhaustive; intended for small n)."""
    rank = n - 1
    out = []
    for size in range(rank + 1):
        for src in itertools.combinations(range(1, rank + 1), size):
            for dst in itertools.permutations(range(1, rank + 1), size):
                triple = BDTriple.make(n, dict(zip(src, dst)))
                if validate_triple(triple)[0]:
                    out.append(triple)
    return out


# tau on composite roots

def tau_on_root(triple: BDTriple, root: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Additive extension of tau; None when undefined or the image is not a root."""
    tau = triple.tau_map
    rank = triple.n - 1
    image = [0] * rank
    for k, c in enumerate(root, start=1):
        if c:
            if k not in tau:
                return None
            image[tau[k] - 1] += c
    try:
        root_interval(image)
    except DomainError:
        return None
    return tuple(image)


def positive_roots(n: int) -> List[Tuple[int, ...]]:
    rank = n - 1
    return [interval_root(i, j, rank) for i in range(1, n) for j in range(i + 1, n + 1)]


def tau_sign(triple: BDTriple, root: Sequence[int]) -> int:
    """Sign of the induced map on root vectors: theta(E_ij) = sign * E_kl.

    theta sends E_{a,a+1} to E_{tau a, tau a + 1} and is extended through the
    nested brackets E_ij = [E_{i,i+1}, [E_{i+1,i+2}, ...]].
    """
    tau = triple.tau_map
    i, j = root_interval(root)
    image = unit(tau[j - 1], tau[j - 1] + 1)
    for a in range(j - 2, i - 1, -1):
        image = comm(unit(tau[a], tau[a] + 1), image)
    (key, val), = image.items()
    return int(val)


def tau_chains(triple: BDTriple) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int]]:
    """(alpha, tau^k alpha, k, sign) for k >= 1 over positive roots."""
    out = []
    for root in positive_roots(triple.n):
        cur, k, sign = root, 0, 1
        while True:
            nxt = tau_on_root(triple, cur)
            if nxt is None:
                break
            sign *= tau_sign(triple, cur)
            cur = nxt
            k += 1
            out.append((root, cur, k, sign))
    return out


# Cartan part

def _contraction_rows(rank: int, first: Optional[int], second: Optional[int]) -> List[List[Fraction]]:
    """Linear map c -> (alpha_first (x) id)(c) + (id (x) alpha_second)(c) as rows over c_ij."""
    cm = cartan_matrix(rank)
    rows = []
    for out in range(rank):
        row = [Fraction(0)] * (rank * rank)
        if first is not None:
            for i in range(rank):
                row[i * rank + out] += cm[first - 1][i]
        if second is not None:
            for k in range(rank):
                row[out * rank + k] += cm[k][second - 1]
        rows.append(row)
    return rows


def r0_system(triple: BDTriple) -> Tuple[List[List[Fraction]], List[Fraction]]:
    rank = triple.n - 1
    omega0 = inverse_cartan(triple.n)
    rows, rhs = [], []
    for i in range(rank):
        for j in range(i, rank):
            row = [Fraction(0)] * (rank * rank)
            row[i * rank + j] += 1
            row[j * rank + i] += 1
            rows.append(row)
            rhs.append(omega0[i][j])
    for a, b in triple.tau:
        for row in _contraction_rows(rank, b, a):
            rows.append(row)
            rhs.append(Fraction(0))
    return rows, rhs


def _reshape(vec: Sequence[Fraction], rank: int) -> CartanTensor:
    return [list(vec[i * rank:(i + 1) * rank]) for i in range(rank)]


def solve_r0(triple: BDTriple) -> R0Solution:
    ok, problems = validate_triple(triple)
    if not ok:
        raise DomainError("invalid triple: " + "; ".join(problems))
    rank = triple.n - 1
    rows, rhs = r0_system(triple)
    particular, kernel = linalg.solve_affine(rows, rhs)
    if particular is None:
        raise IntegrityError("Cartan system inconsistent for a valid triple")
    half = [[x / 2 for x in row] for row in inverse_cartan(triple.n)]
    base = half if in_solution_space(triple, half) else _reshape(particular, rank)
    return R0Solution(base, [_reshape(v, rank) for v in kernel])


def r0_residual(triple: BDTriple, r0: Sequence[Sequence]) -> List[Fraction]:
    rank = triple.n - 1
    rows, rhs = r0_system(triple)
    flat = [Fraction(r0[i][j]) for i in range(rank) for j in range(rank)]
    return [sum((a * x for a, x in zip(row, flat)), Fraction(0)) - b for row, b in zip(rows, rhs)]


def in_solution_space(triple: BDTriple, r0: Sequence[Sequence]) -> bool:
    return all(x == 0 for x in r0_residual(triple, r0))


# assembly

def _root_unit(root: Sequence[int], sign: int):
    i, j = root_interval(root)
    return unit(i, j) if sign > 0 else unit(j, i)


def assemble_rmatrix(triple: BDTriple, r0: Sequence[Sequence], direction: str = WEDGE_DIRECTION,
                     sign: int = WEDGE_SIGN) -> Tensor2:
    """r0 + sum X_{-a} (x) X_a + sum over tau-chains of the wedge terms."""
    n = triple.n
    out = cartan_tensor(n, r0)
    terms = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            terms[((j, i), (i, j))] = Fraction(1)
    out = out + Tensor2(n, terms)
    for src, dst, _, chain_sign in tau_chains(triple):
        coeff = Fraction(sign * chain_sign)
        if direction == "neg-source":
            out = out + wedge(n, _root_unit(src, -1), _root_unit(dst, 1), coeff)
        elif direction == "neg-target":
            out = out + wedge(n, _root_unit(dst, -1), _root_unit(src, 1), coeff)
        else:
            raise ValueError(f"unknown wedge direction {direction!r}")
    return out


def dj_rmatrix(n: int) -> Tensor2:
    half = [[x / 2 for x in row] for row in inverse_cartan(n)]
    return assemble_rmatrix(empty_triple(n), half)


def certify(rmat: Tensor2) -> Tuple[bool, bool]:
    """(unitarity residual vanishes, CYBE residual vanishes)."""
    return unitarity_residual(rmat).is_zero(), cybe_residual(rmat).is_zero()


def calibrate_wedge_convention(n: int = 4) -> List[Tuple[str, int]]:
    """All (direction, sign) candidates for which the shift triple's output is an r-matrix."""
    triple = cg_triple(n)
    r0 = solve_r0(triple).particular
    winners = []
    for direction in ("neg-source", "neg-target"):
        for sign in (1, -1):
            if all(certify(assemble_rmatrix(triple, r0, direction, sign))):
                winners.append((direction, sign))
    return winners
