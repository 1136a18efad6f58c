"""Cartan membership conditions behind the restriction of the sl_5 shift twist to U_q(SW'_5),
and the two affine-image identities for the Cartan contractions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence

from ..fixtures import (AFFINE_IMAGE_ALPHA1, AFFINE_IMAGE_ALPHA4_RHS, ALPHA4_LHS_CORRECTED,
                        ALPHA4_LHS_PRINTED, CONTRACTION_ALPHA1, R0_SL5, R0HAT_SL4)
from ..liecore import contract_first, contract_second
from .twist import SEAWEED, dressing_negative, dressing_positive, in_seaweed_cartan, iota_cartan


@dataclass
class CartanCheck:
    name: str
    status: str  # pass | fail | warn
    detail: str
    anchor: str = ""


@dataclass
class CartanReport:
    checks: List[CartanCheck] = field(default_factory=list)

    def get(self, name: str) -> CartanCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def failures(self) -> List[CartanCheck]:
        return [c for c in self.checks if c.status == "fail"]


def _fmt(vec: Sequence) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in vec) + ")"


def _unit(i: int) -> List[int]:
    return [int(k == i) for k in range(1, 5)]


def _membership(name: str, anchor: str, indices, build) -> CartanCheck:
    bad = []
    for i in indices:
        vec = build(i)
        if not in_seaweed_cartan(vec):
            bad.append(f"i={i}: {_fmt(vec)}")
    if bad:
        return CartanCheck(name, "fail", "outside span{p5, h2, h3}: " + "; ".join(bad), anchor)
    return CartanCheck(name, "pass", f"indices {list(indices)} land in span{{p5, h2, h3}}", anchor)


def check_cartan_conditions(r0=R0_SL5, r0hat=R0HAT_SL4) -> CartanReport:
    """Exact rational checks.

    Membership relations are tested on the indices where the restricted twist uses them:
    positive generators e_{alpha_i} for i in 2..4 and negative ones for i in 1..3.  The
    h + a relation is reported in its printed form and in the sign-corrected form h - a
    (which equals the (id (x) alpha_i) contraction since r0 + r0^T is the Cartan Casimir);
    a printed failure confirmed by the corrected form is reported at warn level.
    """
    pos = sorted(SEAWEED.positive)
    neg = sorted(SEAWEED.negative)
    a = {i: dressing_positive(r0, i) for i in range(1, 5)}
    b = {i: dressing_negative(r0, i) for i in range(1, 5)}
    report = CartanReport()
    add = report.checks.append
    add(_membership("membership.alpha_i(x)id", "(alpha_i (x) id)(r0) in U_q(SW'_5)", pos, lambda i: a[i]))
    add(_membership("membership.-h+id(x)alpha_i", "-h_i + (id (x) alpha_i)(r0) in U_q(SW'_5)", pos,
                    lambda i: [y - x for x, y in zip(_unit(i), b[i])]))
    add(_membership("membership.id(x)alpha_i", "(id (x) alpha_i)(r0) in U_q(SW'_5)", neg, lambda i: b[i]))
    printed = _membership("membership.h+alpha_i(x)id", "h_i + (alpha_i (x) id)(r0) in U_q(SW'_5)", neg,
                          lambda i: [x + y for x, y in zip(_unit(i), a[i])])
    corrected = _membership("membership.h-alpha_i(x)id", "h_i - (alpha_i (x) id)(r0) in U_q(SW'_5)", neg,
                            lambda i: [x - y for x, y in zip(_unit(i), a[i])])
    if printed.status == "pass":
        add(printed)
    else:
        status = "warn" if corrected.status == "pass" else "fail"
        add(CartanCheck(printed.name, status,
                        f"printed h + a: {printed.detail}; sign-corrected h - a: {corrected.detail}",
                        printed.anchor))

    got = b[1]
    status = "pass" if tuple(got) == CONTRACTION_ALPHA1 and in_seaweed_cartan(got) else "fail"
    add(CartanCheck("contraction.id(x)alpha_1", status,
                    f"computed {_fmt(got)}, displayed {_fmt(CONTRACTION_ALPHA1)}",
                    "(id (x) alpha_1)(r0(5)) as a Cartan vector"))

    img = iota_cartan(CONTRACTION_ALPHA1)
    rhs = contract_second(r0hat, (1, 0, 0))
    ok = tuple(img) == AFFINE_IMAGE_ALPHA1 and list(rhs) == list(img)
    add(CartanCheck("affine-image.alpha_1", "pass" if ok else "fail",
                    f"iota image {_fmt(img)}, displayed {_fmt(AFFINE_IMAGE_ALPHA1)}, (id (x) alpha_1)(r0hat) {_fmt(rhs)}",
                    "image of (id (x) alpha_1)(r0(5)) in the affine Cartan"))

    target = [-x for x in contract_first(r0hat, (1, 1, 1))]
    verdicts = {}
    for label, lhs in (("printed", ALPHA4_LHS_PRINTED), ("corrected", ALPHA4_LHS_CORRECTED)):
        if not in_seaweed_cartan(lhs):
            verdicts[label] = (False, "outside the seaweed Cartan")
            continue
        image = iota_cartan(lhs)
        verdicts[label] = (image == target and tuple(target) == AFFINE_IMAGE_ALPHA4_RHS, _fmt(image))
    direct = tuple(a[4]) == ALPHA4_LHS_CORRECTED
    holding = [k for k, (v, _) in verdicts.items() if v]
    detail = ("; ".join(f"{k}: image {d} -> {'holds' if v else 'fails'}" for k, (v, d) in verdicts.items())
              + f"; target {_fmt(target)}; direct contraction {_fmt(a[4])}")
    if holding == ["printed"]:
        status = "pass"
    elif holding == ["corrected"] and direct:
        status = "warn"
        detail += "; displayed h_alpha3 coefficient -2/3 is a suspected typo for -3/5"
    else:
        status = "fail"
    add(CartanCheck("affine-image.alpha_4", status, detail,
                    "image of (alpha_4 (x) id)(r0(5)) equals -((alpha_1+alpha_2+alpha_3) (x) id)(r0hat)"))
    return report
