"""Named verification suites and the versioned JSON report they produce."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import linalg
from .bd import assemble_rmatrix, certify, cg_triple, enumerate_triples, in_solution_space, solve_r0
from .cybe import IntegrityError, cybe_residual, spectral_unitarity_normalization
from .fixtures import CONTRACTION_ALPHA1, R0_SL5, R0HAT_SL4, T_MATRIX
from .liecore import casimir
from .quantum import affine, cartan, reps, twist
from .quasitrig import (T as TVAR, _base, build_lagrangian, check_lagrangian, check_transversal,
                        cobracket_sweep, constant_part_matches_shift_triple, diagonal_subalgebra,
                        fixture_reconstructed, literal_candidates, polar_residue)
from .scalars import MultiPoly
from .seaweed import algebra_index, build_seaweed, restricted_seaweed, verify_embedding

SCHEMA = 1
SUITE_NAMES = ("classical-bd", "seaweed", "embedding", "quasitrig-fixture", "quantum-cocycle",
               "quantum-qybe", "semiclassical")


@dataclass(frozen=True)
class Options:
    seed: int = 0
    trials: int = 8
    specialize_s: Optional[Fraction] = None


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_scalar(x) -> Optional[str]:
    """Exact string for Fraction, constant MultiPoly or constant RatFun."""
    if x is None:
        return None
    if hasattr(x, "num") and hasattr(x, "den"):
        x = x.reduced()
        if x.num.is_constant() and x.den.is_constant():
            return fmt(x.num.constant_value() / x.den.constant_value())
        return str(x)
    if isinstance(x, MultiPoly):
        return fmt(x.constant_value()) if x.is_constant() else str(x)
    return fmt(x)


def fmt_vec(vec: Sequence) -> List[str]:
    return [fmt(x) for x in vec]


def check(name: str, status: str, summary, anchor: str) -> dict:
    if status not in ("pass", "fail", "warn"):
        raise ValueError(status)
    return {"name": name, "status": status, "residual_summary": summary, "anchor": anchor}


def _pf(ok: bool) -> str:
    return "pass" if ok else "fail"


def _paired(literal_ok: bool, repaired_ok: bool) -> str:
    """Status for a printed reading checked next to its documented repair."""
    if literal_ok:
        return "pass"
    return "warn" if repaired_ok else "fail"


# classical

def _random_shift(rng: random.Random, kernel) -> List[List[Fraction]]:
    rank = len(kernel[0]) if kernel else 0
    out = [[Fraction(0)] * rank for _ in range(rank)]
    for basis in kernel:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        for i in range(rank):
            for j in range(rank):
                out[i][j] += c * basis[i][j]
    return out


def suite_classical_bd(opts: Options) -> List[dict]:
    rng = random.Random(opts.seed)
    out = []
    for n in (2, 3, 4, 5):
        triples = enumerate_triples(n)
        bad = []
        for triple in triples:
            sol = solve_r0(triple)
            shift = _random_shift(rng, sol.kernel)
            r0 = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(sol.particular, shift)] if sol.kernel else sol.particular
            for label, cartan_part in (("particular", sol.particular), ("shifted", r0)):
                unitary, cybe = certify(assemble_rmatrix(triple, cartan_part))
                if not (unitary and cybe):
                    bad.append(f"{triple.to_json()} ({label})")
        out.append(check(f"classical-bd.sl{n}.assembly", _pf(not bad),
                         {"triples": len(triples), "failing": bad},
                         "assembled r-matrix of every valid triple: CYBE and unitarity residuals vanish"))
    for name, n, value in (("r0_5", 5, R0_SL5), ("r0hat_4", 4, R0HAT_SL4)):
        out.append(check(f"classical-bd.{name}.solution-space", _pf(in_solution_space(cg_triple(n), value)),
                         {"n": n}, f"fixture {name} solves the Cartan system of the shift triple"))
    got = twist.dressing_negative(R0_SL5, 1)
    out.append(check("classical-bd.r0_5.contraction-alpha1", _pf(tuple(got) == CONTRACTION_ALPHA1),
                     {"computed": fmt_vec(got), "displayed": fmt_vec(CONTRACTION_ALPHA1)},
                     "(id (x) alpha_1)(r0(5))"))
    return out


def suite_seaweed(opts: Options) -> List[dict]:
    out = []
    full = build_seaweed(5, 1, 4)
    idx = algebra_index(full, opts.trials, opts.seed)
    out.append(check("seaweed.sw5.frobenius", _pf(idx == 0),
                     {"dim": full.dim, "index": idx, "trials": opts.trials},
                     "seaweed P_1^+ cap P_4^- of sl_5 is Frobenius"))
    restricted = restricted_seaweed(5)
    ridx = algebra_index(restricted, opts.trials, opts.seed)
    out.append(check("seaweed.sw5-restricted.index", "pass",
                     {"dim": restricted.dim, "index_upper_bound": ridx, "trials": opts.trials},
                     "index of the restricted seaweed SW'_5 (randomized upper bound)"))
    return out


def suite_embedding(opts: Options) -> List[dict]:
    report = verify_embedding()
    return [
        check("embedding.bracket-preservation", _pf(not report.mismatches),
              {"mismatches": report.mismatches, "generator_pairs": report.generator_pairs_checked,
               "basis_pairs": report.pairs_checked, "source_dim": report.source_dim},
              "embedding of SW'_5 into loop sl_4 preserves brackets"),
        check("embedding.central-exposure", _pf(not report.central_exposure),
              {"generator_degrees": report.image_degrees},
              "loop degrees never pair u^k with u^-k, so the central term cannot appear"),
    ]


# quasi-trigonometric

def suite_quasitrig(opts: Options) -> List[dict]:
    out = []
    cands = literal_candidates()
    winners = [c.name for c in cands if c.passes]
    xr = fixture_reconstructed()
    xfull = xr.full()
    rec_ok = cybe_residual(xfull).is_zero()
    counts = sorted(c.residual_terms for c in cands)
    out.append(check("quasitrig.fixture.literal-readings",
                     "pass" if len(winners) == 1 else ("warn" if not winners and rec_ok else "fail"),
                     {"candidates": len(cands), "winners": winners,
                      "residual_terms_min": counts[0], "residual_terms_max": counts[-1],
                      "reconstructed_reading_cybe": rec_ok},
                     "printed sl_4 quasi-trigonometric display: bracket readings under the CYBE oracle"))
    out.append(check("quasitrig.fixture.reconstructed.cybe", _pf(rec_ok), {"residual_terms": len(cybe_residual(xfull))},
                     "reconstructed reading satisfies CYBE as a cleared-denominator identity"))
    r0 = constant_part_matches_shift_triple(xr)
    out.append(check("quasitrig.fixture.reconstructed.constant-part", _pf(r0 is not None),
                     {"r0": [fmt_vec(row) for row in r0] if r0 else None},
                     "constant part equals the shift-triple assembly on sl_4"))
    count, failures = cobracket_sweep(xr)
    out.append(check("quasitrig.fixture.reconstructed.cobracket", _pf(not failures),
                     {"inputs": count, "failures": failures}, "cobracket of b t^k is pole-free"))
    residue = polar_residue(xfull)
    expected = casimir(4).map_coeffs(lambda c: TVAR * c)
    out.append(check("quasitrig.fixture.polar-residue", _pf((residue - expected).is_zero()), {},
                     "residue at z = t is t Omega"))
    norm = spectral_unitarity_normalization(xfull)
    out.append(check("quasitrig.fixture.unitarity", _pf(norm is not None), {"normalization": norm},
                     "X(z,t) + X21(t,z) normalization"))
    w = build_lagrangian()
    lag = check_lagrangian(w)
    out.append(check("quasitrig.W.lagrangian", _pf(lag.lagrangian and linalg.det(T_MATRIX) == -1),
                     {"dim": lag.dim, "ambient_dim": lag.ambient_dim, "isotropy_violations": lag.isotropy_violations,
                      "closed": lag.closed, "det_T": fmt(linalg.det(T_MATRIX))},
                     "W = {(Ad(T)Y, Y)} is a Lagrangian subalgebra of sl_4 + sl_4"))
    tr = check_transversal(w, diagonal_subalgebra(4), 4)
    out.append(check("quasitrig.W.diagonal-verdict", "pass",
                     {"intersection_dim": tr.intersection_dim, "sum_dim": tr.sum_dim, "transversal": tr.transversal},
                     "W against the diagonal subalgebra (verdict is an output)"))
    return out


# quantum

def _qfield(opts: Options, symbolic: bool) -> reps.QField:
    return reps.SYMBOLIC if symbolic else reps.QField(opts.specialize_s)


def _passes(opts: Options) -> List[tuple]:
    """(suffix, symbolic?) for the optional specialized pre-pass and the full symbolic pass."""
    out = []
    if opts.specialize_s is not None:
        out.append((".prepass", False))
    out.append(("", True))
    return out


def suite_quantum_cocycle(opts: Options) -> List[dict]:
    out = []
    v5 = reps.vector_rep(5)
    e4 = reps.eval_rep(4)
    failures = []
    for label, rep in (("V5", v5), ("V(u)", e4), ("V5 (x) V5", reps.delta_pullback(v5, v5)),
                       ("V(u1) (x) V(u2)", reps.delta_pullback(reps.eval_rep(4, "u1"), reps.eval_rep(4, "u2"))),
                       ("Delta^op on V(u1) (x) V(u2)", reps.opposite_pullback(reps.eval_rep(4, "u1"), reps.eval_rep(4, "u2")))):
        failures += [f"{label}: {f}" for f in reps.check_relations(rep) + reps.counit_check(rep)]
    out.append(check("quantum.relations", _pf(not failures), {"failures": failures},
                     "defining relations of U_q(sl_5) and U_q(sl_4 hat) in vector and evaluation representations"))
    tc = twist.twisted_coproduct_check(v5)
    out.append(check("quantum.twisted-coproducts", _pf(not tc), {"failures": tc},
                     "coproducts of the primed generators after twisting by K_5"))
    for suffix, symbolic in _passes(opts):
        qf = _qfield(opts, symbolic)
        v = reps.vector_rep(5, qf)
        triple = [v, v, v]
        evals = [reps.eval_rep(4, u, qf) for u in ("u1", "u2", "u3")]
        k5 = twist.cocycle_check(twist.cartan_builder(R0_SL5), triple, "K5")
        out.append(check("quantum.cocycle.K5" + suffix, _pf(k5.ok), {"nonzero_entries": k5.nonzero_entries, "dim": k5.dim},
                         "Cartan twist K_5 satisfies the cocycle condition"))
        k4 = twist.cocycle_check(twist.cartan_builder(R0HAT_SL4), evals, "K4hat")
        out.append(check("quantum.cocycle.K4hat" + suffix, _pf(k4.ok), {"nonzero_entries": k4.nonzero_entries, "dim": k4.dim},
                         "Cartan twist K-hat_4 satisfies the cocycle condition in evaluation representations"))
        for name, lit, rep_spec, space, anchor in (
                ("F_CG5", twist.LITERAL, twist.REPAIRED, triple, "shift twist F_CG5 on V5 (x) V5 (x) V5"),
                ("F_CG4hat", twist.AFFINE_LITERAL, twist.AFFINE_REPAIRED, evals,
                 "affinized twist on V(u1) (x) V(u2) (x) V(u3)")):
            lit_rep = twist.cocycle_check(twist.spec_builder(lit), space)
            fix_rep = twist.cocycle_check(twist.spec_builder(rep_spec), space)
            summary = {"printed_reading_nonzero_entries": lit_rep.nonzero_entries,
                       "repaired_reading_nonzero_entries": fix_rep.nonzero_entries,
                       "dim": lit_rep.dim,
                       "repaired_reading": "coefficient (q^-1 - q) q^-1, beta in reversed normal order"}
            if not lit_rep.ok and symbolic:
                summary["reading_table"] = [
                    {"coefficient": c, "beta_order": o, "nonzero_entries": k}
                    for c, o, k in twist.reading_table(lit, space)]
                summary["factor_diagnostics"] = [
                    {"factor": lab, "printed_coefficient_only_here": a, "factor_dropped": b}
                    for lab, a, b in twist.factor_diagnostics(lit, space)]
            out.append(check(f"quantum.cocycle.{name}" + suffix, _paired(lit_rep.ok, fix_rep.ok), summary, anchor))
    for c in cartan.check_cartan_conditions().checks:
        out.append(check(f"quantum.cartan.{c.name}", c.status, c.detail, c.anchor))
    return out


def suite_quantum_qybe(opts: Options) -> List[dict]:
    out = []
    for suffix, symbolic in _passes(opts):
        qf = _qfield(opts, symbolic)
        r1, r2 = reps.eval_rep(4, "u1", qf), reps.eval_rep(4, "u2", qf)
        rows, unknowns, _ = affine.intertwiner_system(r1, r2)
        rmat = affine.solve_intertwiner(r1, r2)
        out.append(check("quantum.intertwiner.unique" + suffix, "pass", {"unknowns": len(unknowns), "kernel_dim": 1},
                         "R Delta = Delta^op R has a one-dimensional solution space"))
        q0 = affine.qybe_check(rmat)
        out.append(check("quantum.qybe.untwisted" + suffix, _pf(q0.ok), {"nonzero_entries": q0.nonzero_entries, "dim": q0.dim},
                         "quantum Yang-Baxter equation for the evaluation R-matrix"))
        results = {}
        for label, spec in (("printed", twist.AFFINE_LITERAL), ("repaired", twist.AFFINE_REPAIRED)):
            rf = affine.twisted_rmatrix(rmat, r1, r2, lambda a, b, sp=spec: twist.shift_twist(a, b, sp),
                                        lambda a, b, sp=spec: twist.shift_twist_inverse(a, b, sp))
            results[label] = affine.qybe_check(rf)
        out.append(check("quantum.qybe.twisted" + suffix, _paired(results["printed"].ok, results["repaired"].ok),
                         {"printed_reading_nonzero_entries": results["printed"].nonzero_entries,
                          "repaired_reading_nonzero_entries": results["repaired"].nonzero_entries,
                          "dim": results["printed"].dim},
                         "quantum Yang-Baxter equation for F21 R F^-1 with the affinized twist"))
    try:
        affine.solve_intertwiner(reps.eval_rep(4, "u1"), reps.eval_rep(4, "u1"))
        degenerate = False
    except affine.DegenerateParameter:
        degenerate = True
    out.append(check("quantum.intertwiner.coinciding-parameters", _pf(degenerate), {"flagged": degenerate},
                     "u1 = u2 is reported as a degenerate parameter"))
    return out


def suite_semiclassical(opts: Options) -> List[dict]:
    out = []
    r1, r2 = reps.eval_rep(4, "u1"), reps.eval_rep(4, "u2")
    rmat = affine.solve_intertwiner(r1, r2)
    base = affine.semiclassical_extract(rmat, _base())
    out.append(check("semiclassical.untwisted", _pf(base.ok),
                     {"scale": fmt_scalar(base.scale), "omega_multiple": fmt_scalar(base.omega_multiple)},
                     "first order of R matches t Omega/(z-t) + r_DJ modulo identity multiples"))
    rf = affine.twisted_rmatrix(rmat, r1, r2)
    rep = affine.semiclassical_extract(rf, fixture_reconstructed().full())
    out.append(check("semiclassical.leading-term", _pf(rep.leading_is_scalar), {},
                     "eps^0 term of the twisted R is a scalar multiple of the identity"))
    out.append(check("semiclassical.twisted.reconstructed", _pf(rep.matches_modulo_identity),
                     {"scale": fmt_scalar(rep.scale), "notes": rep.notes,
                      "difference_terms": len(rep.difference) if rep.difference is not None else 0},
                     "first order of F21 R F^-1 matches the reconstructed X(z,t) modulo identity multiples"))
    out.append(check("semiclassical.cybe", _pf(rep.cybe_ok), {}, "extracted r satisfies CYBE"))
    out.append(check("semiclassical.unitarity", _pf(rep.unitarity_ok), {"omega_multiple": fmt_scalar(rep.omega_multiple)},
                     "r + r21(t,z) lies in Q(z,t) Omega + Q(z,t) Id"))
    matching = [c.name for c in literal_candidates(evaluate=False)
                if affine.semiclassical_extract(rf, c.tensor).matches_modulo_identity]
    out.append(check("semiclassical.twisted.literal-readings",
                     "pass" if len(matching) == 1 else ("warn" if not matching and rep.matches_modulo_identity else "fail"),
                     {"matching_printed_readings": matching},
                     "first order of the twisted R against the printed bracket readings"))
    return out


SUITES: Dict[str, Callable[[Options], List[dict]]] = {
    "classical-bd": suite_classical_bd,
    "seaweed": suite_seaweed,
    "embedding": suite_embedding,
    "quasitrig-fixture": suite_quasitrig,
    "quantum-cocycle": suite_quantum_cocycle,
    "quantum-qybe": suite_quantum_qybe,
    "semiclassical": suite_semiclassical,
}


def overall(checks: Sequence[dict]) -> str:
    statuses = {c["status"] for c in checks}
    if "fail" in statuses:
        return "fail"
    return "warn" if "warn" in statuses else "pass"


def build_report(suite: str, checks: List[dict], opts: Options, elapsed: float) -> dict:
    checks = sorted(checks, key=lambda c: c["name"])
    return {
        "schema": SCHEMA,
        "suite": suite,
        "seed": opts.seed,
        "trials": opts.trials,
        "specialize_s": None if opts.specialize_s is None else fmt(opts.specialize_s),
        "status": overall(checks),
        "counts": {s: sum(1 for c in checks if c["status"] == s) for s in ("pass", "warn", "fail")},
        "checks": checks,
        "timing": {"seconds": round(elapsed, 3)},
    }


def run_suite(name: str, opts: Options = Options()):
    """Report dict and exit code (0 when nothing fails)."""
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    start = time.perf_counter()
    checks: List[dict] = []
    for suite in (SUITE_NAMES if name == "all" else (name,)):
        try:
            checks += SUITES[suite](opts)
        except IntegrityError as exc:
            checks.append(check(f"{suite}.integrity", "fail", str(exc), "suite aborted by an integrity error"))
    report = build_report(name, checks, opts, time.perf_counter() - start)
    return report, (1 if report["status"] == "fail" else 0)
