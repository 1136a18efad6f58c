"""Acceptance criteria 1-11.  Each test records one PASS/FAIL line (printed in the pytest
terminal summary, or directly when this file is run as a script) and asserts the verdict.
Criteria are checked against the printed readings of the source formulas; where a
documented repair exists its result is included in the line, but never substituted."""
from __future__ import annotations

import json
import time
from fractions import Fraction

import pytest

from rmcert.bd import assemble_rmatrix, certify, cg_triple, empty_triple, enumerate_triples, in_solution_space, solve_r0
from rmcert.cybe import cybe_residual
from rmcert.fixtures import CONTRACTION_ALPHA1, R0_SL5, R0HAT_SL4, T_MATRIX
from rmcert import linalg
from rmcert.quantum import affine, cartan, reps, twist
from rmcert.quasitrig import (build_lagrangian, check_lagrangian, cobracket_sweep, constant_part_matches_shift_triple,
                              fixture_reconstructed, fixture_sl4, literal_candidates)
from rmcert.seaweed import verify_embedding
from rmcert.suites import fmt_scalar

RESULTS: dict = {}


def record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, RESULTS[number]


def test_criterion_01_bd_assembly():
    start = time.perf_counter()
    total, bad = 0, []
    for n in (2, 3, 4, 5):
        triples = enumerate_triples(n)
        if n == 5:
            assert cg_triple(5) in triples and empty_triple(5) in triples and len(triples) >= 5
        for triple in triples:
            total += 1
            if certify(assemble_rmatrix(triple, solve_r0(triple).particular)) != (True, True):
                bad.append(triple.to_json())
    elapsed = time.perf_counter() - start
    record(1, not bad and elapsed < 120, f"{total - len(bad)}/{total} triples on sl_2..sl_5 pass CYBE and unitarity in {elapsed:.1f}s")


def test_criterion_02_fixtures_in_solution_space():
    a = in_solution_space(cg_triple(5), R0_SL5)
    b = in_solution_space(cg_triple(4), R0HAT_SL4)
    contraction = twist.dressing_negative(R0_SL5, 1)
    c = tuple(contraction) == (Fraction(1, 5), Fraction(-3, 5), Fraction(-2, 5), Fraction(-1, 5)) == CONTRACTION_ALPHA1
    record(2, a and b and c, f"r0(5) solves: {a}; r0hat(4) solves: {b}; (id x alpha_1)(r0(5)) = {[str(x) for x in contraction]}")


def test_criterion_03_embedding():
    rep = verify_embedding()
    record(3, rep.ok, f"{len(rep.mismatches)} mismatches over {rep.generator_pairs_checked} generator pairs "
                      f"and {rep.pairs_checked} basis pairs; degrees {rep.image_degrees}; central exposure {rep.central_exposure}")


def test_criterion_04_quasitrig_fixture():
    start = time.perf_counter()
    cands = literal_candidates()
    winners = [c for c in cands if c.passes]
    xr = fixture_reconstructed()
    rec_cybe = cybe_residual(xr.full()).is_zero()
    rec_const = constant_part_matches_shift_triple(xr) is not None
    count, failures = cobracket_sweep(xr)
    elapsed = time.perf_counter() - start
    detail = (f"{len(winners)} of {len(cands)} printed bracket readings pass CYBE "
              f"(residual terms {min(c.residual_terms for c in cands)}..{max(c.residual_terms for c in cands)}); "
              f"reconstructed reading: CYBE {rec_cybe}, constant part = CG sl_4 assembly {rec_const}, "
              f"{count - len(failures)}/{count} cobracket inputs pole-free; {elapsed:.1f}s")
    ok = len(winners) == 1 and elapsed < 60
    if ok:
        winner_xr = fixture_sl4()[0]
        ok = constant_part_matches_shift_triple(winner_xr) is not None and not cobracket_sweep(winner_xr)[1]
    record(4, ok, detail)


def test_criterion_05_lagrangian():
    rep = check_lagrangian(build_lagrangian())
    det = linalg.det(T_MATRIX)
    record(5, rep.dim == 15 and rep.isotropy_violations == 0 and det == -1,
           f"dim W = {rep.dim}, isotropy violations {rep.isotropy_violations}, det T = {det}")


def test_criterion_06_quantum_relations():
    failures = reps.check_relations(reps.vector_rep(5)) + reps.check_relations(reps.eval_rep(4))
    coproducts = twist.twisted_coproduct_check(reps.vector_rep(5))
    record(6, not failures and not coproducts,
           f"relation failures {len(failures)}; twisted-coproduct display failures {len(coproducts)}")


def _cocycles(qfield):
    v = reps.vector_rep(5, qfield)
    evals = [reps.eval_rep(4, u, qfield) for u in ("u1", "u2", "u3")]
    return {
        "K5": twist.cocycle_check(twist.cartan_builder(R0_SL5), [v, v, v]).nonzero_entries,
        "F_CG5": twist.cocycle_check(twist.spec_builder(twist.LITERAL), [v, v, v]).nonzero_entries,
        "F_CG4hat": twist.cocycle_check(twist.spec_builder(twist.AFFINE_LITERAL), evals).nonzero_entries,
        "F_CG5 repaired": twist.cocycle_check(twist.spec_builder(twist.REPAIRED), [v, v, v]).nonzero_entries,
        "F_CG4hat repaired": twist.cocycle_check(twist.spec_builder(twist.AFFINE_REPAIRED), evals).nonzero_entries,
    }


def test_criterion_07_cocycle():
    start = time.perf_counter()
    pre = _cocycles(reps.QField(Fraction(3, 2)))
    pre_time = time.perf_counter() - start
    start = time.perf_counter()
    full = _cocycles(reps.SYMBOLIC)
    full_time = time.perf_counter() - start
    ok = full["K5"] == full["F_CG5"] == full["F_CG4hat"] == 0 and pre_time < 60 and full_time < 900
    record(7, ok, f"nonzero residual entries (symbolic, {full_time:.1f}s): {full}; "
                  f"s = 3/2 pre-pass ({pre_time:.1f}s): {pre}")


@pytest.fixture(scope="module")
def intertwiner():
    r1, r2 = reps.eval_rep(4, "u1"), reps.eval_rep(4, "u2")
    return r1, r2, affine.solve_intertwiner(r1, r2)


def _twisted(setup, spec):
    r1, r2, rmat = setup
    return affine.twisted_rmatrix(rmat, r1, r2, lambda a, b: twist.shift_twist(a, b, spec),
                                  lambda a, b: twist.shift_twist_inverse(a, b, spec))


def test_criterion_08_qybe(intertwiner):
    untwisted = affine.qybe_check(intertwiner[2])
    literal = affine.qybe_check(_twisted(intertwiner, twist.AFFINE_LITERAL))
    repaired = affine.qybe_check(_twisted(intertwiner, twist.AFFINE_REPAIRED))
    record(8, untwisted.ok and literal.ok,
           f"unique R (kernel dim 1); QYBE nonzero entries: untwisted {untwisted.nonzero_entries}, "
           f"twisted by printed F-hat {literal.nonzero_entries}, by repaired F-hat {repaired.nonzero_entries}")


def test_criterion_09_semiclassical(intertwiner):
    rf = _twisted(intertwiner, twist.AFFINE_LITERAL)
    matching = [c.name for c in literal_candidates(evaluate=False)
                if affine.semiclassical_extract(rf, c.tensor).matches_modulo_identity]
    rec = affine.semiclassical_extract(rf, fixture_reconstructed().full())
    rec_rep = affine.semiclassical_extract(_twisted(intertwiner, twist.AFFINE_REPAIRED), fixture_reconstructed().full())
    ok = len(matching) == 1 and rec.cybe_ok and rec.unitarity_ok
    record(9, ok, f"{len(matching)} printed readings of X match the first-order term modulo Id; "
                  f"reconstructed X matches (scale {fmt_scalar(rec.scale)}, printed F-hat: {rec.matches_modulo_identity}, "
                  f"repaired F-hat: {rec_rep.matches_modulo_identity}); extracted r CYBE {rec.cybe_ok}, "
                  f"unitarity mod Id {rec.unitarity_ok} (Omega multiple {fmt_scalar(rec.omega_multiple)})")


def test_criterion_10_cartan_conditions():
    report = cartan.check_cartan_conditions()
    status = {c.name: c.status for c in report.checks}
    exact = ["membership.alpha_i(x)id", "membership.-h+id(x)alpha_i", "membership.id(x)alpha_i",
             "membership.h+alpha_i(x)id", "contraction.id(x)alpha_1", "affine-image.alpha_1"]
    ok = all(status[n] == "pass" for n in exact) and status["affine-image.alpha_4"] == "warn"
    record(10, ok, "; ".join(f"{n}={status[n]}" for n in exact + ["affine-image.alpha_4"]))


def test_criterion_11_determinism():
    from click.testing import CliRunner

    from rmcert.cli import main

    runner = CliRunner()
    outs = [runner.invoke(main, ["verify", "all", "--seed", "7"]) for _ in range(2)]
    docs = [json.loads(o.output) for o in outs]
    for d in docs:
        d.pop("timing")
    ok = all(o.exit_code == 0 for o in outs) and docs[0] == docs[1]
    record(11, ok, f"exit codes {[o.exit_code for o in outs]}; reports identical modulo timing: {docs[0] == docs[1]}; "
                   f"status {docs[0]['status']} {docs[0]['counts']}")


if __name__ == "__main__":
    import sys

    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
