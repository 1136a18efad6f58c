"""Command-line front end.  Every command prints a JSON document; exit code 0 when no check
fails, 1 when one does, 2 on usage errors."""
from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import click

from . import suites
from .fixtures import FIXTURES
from .quasitrig import (build_lagrangian, check_lagrangian, check_transversal, diagonal_subalgebra,
                        literal_candidates)
from .seaweed import algebra_index, build_seaweed

CHOICES = ("all",) + suites.SUITE_NAMES


def _jsonable(value):
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return suites.fmt(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(doc: dict, json_path: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    click.echo(text)
    if json_path:
        Path(json_path).write_text(text + "\n")


def _parse_fraction(_ctx, _param, value):
    if value is None:
        return None
    try:
        out = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"expected p/q, got {value!r}") from exc
    if out == 0:
        raise click.BadParameter("s must be non-zero")
    return out


def common_options(fn):
    fn = click.option("--json", "json_path", type=click.Path(dir_okay=False), help="Also write the report here.")(fn)
    fn = click.option("--specialize-s", callback=_parse_fraction, default=None,
                      help="Rational s for a specialized pre-pass before the symbolic pass.")(fn)
    fn = click.option("--trials", type=click.IntRange(min=1), default=8, show_default=True,
                      help="Random functionals for index computations.")(fn)
    fn = click.option("--seed", type=int, default=0, envvar="RMF_SEED", show_default=True,
                      help="Seed for randomized steps (falls back to RMF_SEED).")(fn)
    return fn


def _finish(report: dict, code: int, json_path: str | None):
    _emit(report, json_path)
    sys.exit(code)


def _report_from_checks(name: str, checks, opts: suites.Options, start: float, extra: dict | None = None):
    report = suites.build_report(name, checks, opts, time.perf_counter() - start)
    if extra:
        report.update(extra)
    return report, (1 if report["status"] == "fail" else 0)


@click.group()
def main():
    """Exact verification of Cremmer-Gervais type r-matrices and their quantizations."""


@main.command()
@click.argument("suite", type=click.Choice(CHOICES))
@common_options
def verify(suite, seed, trials, specialize_s, json_path):
    """Run a named verification suite."""
    report, code = suites.run_suite(suite, suites.Options(seed, trials, specialize_s))
    _finish(report, code, json_path)


@main.command()
@click.argument("name", type=click.Choice(sorted(FIXTURES)))
@click.option("--json", "json_path", type=click.Path(dir_okay=False))
def fixture(name, json_path):
    """Print a transcribed constant as exact JSON."""
    entry = FIXTURES[name]
    doc = {"schema": suites.SCHEMA, "name": name, "anchor": entry["anchor"], "kind": entry["kind"],
           "value": _jsonable(entry["value"])}
    _emit(doc, json_path)


@main.group()
def seaweed():
    """Seaweed subalgebras of sl_n."""


@seaweed.command("index")
@click.option("--n", type=click.IntRange(min=2), default=5, show_default=True)
@click.option("--i", "plus_index", type=int, default=1, show_default=True)
@click.option("--j", "minus_index", type=int, default=4, show_default=True)
@common_options
def seaweed_index(n, plus_index, minus_index, seed, trials, specialize_s, json_path):
    """Index of P_i^+ cap P_j^- by random functionals (an upper bound; index 0 is exact)."""
    if not (1 <= plus_index < n and 1 <= minus_index < n):
        raise click.UsageError("need 1 <= i, j < n")
    alg = build_seaweed(n, plus_index, minus_index)
    idx = algebra_index(alg, trials, seed)
    doc = {"schema": suites.SCHEMA, "n": n, "i": plus_index, "j": minus_index, "dim": alg.dim, "index": idx,
           "frobenius": idx == 0, "trials": trials, "seed": seed,
           "semantics": "dim minus the largest rank found; certifies index 0, otherwise an upper bound"}
    _emit(doc, json_path)


@main.group()
def quasitrig():
    """Quasi-trigonometric r-matrices and Lagrangian subalgebras."""


@quasitrig.command("verify-fixture")
@common_options
def quasitrig_verify_fixture(seed, trials, specialize_s, json_path):
    """Bracket readings of the printed sl_4 display and the reconstructed reading."""
    opts = suites.Options(seed, trials, specialize_s)
    start = time.perf_counter()
    checks = [c for c in suites.suite_quasitrig(opts) if c["name"].startswith("quasitrig.fixture")]
    table = [{"reading": c.name, "residual_terms": c.residual_terms} for c in literal_candidates()]
    report, code = _report_from_checks("quasitrig-fixture", checks, opts, start, {"candidates": table})
    _finish(report, code, json_path)


def _read_matrix(path: str):
    data = json.loads(Path(path).read_text())
    try:
        return [[Fraction(str(x)) for x in row] for row in data]
    except (TypeError, ValueError) as exc:
        raise click.UsageError(f"{path}: expected a list of rows of rationals") from exc


def _read_pairs(path: str):
    """[[X, Y], ...] with X, Y square rational matrices (lists of rows)."""
    data = json.loads(Path(path).read_text())
    pairs = []
    for pair in data:
        mats = []
        for rows in pair:
            mats.append({(i + 1, j + 1): Fraction(str(v)) for i, row in enumerate(rows)
                         for j, v in enumerate(row) if Fraction(str(v))})
        pairs.append(tuple(mats))
    size = len(data[0][0]) if data else 0
    return pairs, size


@quasitrig.command("lagrangian")
@click.option("--T", "t_path", type=click.Path(exists=True, dir_okay=False), help="JSON matrix; default: built-in T.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False))
def quasitrig_lagrangian(t_path, json_path):
    """Is W = {(Ad(T)Y, Y)} Lagrangian in sl_n + sl_n?"""
    start = time.perf_counter()
    try:
        w = build_lagrangian(_read_matrix(t_path)) if t_path else build_lagrangian()
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    rep = check_lagrangian(w)
    checks = [suites.check("quasitrig.W.lagrangian", suites._pf(rep.lagrangian),
                           {"dim": rep.dim, "ambient_dim": rep.ambient_dim,
                            "isotropy_violations": rep.isotropy_violations, "closed": rep.closed},
                           "W is isotropic for Q and half-dimensional")]
    report, code = _report_from_checks("quasitrig-lagrangian", checks, suites.Options(), start)
    _finish(report, code, json_path)


@quasitrig.command("transversal")
@click.option("--L", "l_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON list of [X, Y] pairs; default: the diagonal.")
@click.option("--T", "t_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "json_path", type=click.Path(dir_okay=False))
def quasitrig_transversal(l_path, t_path, json_path):
    """Intersection and sum of W with a subalgebra L (verdict reported, not asserted)."""
    start = time.perf_counter()
    w = build_lagrangian(_read_matrix(t_path)) if t_path else build_lagrangian()
    other = _read_pairs(l_path)[0] if l_path else diagonal_subalgebra(w.n)
    rep = check_transversal(w, other, w.n)
    checks = [suites.check("quasitrig.W.transversality", "pass",
                           {"intersection_dim": rep.intersection_dim, "sum_dim": rep.sum_dim,
                            "ambient_dim": rep.ambient_dim, "transversal": rep.transversal},
                           "W against L: intersection and sum dimensions")]
    report, code = _report_from_checks("quasitrig-transversal", checks, suites.Options(), start)
    _finish(report, code, json_path)


@main.group()
def quantum():
    """Quantum twists, R-matrices and the classical limit."""


@quantum.command("cocycle")
@click.option("--target", type=click.Choice(["cg5", "affine4"]), default="cg5", show_default=True)
@common_options
def quantum_cocycle(target, seed, trials, specialize_s, json_path):
    """Cocycle condition for the finite or affinized twist."""
    opts = suites.Options(seed, trials, specialize_s)
    start = time.perf_counter()
    keep = ("quantum.cocycle.K5", "quantum.cocycle.F_CG5") if target == "cg5" else \
        ("quantum.cocycle.K4hat", "quantum.cocycle.F_CG4hat")
    checks = [c for c in suites.suite_quantum_cocycle(opts) if c["name"].split(".prepass")[0] in keep]
    report, code = _report_from_checks(f"quantum-cocycle-{target}", checks, opts, start)
    _finish(report, code, json_path)


@quantum.command("qybe")
@click.option("--twisted/--untwisted", default=True, show_default=True)
@common_options
def quantum_qybe(twisted, seed, trials, specialize_s, json_path):
    """Quantum Yang-Baxter equation for R or F21 R F^-1."""
    opts = suites.Options(seed, trials, specialize_s)
    start = time.perf_counter()
    drop = "quantum.qybe.untwisted" if twisted else "quantum.qybe.twisted"
    checks = [c for c in suites.suite_quantum_qybe(opts) if not c["name"].startswith(drop)]
    report, code = _report_from_checks("quantum-qybe", checks, opts, start)
    _finish(report, code, json_path)


@quantum.command("semiclassical")
@common_options
def quantum_semiclassical(seed, trials, specialize_s, json_path):
    """First-order term of the twisted R against X(z, t)."""
    opts = suites.Options(seed, trials, specialize_s)
    start = time.perf_counter()
    report, code = _report_from_checks("semiclassical", suites.suite_semiclassical(opts), opts, start)
    _finish(report, code, json_path)


if __name__ == "__main__":
    main()
