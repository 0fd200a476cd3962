"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one PASS/FAIL line; run `pytest tests/test_acceptance.py -s`
(or -rA) to see them.  The verification matrix and the oracle matrix are
computed once per session and shared across criteria.
"""

import json

import pytest

from intertwine import models, oracle, verify
from intertwine.cli import main
from intertwine.models import ModelId, bound_state_count
from intertwine.operators import coupling_shift_relation, hydrogen_rescaled_relation
from intertwine.verify import (
    RunConfig, check_relation_identity, perturbed_relation,
    run_verification_matrix,
)

FLOW = models.FLOW_MODELS


@pytest.fixture(scope="module")
def matrix():
    cfg = RunConfig(n_max=8, seed=0)
    return run_verification_matrix(cfg)


@pytest.fixture(scope="module")
def oracle_matrix():
    reports = []
    for model in models.ALL_MODELS:
        for p in models.ORACLE_PARAMETER_SETS[model]:
            reports.append(oracle.compare_with_closed_form(model, p, 4))
    return reports


def _select(matrix, *fragments):
    return [r for r in matrix if any(f in r.relation_id for f in fragments)]


def _emit(idx, label, ok, detail):
    print(f"ACCEPTANCE {idx}: {label}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {idx} failed: {detail}"


def test_criterion_1_eigenpair_residuals(matrix):
    rows = _select(matrix, "/eigenpair")
    assert len(rows) == 25  # 5 models x 5 parameter sets
    worst = max(r.residuals["l2_residual"] for r in rows)
    ok = all(r.passed for r in rows) and worst < 1e-9
    _emit(1, "eigenpair residuals, 5 models x 5 sets, n <= 10",
          ok, f"worst {worst:.2e} < 1e-9")


def test_criterion_2_intertwining_identities(matrix):
    rows = _select(matrix, "coupling-shift", "mass-rescale")
    hyd = [r for r in rows if r.relation_id == "hydrogen/coupling-shift"]
    assert {r.n for r in hyd} == set(range(9))  # n <= 8 exercised
    worst = max(r.residuals["identity_max"] for r in rows)
    ok = all(r.passed for r in rows) and worst < 1e-8
    _emit(2, f"spectral intertwining identities ({len(rows)} instances)",
          ok, f"worst {worst:.2e} < 1e-8")


def test_criterion_3_mappings_and_scaling(matrix):
    maps = _select(matrix, "eigenstate-map")
    worst = max(r.residuals["mapping"] for r in maps)
    cs_ok = all(r.details["c"] != 0.0 and r.details["m"] == 1 for r in maps)
    scal = _select(matrix, "scaling-equivalence")
    worst_s = max(r.residuals["scaling"] for r in scal)
    ok = (all(r.passed for r in maps) and worst < 1e-8 and cs_ok
          and all(r.passed for r in scal) and worst_s < 1e-9)
    _emit(3, "eigenstate mappings (m = 1) and coordinate/coupling rescaling",
          ok, f"worst map {worst:.2e} < 1e-8, worst scaling {worst_s:.2e} < 1e-9")


def test_criterion_4_energy_chains(matrix):
    rows = _select(matrix, "energy-chain")
    assert len(rows) == 15  # 3 flow models x 5 sets
    worst = max(r.residuals["chain"] for r in rows)
    ok = all(r.passed for r in rows) and worst < 1e-13
    _emit(4, "energy-chain identities, n <= 10", ok, f"worst {worst:.2e} < 1e-13")


def test_criterion_5_oscillator_and_trig_ladders(matrix):
    comm = _select(matrix, "ladder-commutation")
    two_step = _select(matrix, "two-step-ladder")
    ann = _select(matrix, "ground-state-annihilation")
    closure = _select(matrix, "cs/closure")
    cs_ladder = _select(matrix, "cs/ladder(")
    worst_comm = max(max(r.residuals.values()) for r in comm + two_step)
    worst_ann = max(r.residuals["annihilation"] for r in ann)
    worst_clo = max(r.residuals["identity_max"] for r in closure)
    worst_gap = max(r.residuals.get("gap", r.residuals["alpha_closed_form"])
                    for r in cs_ladder)
    ok = (all(r.passed for r in comm + two_step + ann + closure + cs_ladder)
          and worst_comm < 1e-8 and worst_ann < 1e-10
          and worst_clo < 1e-7 and worst_gap < 1e-10)
    _emit(5, "oscillator ladder algebra and sinusoidal-coordinate ladders", ok,
          f"commutation {worst_comm:.2e} < 1e-8, annihilation {worst_ann:.2e} "
          f"< 1e-10, closure {worst_clo:.2e} < 1e-7, gap {worst_gap:.2e} < 1e-10")


def test_criterion_6_shape_invariance_and_ladder_spectra(matrix):
    shape = _select(matrix, "shape-invariance")
    worst_inv = max(r.residuals["invariance"] for r in shape)
    worst_eps = max(r.residuals["epsilon_spread"] for r in shape)
    ladders = _select(matrix, "ladder-spectrum")
    assert len(ladders) >= 23   # every model, nearly every parameter set
    worst_def = max(r.residuals["min_overlap_defect"] for r in ladders)
    ok = (all(r.passed for r in shape + ladders)
          and worst_inv < 1e-9 and worst_eps < 1e-8 and worst_def < 1e-7)
    _emit(6, "shape invariance and ladder-constructed spectra (N <= 5)", ok,
          f"invariance {worst_inv:.2e} < 1e-9, eps spread {worst_eps:.2e} "
          f"< 1e-8, overlap defect {worst_def:.2e} < 1e-7")


def test_criterion_7_fd_oracle(oracle_matrix):
    worst_eig = max(r.residuals["eig_rel_discrepancy"] for r in oracle_matrix)
    worst_ord = max(r.residuals["order_deviation"] for r in oracle_matrix)
    counts_ok = all(r.residuals.get("count_mismatch", 0) == 0
                    for r in oracle_matrix)
    hyp_rows = [r for r in oracle_matrix if r.model == "rm-hyp"]
    assert len(hyp_rows) == 3 and all("count_below_threshold" in r.details
                                      for r in hyp_rows)
    ok = (all(r.passed for r in oracle_matrix) and worst_eig < 1e-5
          and worst_ord < 0.3 and counts_ok)
    _emit(7, "finite-difference cross-validation", ok,
          f"worst eig {worst_eig:.2e} < 1e-5, order within 2 +- 0.3 "
          f"(max dev {worst_ord:.2f}), bound-state counts exact")


def test_criterion_8_mutation_sensitivity():
    specs = [coupling_shift_relation(ModelId.HYDROGEN_RADIAL,
                                     models.DEFAULT_PARAMETER_SETS[ModelId.HYDROGEN_RADIAL][0], 1),
             hydrogen_rescaled_relation(
                 models.DEFAULT_PARAMETER_SETS[ModelId.HYDROGEN_RADIAL][0], 1),
             coupling_shift_relation(ModelId.ROSEN_MORSE_SPHERICAL,
                                     models.DEFAULT_PARAMETER_SETS[ModelId.ROSEN_MORSE_SPHERICAL][0], 1),
             coupling_shift_relation(ModelId.ROSEN_MORSE_HYPERBOLIC,
                                     models.DEFAULT_PARAMETER_SETS[ModelId.ROSEN_MORSE_HYPERBOLIC][1], 1)]
    flipped = []
    for spec in specs:
        tf = verify._family_for_relation(spec.model, spec.params, spec.n, 0,
                                         rescaled="rescale" in spec.relation_id)
        assert check_relation_identity(spec, tf).passed
        for which in ("a", "b"):
            rep = check_relation_identity(perturbed_relation(spec, which, 1e-3), tf)
            flipped.append(not rep.passed)
    ok = all(flipped)
    _emit(8, "mutation sensitivity (each intertwiner coefficient, 1e-3 nudge)",
          ok, f"{sum(flipped)}/{len(flipped)} perturbations flip the identity check")


def test_criterion_9_determinism(tmp_path):
    args = ["verify", "--model", "hydrogen", "--model", "rm-hyp",
            "--nmax", "4", "--seed", "0"]
    texts = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code = main(args + ["--output", str(path)])
        assert code == 0
        texts.append(path.read_text())
    arrays = [json.dumps(json.loads(t)["results"], sort_keys=True).encode()
              for t in texts]
    ok = arrays[0] == arrays[1]
    _emit(9, "repeated runs, same seed, byte-identical results arrays", ok,
          f"{len(arrays[0])} bytes compared equal" if ok else "results differ")
