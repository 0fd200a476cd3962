"""Finite-difference oracle against the closed forms it cross-checks."""


import numpy as np
import pytest

from intertwine import models, oracle
from intertwine.errors import IndexOutOfSpectrum, TruncationTooTight
from intertwine.models import ModelId, ParameterSet
from intertwine.oracle import (
    GridConfig, compare_with_closed_form, convergence_orders, count_below,
    fd_eigensolve, oracle_bounds,
)

HO = ModelId.HARMONIC_OSCILLATOR
CS = ModelId.CALOGERO_SUTHERLAND
HYD = ModelId.HYDROGEN_RADIAL
HYP = ModelId.ROSEN_MORSE_HYPERBOLIC


def test_ho_ladder_of_eigenvalues():
    res = fd_eigensolve(HO, ParameterSet(m=1.0, omega=1.0), 4,
                        GridConfig(n=512, levels=2))
    ref = np.array([0.5, 1.5, 2.5, 3.5])
    assert np.all(np.abs(res.eigenvalues - ref) < 1e-6)
    assert np.all(np.abs(res.eigenvalues - ref) <= 10 * res.error_estimates + 1e-9)


def test_hydrogen_low_levels():
    res = fd_eigensolve(HYD, ParameterSet(m=1.0, g=1.0, ell=0.0), 3,
                        GridConfig(n=2048, levels=2))
    ref = np.array([-0.5, -0.125, -1.0 / 18.0])
    assert np.max(np.abs(res.eigenvalues - ref) / np.abs(ref)) < 1e-5


def test_hyperbolic_bound_state_census():
    p = ParameterSet(g=9.0, ell=0.0)
    found = count_below(HYP, p, -2.0 * p.g, GridConfig(n=1024))
    assert found == 2 == models.bound_state_count(HYP, p)
    p = ParameterSet(g=12.25, ell=0.0)
    assert count_below(HYP, p, -2.0 * p.g, GridConfig(n=1024)) == 3


def test_second_order_convergence_ratio():
    # quadrupling the resolution shrinks the raw discrepancy ~16x
    p = ParameterSet(g=2.0)
    exact = models.eigenvalue(CS, p, 0)
    errs = []
    for n in (64, 256):
        res = fd_eigensolve(CS, p, 1, GridConfig(n=n, levels=1))
        errs.append(abs(res.per_level[0][0] - exact))
    ratio = errs[0] / errs[1]
    assert 10 < ratio < 22


def test_observed_order_window():
    res = fd_eigensolve(HO, ParameterSet(m=1.0, omega=1.0), 3,
                        GridConfig(ns=(64, 128, 256)))
    orders = convergence_orders(res)
    assert orders is not None
    assert np.all(np.abs(orders - 2.0) < 0.3)


def test_eigenvector_overlaps():
    rep = compare_with_closed_form(HO, ParameterSet(m=1.0, omega=1.0), 5,
                                   GridConfig(n=1024, levels=2))
    assert rep.residuals["overlap_defect"] < 1e-5
    assert rep.passed


def test_compare_full_matrix_passes():
    for model in models.ALL_MODELS:
        p = models.ORACLE_PARAMETER_SETS[model][0]
        rep = compare_with_closed_form(model, p, 4)
        assert rep.passed, (model, rep.residuals)


def test_truncation_guard():
    with pytest.raises(TruncationTooTight):
        fd_eigensolve(HO, ParameterSet(m=1.0, omega=1.0), 1,
                      GridConfig(n=256, levels=1, bounds=(-2.0, 2.0)))


def test_k_beyond_bound_count():
    with pytest.raises(IndexOutOfSpectrum):
        fd_eigensolve(HYP, ParameterSet(g=9.0, ell=0.0), 3)


def test_grid_config_validation():
    with pytest.raises(ValueError):
        GridConfig(n=32)
    with pytest.raises(ValueError):
        GridConfig(ns=(128, 64))
    with pytest.raises(ValueError):
        fd_eigensolve(HO, ParameterSet(m=1.0, omega=1.0), 0)


def test_bounds_are_state_aware():
    lo, hi = oracle_bounds(HYD, ParameterSet(m=1.0, g=1.0, ell=0.0), 4)
    assert lo == 0.0
    st = models.eigenfunction(HYD, ParameterSet(m=1.0, g=1.0, ell=0.0), 3)
    assert abs(st(np.array([hi]))[0]) < 1e-6


def test_hydrogen_solved_in_u_form():
    # the solver's vector matches r * psi(r), not psi itself
    p = ParameterSet(m=1.0, g=2.0, ell=0.0)
    res = fd_eigensolve(HYD, p, 1, GridConfig(n=512, levels=1))
    u = oracle.closed_form_on_grid(HYD, p, 0, res.grid)
    v = res.eigenvectors[0] * np.sign(np.dot(res.eigenvectors[0], u))
    assert abs(np.dot(u, v)) > 1 - 1e-5
    psi = models.eigenfunction(HYD, p, 0)(res.grid)
    psi /= np.linalg.norm(psi)
    assert abs(np.dot(psi, v)) < 0.999  # plain psi is measurably different
