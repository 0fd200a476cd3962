"""Polynomial recurrences against explicit series expansions.

The series oracles below are written directly from the finite-sum
definitions (generalized binomials as falling-factorial products), fully
independent of the three-term recurrences they check.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intertwine import specfun
from intertwine.specfun import (
    PolyFamily, PolyKind, eval_poly, eval_poly_deriv, hermite, jacobi,
    laguerre, poly_derivs,
)


def binom_gen(c, k):
    """binomial(c, k) for complex c and integer k >= 0."""
    out = 1.0 + 0j
    for j in range(k):
        out *= (c - j) / (j + 1)
    return out


def hermite_series(n, z):
    acc = 0j
    for m in range(n // 2 + 1):
        acc += ((-1) ** m / (math.factorial(m) * math.factorial(n - 2 * m))
                * (2 * z) ** (n - 2 * m))
    return math.factorial(n) * acc


def laguerre_series(n, alpha, z):
    acc = 0j
    for k in range(n + 1):
        acc += (-1) ** k * binom_gen(n + alpha, n - k) * z**k / math.factorial(k)
    return acc


def jacobi_series(n, alpha, beta, z):
    acc = 0j
    for s in range(n + 1):
        acc += (binom_gen(n + alpha, n - s) * binom_gen(n + beta, s)
                * ((z - 1) / 2) ** s * ((z + 1) / 2) ** (n - s))
    return acc


def series_value(fam, z):
    if fam.kind is PolyKind.HERMITE:
        return hermite_series(fam.degree, z)
    if fam.kind is PolyKind.LAGUERRE_ASSOC:
        return laguerre_series(fam.degree, fam.alpha, z)
    return jacobi_series(fam.degree, fam.alpha, fam.beta, z)


# frozen examples (series oracle values computed by hand/by the sums above)

def test_trivial_degree_zero():
    assert eval_poly(jacobi(0, 2.3 + 1j, -0.7), 0.4 - 2j) == 1.0


def test_hermite_2_at_1():
    # H_2(x) = 4x^2 - 2 -> 2 at x = 1
    assert eval_poly(hermite(2), 1.0) == pytest.approx(2.0, abs=1e-14)
    assert hermite_series(2, 1.0) == pytest.approx(2.0, abs=1e-14)


def test_laguerre_1_alpha2_at_3():
    # L_1^a(x) = a + 1 - x -> 0 at a=2, x=3
    assert eval_poly(laguerre(1, 2.0), 3.0) == pytest.approx(0.0, abs=1e-14)
    assert laguerre_series(1, 2.0, 3.0) == pytest.approx(0.0, abs=1e-14)


def test_derivative_of_constant_is_zero():
    for fam in (hermite(0), laguerre(0, 1.3), jacobi(0, 0.2, 0.4)):
        assert eval_poly_deriv(fam, 0.7, 1) == 0.0


def test_hermite_2_derivative_at_1():
    # dH_2/dx = 2*2*H_1 = 8x -> 8
    assert eval_poly_deriv(hermite(2), 1.0, 1) == pytest.approx(8.0, abs=1e-13)


def test_jacobi_1_symmetric_derivative():
    # P_1^{(0,0)}(z) = z, slope 1 everywhere
    for z in (0.0, 0.35, -2.0, 1j):
        assert eval_poly_deriv(jacobi(1, 0.0, 0.0), z, 1) == pytest.approx(1.0, abs=1e-14)


def test_recurrence_vs_series_fixed_grid():
    rng = np.random.default_rng(42)
    for n in range(9):
        for _ in range(20):
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            fams = [
                hermite(n),
                laguerre(n, complex(rng.uniform(-1, 4), rng.uniform(-1, 1))),
                jacobi(n, complex(rng.uniform(-4, 3), rng.uniform(-2, 2)),
                       complex(rng.uniform(-4, 3), rng.uniform(-2, 2))),
            ]
            for fam in fams:
                got = eval_poly(fam, z)
                ref = series_value(fam, z)
                assert abs(got - ref) <= 1e-12 * max(1.0, abs(ref)), (fam, z)


@settings(max_examples=80, deadline=None)
@given(n=st.integers(0, 8),
       ar=st.floats(-4, 3), ai=st.floats(-2, 2),
       br=st.floats(-4, 3), bi=st.floats(-2, 2),
       zr=st.floats(-3, 3), zi=st.floats(-3, 3))
def test_jacobi_reflection_symmetry(n, ar, ai, br, bi, zr, zi):
    a, b, z = complex(ar, ai), complex(br, bi), complex(zr, zi)
    lhs = eval_poly(jacobi(n, a, b), -z)
    rhs = (-1) ** n * eval_poly(jacobi(n, b, a), z)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 8), frac=st.floats(0.05, 0.95), gi=st.floats(0.01, 8),
       t=st.floats(-20, 20))
def test_conjugate_pair_realness(n, frac, gi, t):
    # conjugate parameters and purely imaginary argument: i^{-n} P is real;
    # Re(a) = -(n + ell + 1) as in the trigonometric eigenfunctions, kept
    # off the recurrence's removable poles by a fractional offset
    a = complex(-(n + frac + 1.0), gi)
    val = eval_poly(jacobi(n, a, np.conj(a)), 1j * t)
    fixed = (-1j) ** n * val
    assert abs(fixed.imag) <= 1e-10 * max(abs(fixed), 1e-280)


def test_derivative_rules_vs_central_difference():
    rng = np.random.default_rng(7)
    h = 1e-5
    for n in range(1, 9):
        fams = [hermite(n), laguerre(n, 1.7), jacobi(n, 0.3 - 1.1j, 0.3 + 1.1j)]
        for fam in fams:
            z = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
            fd = (eval_poly(fam, z + h) - eval_poly(fam, z - h)) / (2 * h)
            got = eval_poly_deriv(fam, z, 1)
            assert abs(got - fd) <= 1e-7 * max(1.0, abs(got))


def test_second_derivative_via_shift_rules():
    fam = laguerre(4, 0.8)
    z = 0.9 + 0.3j
    h = 1e-4
    fd2 = (eval_poly(fam, z + h) - 2 * eval_poly(fam, z) + eval_poly(fam, z - h)) / h**2
    assert abs(eval_poly_deriv(fam, z, 2) - fd2) <= 1e-6 * max(1.0, abs(fd2))


def test_poly_derivs_rows_vanish_past_degree():
    rows = poly_derivs(hermite(3), np.array([0.5 + 0j]), 6)
    assert np.allclose(rows[4:], 0.0)


def test_vectorized_matches_scalar():
    z = np.array([0.1, -0.4 + 0.2j, 3.0])
    fam = jacobi(5, -7.0 + 0.5j, -7.0 - 0.5j)
    vec = eval_poly(fam, z)
    for zi, vi in zip(z, vec):
        assert eval_poly(fam, zi) == vi


def test_removable_pole_flags_non_finite():
    # parameters summing to -4 put a recurrence pole at step k = 3 <= degree;
    # both backends flag it as NaN instead of raising
    val = eval_poly(jacobi(5, -2.0 + 0.5j, -2.0 - 0.5j), 0.3)
    assert not np.isfinite(val.real)


def test_degree_validation():
    with pytest.raises(ValueError):
        PolyFamily(PolyKind.HERMITE, -1)
    with pytest.raises(ValueError):
        eval_poly_deriv(hermite(2), 0.3, 3)
