"""Operator constructors, coefficient values, composition plumbing."""


import numpy as np
import pytest

from intertwine import operators
from intertwine._jets import COEF_ONE, Evaluable, evaluable_from_coef, jet_sin
from intertwine.errors import (
    DivisionByZeroAlpha, InsufficientDerivativeOrder, InvalidLevel,
)
from intertwine.models import ModelId, ParameterSet, eigenfunction
from intertwine.operators import (
    ComposedOp, FirstOrderOp, HamiltonianOp, ScalingOp, apply_op,
    coupling_shift_relation, cs_ladder, cs_sinusoidal, cs_supercharges,
    ho_Dhat, ho_Dn, ho_ladder, hydrogen_D, hydrogen_D_tilde,
    hydrogen_rescaled_relation, ladder_roots, rosen_morse_D,
    sinusoidal_ladder,
)

R = np.array([0.4, 1.0, 2.5, 6.0])
XTRIG = np.array([0.4, 1.1, 2.0, 2.9])


def test_hydrogen_D_coefficients():
    p = ParameterSet(m=1.0, g=1.0, ell=0.0)
    D = hydrogen_D(p, 0)
    assert np.allclose(D.a(R).real, R)
    assert np.allclose(D.b(R).real, -R / 2 + 2)


def test_hydrogen_D_on_constant_gives_b():
    p = ParameterSet(m=1.0, g=1.0, ell=0.0)
    D = hydrogen_D(p, 0)
    one = evaluable_from_coef(COEF_ONE)
    assert np.allclose(D.apply(one)(R).real, D.b(R).real)


def test_hydrogen_D_small_coupling_limit():
    # as g -> 0 the operator tends to r d/dr + (n + ell + 2)
    p = ParameterSet(m=1.0, g=1e-12, ell=1.0)
    D = hydrogen_D(p, 2)
    assert np.allclose(D.b(R).real, 5.0, atol=1e-11)


def test_rosen_morse_coefficients_from_parameter_pairs():
    # independent assembly from the +- parameter pair at the shifted coupling
    g, ell, n = 2.0, 0.0, 1
    nn = n + ell + 1
    gs = g * nn / (nn + 1)
    a_plus = -nn + 1j * gs / nn
    a_minus = -nn - 1j * gs / nn
    D = rosen_morse_D(ModelId.ROSEN_MORSE_SPHERICAL, ParameterSet(g=g, ell=ell), n)
    expected_b = ((a_plus - a_minus) / 2j).real * np.sin(XTRIG) \
        + ((a_plus + a_minus) / 2).real * np.cos(XTRIG)
    assert np.allclose(D.b(XTRIG).real, expected_b, rtol=1e-14)
    assert np.allclose(D.a(XTRIG).real, -np.sin(XTRIG))
    # the sin-coefficient collapses to g/(n+ell+2)
    assert ((a_plus - a_minus) / 2j).real == pytest.approx(g / (n + ell + 2))


def test_rosen_morse_hyperbolic_coefficients():
    g, ell, n = 16.0, 0.0, 1
    nn = n + ell + 1
    gs = g * nn / (nn + 1)
    b_plus = -nn + gs / nn
    b_minus = -nn - gs / nn
    assert (b_plus - b_minus) / 2 == pytest.approx(g / (n + ell + 2))
    D = rosen_morse_D(ModelId.ROSEN_MORSE_HYPERBOLIC, ParameterSet(g=g, ell=ell), n)
    x = np.array([0.5, 1.5, 3.0])
    expected = (g / (n + ell + 2)) * np.sinh(x) - nn * np.cosh(x)
    assert np.allclose(D.b(x).real, expected, rtol=1e-14)


def test_rosen_morse_invalid_level():
    # shifted coupling 4 * 2/3 = 8/3 binds only n = 0, so n = 1 is inadmissible
    with pytest.raises(InvalidLevel):
        rosen_morse_D(ModelId.ROSEN_MORSE_HYPERBOLIC, ParameterSet(g=4.0, ell=0.0), 1)


def test_ho_ladder_annihilates_ground_state():
    p = ParameterSet(m=1.0, omega=1.0)
    psi0 = eigenfunction(ModelId.HARMONIC_OSCILLATOR, p, 0)
    x = np.linspace(-4, 4, 41)
    img = ho_ladder(-1, p).apply(psi0)(x)
    assert np.max(np.abs(img)) < 1e-10 * np.max(np.abs(psi0(x)))


def test_ho_Dn_coefficients():
    p = ParameterSet(m=2.0, omega=0.5)
    D = ho_Dn(+1, p, 3)
    x = np.array([-1.0, 0.3, 2.0])
    assert np.allclose(D.a(x).real, x)
    assert np.allclose(D.b(x).real, -1.0 * x**2 + 4.0)  # m w = 1, c = 3.5 + 0.5


def test_ho_Dhat_equals_Dn_on_eigenstate():
    p = ParameterSet(m=1.0, omega=1.0)
    psi2 = eigenfunction(ModelId.HARMONIC_OSCILLATOR, p, 2)
    x = np.linspace(-5, 5, 61)
    a = ho_Dhat(+1, p).apply(psi2)(x)
    b = ho_Dn(+1, p, 2).apply(psi2)(x)
    assert np.max(np.abs(a - b)) < 1e-12 * np.max(np.abs(b))


def test_cs_ladder_matches_closed_coefficients():
    # sin x d/dx +- (n+g) cos x
    g, n = 2.0, 3
    for sign in (+1, -1):
        D = cs_ladder(sign, g, n)
        assert np.allclose(D.a(XTRIG).real, np.sin(XTRIG))
        assert np.allclose(D.b(XTRIG).real, sign * (n + g) * np.cos(XTRIG), rtol=1e-13)


def test_ladder_roots_cs():
    g, n = 2.0, 1
    e = 0.5 * (n + g) ** 2
    ap, am = ladder_roots(1.0, 2.0 * e - 0.25)
    assert ap == pytest.approx(0.5 + (n + g), abs=1e-12)
    assert am == pytest.approx(0.5 - (n + g), abs=1e-12)


def test_sinusoidal_ladder_remainder_term():
    eta, comm, r1, r0, rm1 = cs_sinusoidal(2.0)
    # nonzero remainder just shifts b by a constant
    D = sinusoidal_ladder(comm, eta, r1, r0, lambda e: 3.0, 8.0, +1)
    base = sinusoidal_ladder(comm, eta, r1, r0, lambda e: 0.0, 8.0, +1)
    ap, _ = ladder_roots(1.0, 2.0 * 8.0 - 0.25)
    diff = D.b(XTRIG) - base.b(XTRIG)
    assert np.allclose(diff.real, 3.0 / ap)


def test_sinusoidal_ladder_zero_alpha_raises():
    eta, comm, r1, r0, rm1 = cs_sinusoidal(2.0)
    with pytest.raises(DivisionByZeroAlpha):
        sinusoidal_ladder(comm, eta, lambda e: 0.0, lambda e: 0.0,
                          lambda e: 1.0, 1.0, +1)


def test_cs_supercharges_factorize_hamiltonian():
    g = 2.5
    A, Adag = cs_supercharges(g)
    p = ParameterSet(g=g)
    h = HamiltonianOp(ModelId.CALOGERO_SUTHERLAND, p)
    f = eigenfunction(ModelId.CALOGERO_SUTHERLAND, p, 1)
    x = XTRIG
    lhs = 0.5 * Adag.apply(A.apply(f))(x) + 0.5 * g * g * f(x)
    assert np.allclose(lhs, h.apply(f)(x), rtol=1e-12)


def test_scaling_group_property():
    st = eigenfunction(ModelId.HYDROGEN_RADIAL, ParameterSet(m=1.0, g=1.0, ell=0.0), 1)
    s1, s2 = ScalingOp(0.6), ScalingOp(1.4)
    x = np.array([0.5, 2.0, 7.0])
    lhs = s1.apply(s2.apply(st))(x)
    rhs = ScalingOp(0.6 * 1.4).apply(st)(x)
    assert np.max(np.abs(lhs - rhs)) < 1e-14 * max(1, np.max(np.abs(rhs)))
    # S(a) S(1/a) is the identity
    back = s1.apply(ScalingOp(1 / 0.6).apply(st))(x)
    assert np.allclose(back, st(x), rtol=1e-13)


def test_identity_composition():
    st = eigenfunction(ModelId.CALOGERO_SUTHERLAND, ParameterSet(g=2.0), 1)
    out = apply_op(operators.IDENTITY_OP, st)
    assert np.allclose(out(XTRIG), st(XTRIG))


def test_insufficient_derivative_order():
    limited = Evaluable(lambda x, K: jet_sin(x, K), max_order=2, label="capped")
    spec = coupling_shift_relation(ModelId.ROSEN_MORSE_SPHERICAL,
                                   ParameterSet(g=2.0, ell=0.0), 0)
    with pytest.raises(InsufficientDerivativeOrder):
        spec.lhs(limited)(XTRIG)   # H(D f) needs three orders


def test_relation_spec_content():
    p = ParameterSet(m=1.0, g=1.0, ell=0.0)
    spec = coupling_shift_relation(ModelId.HYDROGEN_RADIAL, p, 0)
    assert spec.epsilon == 0.0
    assert spec.energy == pytest.approx(-0.125)
    assert spec.h_right.params.g == 0.5
    comp = hydrogen_rescaled_relation(p, 0)
    assert comp.h_right.params.m == pytest.approx(4.0)  # m / alpha^2, alpha = 1/2
    assert comp.energy == pytest.approx(-0.125)         # -g^2 alpha^2 / (2 m)
    assert isinstance(comp.D, ComposedOp)


def test_composite_operator_applies_scaling_first():
    p = ParameterSet(m=1.0, g=1.0, ell=0.0)
    st = eigenfunction(ModelId.HYDROGEN_RADIAL, p, 0)
    alpha = operators.hydrogen_alpha(p, 0)
    via_tilde = hydrogen_D_tilde(p, 0).apply(st)(R)
    manual = hydrogen_D(p, 0).apply(ScalingOp(alpha).apply(st))(R)
    assert np.allclose(via_tilde, manual)


def test_perturbed_copies():
    p = ParameterSet(m=1.0, g=1.0, ell=0.0)
    D = hydrogen_D(p, 0)
    Dp = D.perturbed("b", 1e-3)
    assert np.allclose(Dp.b(R).real, D.b(R).real * 1.001)
    assert np.allclose(Dp.a(R).real, D.a(R).real)
    with pytest.raises(ValueError):
        D.perturbed("c", 1e-3)
