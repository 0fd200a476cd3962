"""Operators: level-dependent intertwiners, rescaling, ladders, supercharges.

Operators are immutable value objects holding coefficient *functions* (not
matrices); application is analytic through the jet machinery, never a
finite-difference stencil, so identity residuals sit at roundoff level.
Every composition tracks how many derivative orders it consumes and raises
InsufficientDerivativeOrder instead of silently degrading.
"""

from __future__ import annotations

import math

import numpy as np

from . import models
from ._jets import (
    COEF_COS, COEF_COSH, COEF_ONE, COEF_SIN, COEF_SINH, COEF_X, Coef,
    Evaluable, coef_const, jet_deriv, jmul,
)
from .errors import DivisionByZeroAlpha, InvalidLevel
from .models import ModelId, ParameterSet, QSpec


class FirstOrderOp:
    """a(x) d/dx + b(x)."""

    __slots__ = ("a", "b", "label")
    order_cost = 1

    def __init__(self, a: Coef, b: Coef, label=""):
        self.a = a
        self.b = b
        self.label = label

    def apply(self, f: Evaluable) -> Evaluable:
        def fn(x, order):
            F = f.taylor(x, order + 1)
            d1 = jet_deriv(F)
            out = jmul(self.a.taylor(x, order), d1)
            return out + jmul(self.b.taylor(x, order), F[: order + 1])

        mo = None if f.max_order is None else f.max_order - 1
        return Evaluable(fn, max_order=mo, label=f"{self.label}({f.label})")

    def perturbed(self, which: str, rel: float) -> "FirstOrderOp":
        """Copy with coefficient 'a' or 'b' scaled by (1 + rel); for mutation tests."""
        if which == "a":
            return FirstOrderOp((1.0 + rel) * self.a, self.b, label=f"{self.label}~a")
        if which == "b":
            return FirstOrderOp(self.a, (1.0 + rel) * self.b, label=f"{self.label}~b")
        raise ValueError(f"which must be 'a' or 'b', got {which!r}")


class MultiplicationOp:
    """Pure multiplication by b(x)."""

    __slots__ = ("b", "label")
    order_cost = 0

    def __init__(self, b: Coef, label=""):
        self.b = b
        self.label = label

    def apply(self, f: Evaluable) -> Evaluable:
        def fn(x, order):
            return jmul(self.b.taylor(x, order), f.taylor(x, order))

        return Evaluable(fn, max_order=f.max_order, label=f"{self.label}*{f.label}")


class ScalingOp:
    """Coordinate rescaling (S f)(x) = f(alpha x)."""

    __slots__ = ("alpha",)
    order_cost = 0

    def __init__(self, alpha: float):
        if alpha <= 0:
            raise ValueError(f"scale factor must be positive, got {alpha}")
        self.alpha = float(alpha)

    @property
    def label(self):
        return f"S({self.alpha:g})"

    def apply(self, f: Evaluable) -> Evaluable:
        alpha = self.alpha

        def fn(x, order):
            F = f.taylor(alpha * x, order)
            scale = alpha ** np.arange(order + 1)
            return F * scale[:, None]

        return Evaluable(fn, max_order=f.max_order, label=f"{self.label}{f.label}")


class HamiltonianOp:
    """H(model, params) acting through models.apply_hamiltonian."""

    __slots__ = ("model", "params", "label")
    order_cost = 2

    def __init__(self, model: ModelId, p: ParameterSet):
        models.validate_params(model, p)
        self.model = model
        self.params = p
        self.label = f"H[{model.value};{p.label()}]"

    def apply(self, f: Evaluable) -> Evaluable:
        return models.apply_hamiltonian(self.model, self.params, f)


class ComposedOp:
    """ops[0] o ops[1] o ... (rightmost applied first)."""

    __slots__ = ("ops", "label")

    def __init__(self, ops, label=""):
        self.ops = tuple(ops)
        self.label = label or "*".join(op.label for op in self.ops)

    @property
    def order_cost(self):
        return sum(op.order_cost for op in self.ops)

    def apply(self, f: Evaluable) -> Evaluable:
        for op in reversed(self.ops):
            f = op.apply(f)
        return f


class OpSum:
    """Linear combination sum_i c_i op_i."""

    __slots__ = ("terms", "label")

    def __init__(self, terms, label=""):
        self.terms = tuple((complex(c), op) for c, op in terms)
        self.label = label or "+".join(f"{c}*{op.label}" for c, op in self.terms)

    @property
    def order_cost(self):
        return max(op.order_cost for _, op in self.terms)

    def apply(self, f: Evaluable) -> Evaluable:
        acc = None
        for c, op in self.terms:
            piece = op.apply(f) * c
            acc = piece if acc is None else acc + piece
        return acc


IDENTITY_OP = MultiplicationOp(COEF_ONE, label="1")


def apply_op(op, f: Evaluable) -> Evaluable:
    """Apply any operator (or composition) to an evaluable."""
    return op.apply(f)


def build_q(q: QSpec) -> MultiplicationOp:
    return MultiplicationOp(q.coef(), label=f"Q[{q.kind}*{q.scale:g}]")


# ---------------------------------------------------------------------------
# model-specific constructors
# ---------------------------------------------------------------------------

def hydrogen_D(p: ParameterSet, n: int) -> FirstOrderOp:
    """r d/dr - g r/(n+ell+2) + (n+ell+2), the coupling-shift intertwiner."""
    models.validate_params(ModelId.HYDROGEN_RADIAL, p)
    k = n + p.ell + 2
    b = (-p.g / k) * COEF_X + coef_const(k)
    return FirstOrderOp(COEF_X, b, label=f"D{n}[hydrogen]")


def hydrogen_alpha(p: ParameterSet, n: int) -> float:
    """Scale factor with alpha * g = flowed coupling."""
    return (n + p.ell + 1) / (n + p.ell + 2)


def hydrogen_D_tilde(p: ParameterSet, n: int) -> ComposedOp:
    """Composite intertwiner: rescale first, then apply D_n."""
    return ComposedOp((hydrogen_D(p, n), ScalingOp(hydrogen_alpha(p, n))),
                      label=f"Dtilde{n}[hydrogen]")


def rosen_morse_D(model: ModelId, p: ParameterSet, n: int) -> FirstOrderOp:
    """Level-n intertwiner for either Rosen-Morse well.

    Substituting the shifted-coupling parameter pair into the operator
    template collapses it to

        spherical:   -sin x d/dx + (g/(n+ell+2)) sin x  - (n+ell+1) cos x
        hyperbolic:  -sinh x d/dx + (g/(n+ell+2)) sinh x - (n+ell+1) cosh x

    since (a~+ + a~-)/2 = -(n+ell+1) and the difference term equals
    g_n/(n+ell+1) = g/(n+ell+2).
    """
    models.validate_params(model, p)
    nn = n + p.ell + 1
    if model is ModelId.ROSEN_MORSE_SPHERICAL:
        osc, hyp = COEF_SIN, COEF_COS
    elif model is ModelId.ROSEN_MORSE_HYPERBOLIC:
        osc, hyp = COEF_SINH, COEF_COSH
        gs = models.flowed_coupling(p, n)
        if not (n < math.sqrt(gs) - p.ell - 1):
            raise InvalidLevel(
                f"level {n} not bound at the shifted coupling g={gs:g}")
    else:
        raise ValueError(f"expected a Rosen-Morse model, got {model}")
    b = (p.g / (nn + 1)) * osc - nn * hyp
    return FirstOrderOp(-1.0 * osc, b, label=f"D{n}[{model.value}]")


def ho_ladder(sign: int, p: ParameterSet) -> FirstOrderOp:
    """Single-step ladder operators -+ sqrt(1/2m w)(d/dx -+ m w x)."""
    models.validate_params(ModelId.HARMONIC_OSCILLATOR, p)
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    s = math.sqrt(1.0 / (2 * p.m * p.omega))
    a = coef_const(-sign * s)
    b = coef_const(s * p.m * p.omega) * COEF_X
    return FirstOrderOp(a, b, label=f"a{'+' if sign > 0 else '-'}")


def ho_Dn(sign: int, p: ParameterSet, n: int) -> FirstOrderOp:
    """Two-step ladder as a first-order operator (energy replaces H)."""
    models.validate_params(ModelId.HARMONIC_OSCILLATOR, p)
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    c = sign * (n + 0.5) + 0.5
    b = (-sign * p.m * p.omega) * (COEF_X * COEF_X) + coef_const(c)
    return FirstOrderOp(COEF_X, b, label=f"D{n}^({sign:+d})[ho]")


def ho_Dhat(sign: int, p: ParameterSet) -> OpSum:
    """Two-step ladder with H itself in the coefficient (second-order form)."""
    first = FirstOrderOp(COEF_X,
                         (-sign * p.m * p.omega) * (COEF_X * COEF_X) + coef_const(0.5),
                         label="xd-mwx2+1/2")
    h = HamiltonianOp(ModelId.HARMONIC_OSCILLATOR, p)
    return OpSum(((1.0, first), (sign / p.omega, h)),
                 label=f"Dhat^({sign:+d})[ho]")


def ladder_roots(r1_at_e: float, r0_at_e: float):
    """Roots (alpha_+, alpha_-) of t^2 - R1 t - R0 = 0 at a fixed energy."""
    disc = r1_at_e * r1_at_e / 4.0 + r0_at_e
    root = math.sqrt(disc) if disc >= 0 else complex(0, math.sqrt(-disc))
    return r1_at_e / 2.0 + root, r1_at_e / 2.0 - root


def sinusoidal_ladder(commutator: FirstOrderOp, eta: Coef, r1, r0, rm1,
                      energy: float, sign: int) -> FirstOrderOp:
    """Ladder operator from a sinusoidal coordinate at fixed level energy.

    ``commutator`` is [H, eta] supplied as a first-order operator (for a
    Schroedinger H and a function eta it always is one); r1, r0, rm1 are
    the closure-relation polynomials as callables of the energy.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    ap, am = ladder_roots(float(r1(energy)), float(r0(energy)))
    a_same = ap if sign > 0 else am
    a_opp = am if sign > 0 else ap
    rem = float(rm1(energy))
    b = commutator.b - a_opp * eta
    if rem != 0.0:
        if a_same == 0.0:
            raise DivisionByZeroAlpha(
                "alpha at this energy vanishes but the remainder term does not")
        b = b + coef_const(rem / a_same)
    return FirstOrderOp(commutator.a, b,
                        label=f"D{'+' if sign > 0 else '-'}(E={energy:g})")


def cs_sinusoidal(g: float):
    """Sinusoidal-coordinate data for the trigonometric 1/sin^2 model.

    Returns (eta, [H, eta], R1, R0, R-1): eta = cos x, [H, eta] =
    sin x d/dx + cos x / 2, R1 = 1, R0(E) = 2E - 1/4, R-1 = 0.
    """
    commutator = FirstOrderOp(COEF_SIN, 0.5 * COEF_COS, label="[H,cos]")
    return COEF_COS, commutator, (lambda e: 1.0), (lambda e: 2.0 * e - 0.25), (lambda e: 0.0)


def cs_ladder(sign: int, g: float, n: int) -> FirstOrderOp:
    """sin x d/dx +- (n+g) cos x, stepping level n -> n +- 1."""
    eta, comm, r1, r0, rm1 = cs_sinusoidal(g)
    energy = models.energy_formula(ModelId.CALOGERO_SUTHERLAND, ParameterSet(g=g), n)
    return sinusoidal_ladder(comm, eta, r1, r0, rm1, energy, sign)


def cs_supercharges(g: float):
    """(A, A+) with A = d/dx - g cot x; H = A+ A / 2 + g^2/2."""
    if g <= 0:
        raise ValueError(f"need g > 0, got {g}")
    cot = COEF_COS / COEF_SIN
    A = FirstOrderOp(COEF_ONE, (-g) * cot, label="A")
    Adag = FirstOrderOp(-1.0 * COEF_ONE, (-g) * cot, label="A+")
    return A, Adag


# ---------------------------------------------------------------------------
# declared identities: H D = D (H' + eps) + Q (H' - E)
# ---------------------------------------------------------------------------

class RelationSpec:
    """One intertwining identity instantiated at concrete (params, n).

    lhs(f) = H_left (D f);   rhs(f) = D ((H_right + eps) f) + Q ((H_right - E) f).
    """

    __slots__ = ("relation_id", "model", "params", "n", "D", "h_left",
                 "h_right", "epsilon", "energy", "Q")

    def __init__(self, relation_id, model, params, n, D, h_left, h_right,
                 epsilon, energy, Q):
        self.relation_id = relation_id
        self.model = model
        self.params = params
        self.n = n
        self.D = D
        self.h_left = h_left
        self.h_right = h_right
        self.epsilon = float(epsilon)
        self.energy = float(energy)
        self.Q = Q

    def lhs(self, f: Evaluable) -> Evaluable:
        return self.h_left.apply(self.D.apply(f))

    def rhs(self, f: Evaluable) -> Evaluable:
        hf = self.h_right.apply(f)
        first = self.D.apply(hf + f * self.epsilon)
        second = self.Q.apply(hf + f * (-self.energy))
        return first + second

    def with_operator(self, D) -> "RelationSpec":
        return RelationSpec(self.relation_id, self.model, self.params, self.n,
                            D, self.h_left, self.h_right, self.epsilon,
                            self.energy, self.Q)

    def scale_hint(self) -> float:
        return max(1.0, abs(self.epsilon), abs(self.energy))


def coupling_shift_relation(model: ModelId, p: ParameterSet, n: int) -> RelationSpec:
    """The level-n identity connecting H(g) to H(g (n+ell+1)/(n+ell+2))."""
    flow = models.parameter_flow(model, p, n)
    if model is ModelId.HYDROGEN_RADIAL:
        D = hydrogen_D(p, n)
    else:
        D = rosen_morse_D(model, p, n)
    return RelationSpec(
        relation_id=f"{model.value}/coupling-shift",
        model=model, params=p, n=n, D=D,
        h_left=HamiltonianOp(model, p),
        h_right=HamiltonianOp(model, flow.shifted),
        epsilon=flow.epsilon, energy=flow.energy_at_shifted,
        Q=build_q(flow.q))


def hydrogen_rescaled_relation(p: ParameterSet, n: int) -> RelationSpec:
    """Composite identity: same coupling on both sides, mass rescaled instead."""
    alpha = hydrogen_alpha(p, n)
    heavier = ParameterSet(m=p.m / alpha**2, g=p.g, ell=p.ell)
    energy = models.energy_formula(ModelId.HYDROGEN_RADIAL, heavier, n)
    q_op = OpSum(((2.0, ScalingOp(alpha)),), label=f"2*S({alpha:g})")
    return RelationSpec(
        relation_id="hydrogen/mass-rescale",
        model=ModelId.HYDROGEN_RADIAL, params=p, n=n,
        D=hydrogen_D_tilde(p, n),
        h_left=HamiltonianOp(ModelId.HYDROGEN_RADIAL, p),
        h_right=HamiltonianOp(ModelId.HYDROGEN_RADIAL, heavier),
        epsilon=0.0, energy=energy, Q=q_op)
