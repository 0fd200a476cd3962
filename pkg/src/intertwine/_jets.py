"""Truncated Taylor-jet arithmetic.

A *jet* of order K at points ``x`` is an array of shape ``(K+1, n)`` whose
row ``k`` holds the scaled derivative ``f^(k)(x) / k!`` (i.e. the Taylor
coefficients of f about each point).  All closed-form eigenfunctions and
operator coefficients in this package are assembled from elementary jets,
so every derivative the verification harness consumes is analytic --
nothing is ever finite-differenced on the library side.

Shapes: ``x`` is a 1-D float array; jets are complex unless noted.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InsufficientDerivativeOrder

_FACT = [math.factorial(k) for k in range(64)]


def _fact(k):
    return _FACT[k] if k < 64 else math.factorial(k)


# ---------------------------------------------------------------------------
# raw jet arithmetic on (K+1, n) arrays of Taylor coefficients
# ---------------------------------------------------------------------------

def jet_const(c, x, order):
    out = np.zeros((order + 1, len(x)), dtype=complex)
    out[0] = c
    return out


def jet_var(x, order):
    """Jet of the identity function f(x) = x."""
    out = np.zeros((order + 1, len(x)), dtype=complex)
    out[0] = x
    if order >= 1:
        out[1] = 1.0
    return out


def jmul(a, b):
    """Truncated Cauchy product of two jets of equal order."""
    order = a.shape[0] - 1
    out = np.zeros(a.shape, dtype=np.result_type(a.dtype, b.dtype))
    for k in range(order + 1):
        for i in range(k + 1):
            out[k] += a[i] * b[k - i]
    return out


def jdiv(a, b):
    """Jet of a/b; requires b[0] nonzero everywhere."""
    order = a.shape[0] - 1
    out = np.empty(a.shape, dtype=np.result_type(a.dtype, b.dtype))
    out[0] = a[0] / b[0]
    for k in range(1, order + 1):
        acc = a[k].copy()
        for i in range(1, k + 1):
            acc -= b[i] * out[k - i]
        out[k] = acc / b[0]
    return out


def jpow(a, p):
    """Jet of a**p for real or complex exponent p; requires a[0] != 0.

    Uses the standard series recurrence for w = a**p derived from
    a * w' = p * a' * w.
    """
    order = a.shape[0] - 1
    out = np.empty_like(a)
    out[0] = a[0] ** p
    for k in range(1, order + 1):
        acc = np.zeros_like(out[0])
        for j in range(1, k + 1):
            acc += (j * (p + 1) - k) * a[j] * out[k - j]
        out[k] = acc / (k * a[0])
    return out


def jexp(a):
    """Jet of exp(a), via w' = a' w."""
    order = a.shape[0] - 1
    out = np.empty_like(a)
    out[0] = np.exp(a[0])
    for k in range(1, order + 1):
        acc = np.zeros_like(out[0])
        for j in range(1, k + 1):
            acc += j * a[j] * out[k - j]
        out[k] = acc / k
    return out


def jet_deriv(a):
    """Jet of f' (one order shorter than the jet of f)."""
    order = a.shape[0] - 1
    out = np.empty((order, a.shape[1]), dtype=a.dtype)
    for k in range(order):
        out[k] = (k + 1) * a[k + 1]
    return out


def compose_poly(poly_derivs, u):
    """Jet of P(u(x)) given derivative values of P at u0 = u[0].

    ``poly_derivs`` rows j hold P^(j)(u0) (unscaled derivatives), j = 0..K.
    Composition is plain truncated-series substitution (Horner in jet
    arithmetic), exact because P is a polynomial.
    """
    order = u.shape[0] - 1
    v = u.copy()
    v[0] = 0.0
    out = jet_const(poly_derivs[order] / _fact(order), np.empty(u.shape[1]), order)
    for j in range(order - 1, -1, -1):
        out = jmul(out, v)
        out[0] += poly_derivs[j] / _fact(j)
    return out


# elementary jets built directly at x (derivatives known in closed form)

def jet_sin(x, order):
    cyc = [np.sin(x), np.cos(x), -np.sin(x), -np.cos(x)]
    return np.array([cyc[k % 4] / _fact(k) for k in range(order + 1)], dtype=complex)


def jet_cos(x, order):
    cyc = [np.cos(x), -np.sin(x), -np.cos(x), np.sin(x)]
    return np.array([cyc[k % 4] / _fact(k) for k in range(order + 1)], dtype=complex)


def jet_sinh(x, order):
    cyc = [np.sinh(x), np.cosh(x)]
    return np.array([cyc[k % 2] / _fact(k) for k in range(order + 1)], dtype=complex)


def jet_cosh(x, order):
    cyc = [np.cosh(x), np.sinh(x)]
    return np.array([cyc[k % 2] / _fact(k) for k in range(order + 1)], dtype=complex)


def jet_exp_linear(c, x, order):
    """Jet of exp(c*x)."""
    base = np.exp(c * x)
    return np.array([base * c**k / _fact(k) for k in range(order + 1)], dtype=complex)


def jet_coth(x, order):
    """Jet of coth(x) for x > 0, overflow-safe at large x.

    Built from the closed ODE c' = 1 - c^2 rather than cosh/sinh, which
    would overflow beyond x ~ 710.
    """
    out = np.zeros((order + 1, len(x)), dtype=complex)
    out[0] = 1.0 / np.tanh(x)
    for k in range(order):
        acc = np.zeros_like(out[0])
        for i in range(k + 1):
            acc += out[i] * out[k - i]
        out[k + 1] = ((1.0 if k == 0 else 0.0) - acc) / (k + 1)
    return out


def jet_log_sinh(x, order):
    """Jet of log(sinh(x)) for x > 0 (value via x + log1p(-e^{-2x}) - log 2)."""
    out = np.zeros((order + 1, len(x)), dtype=complex)
    out[0] = x + np.log1p(-np.exp(-2.0 * x)) - math.log(2.0)
    if order >= 1:
        c = jet_coth(x, order - 1)
        for k in range(1, order + 1):
            out[k] = c[k - 1] / k
    return out


def jet_pow_var(p, x, order):
    """Jet of x**p for real exponent p; requires x > 0 when p is not an integer."""
    return jpow(jet_var(x, order), p)


def derivs_from_jet(a):
    """Convert Taylor coefficients to plain derivative rows f^(k)(x)."""
    return np.array([a[k] * _fact(k) for k in range(a.shape[0])])


def jet_from_derivs(d):
    return np.array([d[k] / _fact(k) for k in range(d.shape[0])])


# ---------------------------------------------------------------------------
# Coef: a lazily evaluated coefficient function of x with exact jets
# ---------------------------------------------------------------------------

class Coef:
    """A scalar function of x that can produce its own Taylor jet.

    Operator coefficients (the a, b of first-order operators and the terms
    of potentials) are Coefs, which keeps every operator application fully
    analytic.  Supports +, -, *, / and scalar mixing.
    """

    __slots__ = ("_fn", "label")

    def __init__(self, fn, label=""):
        self._fn = fn
        self.label = label

    def taylor(self, x, order):
        return self._fn(x, order)

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return self.taylor(x, 0)[0]

    @staticmethod
    def _lift(other):
        if isinstance(other, Coef):
            return other
        return Coef(lambda x, K, c=complex(other): jet_const(c, x, K), label=repr(other))

    def __add__(self, other):
        o = Coef._lift(other)
        return Coef(lambda x, K: self.taylor(x, K) + o.taylor(x, K),
                    label=f"({self.label}+{o.label})")

    __radd__ = __add__

    def __sub__(self, other):
        o = Coef._lift(other)
        return Coef(lambda x, K: self.taylor(x, K) - o.taylor(x, K),
                    label=f"({self.label}-{o.label})")

    def __rsub__(self, other):
        o = Coef._lift(other)
        return Coef(lambda x, K: o.taylor(x, K) - self.taylor(x, K),
                    label=f"({o.label}-{self.label})")

    def __mul__(self, other):
        if isinstance(other, Coef):
            return Coef(lambda x, K: jmul(self.taylor(x, K), other.taylor(x, K)),
                        label=f"({self.label}*{other.label})")
        c = complex(other)
        return Coef(lambda x, K: c * self.taylor(x, K), label=f"({other!r}*{self.label})")

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Coef._lift(other)
        return Coef(lambda x, K: jdiv(self.taylor(x, K), o.taylor(x, K)),
                    label=f"({self.label}/{o.label})")

    def __neg__(self):
        return Coef(lambda x, K: -self.taylor(x, K), label=f"(-{self.label})")

    def pow(self, p):
        return Coef(lambda x, K: jpow(self.taylor(x, K), p), label=f"({self.label}^{p})")


COEF_ONE = Coef(lambda x, K: jet_const(1.0, x, K), label="1")
COEF_X = Coef(jet_var, label="x")
COEF_SIN = Coef(jet_sin, label="sin")
COEF_COS = Coef(jet_cos, label="cos")
COEF_SINH = Coef(jet_sinh, label="sinh")
COEF_COSH = Coef(jet_cosh, label="cosh")
COEF_COT = Coef(lambda x, K: jdiv(jet_cos(x, K), jet_sin(x, K)), label="cot")
COEF_COTH = Coef(jet_coth, label="coth")


def _jet_csch2(x, order):
    c = jet_coth(x, order)
    out = jmul(c, c)
    out[0] -= 1.0
    return out


COEF_CSCH2 = Coef(_jet_csch2, label="csch^2")


def coef_const(c):
    return Coef._lift(c)


def coef_exp_linear(c):
    return Coef(lambda x, K: jet_exp_linear(c, x, K), label=f"exp({c}*x)")


def coef_pow_var(p):
    return Coef(lambda x, K: jet_pow_var(p, x, K), label=f"x^{p}")


# ---------------------------------------------------------------------------
# Evaluable: a function of x with analytic derivatives up to max_order
# ---------------------------------------------------------------------------

class Evaluable:
    """A function with on-demand analytic jets.

    ``max_order`` is the highest derivative order the function can supply
    (None = unlimited, the case for all closed forms).  Operator
    applications reduce the available order and raise
    InsufficientDerivativeOrder when a composition would exceed it.
    """

    __slots__ = ("_fn", "max_order", "label")

    def __init__(self, fn, max_order=None, label=""):
        self._fn = fn
        self.max_order = max_order
        self.label = label

    def taylor(self, x, order):
        if self.max_order is not None and order > self.max_order:
            raise InsufficientDerivativeOrder(
                f"{self.label or 'function'} supplies derivatives up to order "
                f"{self.max_order}, order {order} requested")
        return self._fn(np.asarray(x, dtype=float), order)

    def derivs(self, x, order):
        """Rows k = f^(k)(x) for k = 0..order."""
        return derivs_from_jet(self.taylor(x, order))

    def __call__(self, x):
        scalar = np.isscalar(x)
        out = self.taylor(np.atleast_1d(np.asarray(x, dtype=float)), 0)[0]
        return out[0] if scalar else out

    def __add__(self, other):
        if not isinstance(other, Evaluable):
            return NotImplemented
        mo = _min_order(self.max_order, other.max_order)
        return Evaluable(lambda x, K: self.taylor(x, K) + other.taylor(x, K),
                         max_order=mo, label=f"({self.label}+{other.label})")

    def __sub__(self, other):
        if not isinstance(other, Evaluable):
            return NotImplemented
        mo = _min_order(self.max_order, other.max_order)
        return Evaluable(lambda x, K: self.taylor(x, K) - other.taylor(x, K),
                         max_order=mo, label=f"({self.label}-{other.label})")

    def __mul__(self, c):
        c = complex(c)
        return Evaluable(lambda x, K: c * self.taylor(x, K),
                         max_order=self.max_order, label=f"({c}*{self.label})")

    __rmul__ = __mul__


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def evaluable_from_coef(coef, max_order=None, label=""):
    return Evaluable(lambda x, K: coef.taylor(x, K), max_order=max_order,
                     label=label or coef.label)


def linear_combination(coeffs, members):
    """Evaluable for sum_i coeffs[i] * members[i]."""
    coeffs = [complex(c) for c in coeffs]
    mo = None
    for m in members:
        mo = _min_order(mo, m.max_order)

    def fn(x, order):
        out = coeffs[0] * members[0].taylor(x, order)
        for c, m in zip(coeffs[1:], members[1:]):
            out = out + c * m.taylor(x, order)
        return out

    return Evaluable(fn, max_order=mo, label="lincomb")
