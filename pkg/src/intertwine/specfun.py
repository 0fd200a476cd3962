"""Hermite, associated Laguerre and general Jacobi polynomials.

Everything is evaluated by forward three-term recurrence in complex double
precision, with the normalization fixed by P0 = 1 and the conventional
degree-1 term for each family.  Parameters may be complex (the spherical
Rosen-Morse eigenfunctions use a conjugate pair, the hyperbolic ones a real
pair with argument |z| > 1).  Derivatives come from the exact shift rules

    H_n'        = 2 n H_{n-1}
    (L_n^a)'    = -L_{n-1}^{a+1}
    (P_n^{a,b})' = (n + a + b + 1)/2 * P_{n-1}^{a+1, b+1}

iterated for higher order, never from finite differences.

The classical Jacobi recurrence has removable poles when 2k + a + b - 2
vanishes for some step 2 <= k <= n.  The parameter families built by this
package keep a + b = -2(n + ell + 1) or a + b > -1, which puts every pole
outside the degree range; a call that does hit one returns NaN (a
non-finite flag) rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels


class PolyKind(Enum):
    HERMITE = "hermite"
    LAGUERRE_ASSOC = "laguerre"
    JACOBI_GENERAL = "jacobi"


@dataclass(frozen=True)
class PolyFamily:
    """One polynomial: family kind, degree and up to two complex parameters."""

    kind: PolyKind
    degree: int
    alpha: complex = 0.0
    beta: complex = 0.0

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")


def hermite(degree):
    return PolyFamily(PolyKind.HERMITE, degree)


def laguerre(degree, alpha):
    return PolyFamily(PolyKind.LAGUERRE_ASSOC, degree, alpha=complex(alpha))


def jacobi(degree, alpha, beta):
    return PolyFamily(PolyKind.JACOBI_GENERAL, degree, alpha=complex(alpha),
                      beta=complex(beta))


def _values(fam: PolyFamily, z):
    if fam.kind is PolyKind.HERMITE:
        return _kernels.hermite_values(fam.degree, z)
    if fam.kind is PolyKind.LAGUERRE_ASSOC:
        return _kernels.laguerre_values(fam.degree, fam.alpha, z)
    return _kernels.jacobi_values(fam.degree, fam.alpha, fam.beta, z)


def _derived_family(fam: PolyFamily):
    """Family of d/dz P together with the constant in front of it."""
    n = fam.degree
    if fam.kind is PolyKind.HERMITE:
        return PolyFamily(fam.kind, n - 1), 2.0 * n
    if fam.kind is PolyKind.LAGUERRE_ASSOC:
        return PolyFamily(fam.kind, n - 1, alpha=fam.alpha + 1), -1.0
    c = (n + fam.alpha + fam.beta + 1) / 2.0
    return PolyFamily(fam.kind, n - 1, alpha=fam.alpha + 1, beta=fam.beta + 1), c


def eval_poly(fam: PolyFamily, z):
    """P(z) for scalar or array z (complex). Overflow surfaces as non-finite."""
    scalar = np.isscalar(z)
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    out = _values(fam, arr)
    return out[0] if scalar else out


def eval_poly_deriv(fam: PolyFamily, z, order):
    """d^order/dz^order P(z) for order in {1, 2}, via the exact shift rules."""
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order}")
    scalar = np.isscalar(z)
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    out = poly_derivs(fam, arr, order)[order]
    return out[0] if scalar else out


def poly_derivs(fam: PolyFamily, z, max_order):
    """Rows k = P^(k)(z) for k = 0..max_order (zero rows beyond the degree)."""
    arr = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.zeros((max_order + 1, arr.shape[0]), dtype=complex)
    cur, const = fam, 1.0 + 0j
    for k in range(max_order + 1):
        out[k] = const * _values(cur, arr)
        if cur.degree == 0:
            break
        cur, c = _derived_family(cur)
        const = const * c
    return out
