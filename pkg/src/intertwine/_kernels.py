"""Hot numeric kernels with a numba fast path and a numpy fallback.

Two families live here:

* a self-contained symmetric-tridiagonal eigensolver (Sturm-count bisection
  for eigenvalues, inverse iteration with a partially pivoted tridiagonal
  solve for eigenvectors) -- deliberately free of any external
  linear-algebra routine so the finite-difference cross-check stays
  independent and auditable;
* forward three-term recurrences for Hermite, associated Laguerre and
  Jacobi polynomials over arrays of complex arguments.

The numba path compiles the scalar-loop versions below; the numpy path
vectorizes across bisection targets / evaluation points instead.  Both are
exercised by ``benchmarks/bench_backends.py``.
"""

import numpy as np

from ._backend import USE_NUMBA

_PIVMIN_FLOOR = 1e-290


# ---------------------------------------------------------------------------
# scalar-loop kernels (compiled under numba, also runnable as plain python)
# ---------------------------------------------------------------------------

def _sturm_count_scalar(d, e2, lam, pivmin):
    # number of eigenvalues of tridiag(d, e) strictly below lam,
    # via the sign count of the LDL^T pivots
    n = d.shape[0]
    count = 0
    q = d[0] - lam
    if q < 0.0:
        count += 1
    for i in range(1, n):
        if abs(q) < pivmin:
            q = -pivmin
        q = d[i] - lam - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


def _bisect_eigs_scalar(d, e2, k, pivmin):
    n = d.shape[0]
    lo = d[0]
    hi = d[0]
    for i in range(n):
        r = 0.0
        if i > 0:
            r += np.sqrt(e2[i - 1])
        if i < n - 1:
            r += np.sqrt(e2[i])
        if d[i] - r < lo:
            lo = d[i] - r
        if d[i] + r > hi:
            hi = d[i] + r
    out = np.empty(k)
    prev = lo
    for j in range(k):
        a = prev
        b = hi
        for _ in range(130):
            mid = 0.5 * (a + b)
            if b - a <= 1e-15 * (abs(a) + abs(b)) + 1e-300:
                break
            if _sturm_count_scalar(d, e2, mid, pivmin) >= j + 1:
                b = mid
            else:
                a = mid
        out[j] = 0.5 * (a + b)
        prev = a  # eigenvalue j+1 cannot lie below this bracket
    return out


def _pivot_solve_scalar(d, e, lam, rhs, pivmin):
    # solve (tridiag(d, e) - lam*I) w = rhs with partial pivoting;
    # fill-in creates a second superdiagonal
    n = d.shape[0]
    u0 = np.empty(n)
    u1 = np.zeros(n)
    u2 = np.zeros(n)
    x = rhs.copy()
    p = d[0] - lam
    q = e[0] if n > 1 else 0.0
    r = 0.0
    for i in range(n - 1):
        a = e[i]
        bb = d[i + 1] - lam
        cc = e[i + 1] if i + 1 < n - 1 else 0.0
        if abs(a) > abs(p):
            p, a = a, p
            q, bb = bb, q
            r, cc = cc, r
            t = x[i]
            x[i] = x[i + 1]
            x[i + 1] = t
        if abs(p) < pivmin:
            p = pivmin
        m = a / p
        u0[i] = p
        u1[i] = q
        u2[i] = r
        x[i + 1] -= m * x[i]
        p = bb - m * q
        q = cc - m * r
        r = 0.0
    if abs(p) < pivmin:
        p = pivmin
    u0[n - 1] = p
    w = np.empty(n)
    w[n - 1] = x[n - 1] / u0[n - 1]
    if n > 1:
        w[n - 2] = (x[n - 2] - u1[n - 2] * w[n - 1]) / u0[n - 2]
    for i in range(n - 3, -1, -1):
        w[i] = (x[i] - u1[i] * w[i + 1] - u2[i] * w[i + 2]) / u0[i]
    return w


def _hermite_scalar(n, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        zi = z[i]
        pm = 1.0 + 0j
        if n == 0:
            out[i] = pm
            continue
        pc = 2.0 * zi
        for kk in range(1, n):
            pn = 2.0 * zi * pc - 2.0 * kk * pm
            pm = pc
            pc = pn
        out[i] = pc
    return out


def _laguerre_scalar(n, alpha, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        zi = z[i]
        pm = 1.0 + 0j
        if n == 0:
            out[i] = pm
            continue
        pc = 1.0 + alpha - zi
        for kk in range(1, n):
            pn = ((2.0 * kk + 1.0 + alpha - zi) * pc - (kk + alpha) * pm) / (kk + 1.0)
            pm = pc
            pc = pn
        out[i] = pc
    return out


def _jacobi_scalar(n, alpha, beta, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    apb = alpha + beta
    for i in range(z.shape[0]):
        zi = z[i]
        pm = 1.0 + 0j
        if n == 0:
            out[i] = pm
            continue
        pc = 0.5 * (alpha - beta) + 0.5 * (apb + 2.0) * zi
        for kk in range(2, n + 1):
            c1 = 2.0 * kk * (kk + apb) * (2.0 * kk + apb - 2.0)
            if c1 == 0.0:
                # removable pole of the classical recurrence (parameters sum
                # to a nonpositive even integer inside the degree range);
                # flag as non-finite like the vectorized path does
                pc = complex(np.nan, np.nan)
                break
            c2 = (2.0 * kk + apb - 1.0) * (alpha * alpha - beta * beta)
            c3 = (2.0 * kk + apb - 2.0) * (2.0 * kk + apb - 1.0) * (2.0 * kk + apb)
            c4 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * (2.0 * kk + apb)
            pn = ((c2 + c3 * zi) * pc - c4 * pm) / c1
            pm = pc
            pc = pn
        out[i] = pc
    return out


if USE_NUMBA:
    from numba import njit

    _sturm_count_scalar = njit(cache=True)(_sturm_count_scalar)
    _bisect_eigs_scalar = njit(cache=True)(_bisect_eigs_scalar)
    _pivot_solve_scalar = njit(cache=True)(_pivot_solve_scalar)
    _hermite_scalar = njit(cache=True)(_hermite_scalar)
    _laguerre_scalar = njit(cache=True)(_laguerre_scalar)
    _jacobi_scalar = njit(cache=True)(_jacobi_scalar)


# ---------------------------------------------------------------------------
# numpy fallback: vectorize across bisection targets / evaluation points
# ---------------------------------------------------------------------------

def _sturm_counts_np(d, e2, lams, pivmin):
    counts = np.zeros(lams.shape[0], dtype=np.int64)
    q = d[0] - lams
    counts += q < 0.0
    for i in range(1, d.shape[0]):
        q = np.where(np.abs(q) < pivmin, -pivmin, q)
        q = d[i] - lams - e2[i - 1] / q
        counts += q < 0.0
    return counts


def _bisect_eigs_np(d, e2, k, pivmin, splits=7):
    # multi-point bisection: each sweep costs one O(n) python loop whatever
    # the batch width, so subdividing every bracket (splits+1)-fold per
    # sweep cuts the sweep count by log2(splits+1)
    e_abs = np.sqrt(e2)
    radius = np.zeros_like(d)
    radius[:-1] += e_abs
    radius[1:] += e_abs
    lo = np.full(k, np.min(d - radius))
    hi = np.full(k, np.max(d + radius))
    targets = np.arange(1, k + 1)
    frac = np.arange(1, splits + 1) / (splits + 1.0)
    rows = np.arange(k)
    for _ in range(60):
        width = hi - lo
        if np.all(width <= 1e-15 * (np.abs(lo) + np.abs(hi)) + 1e-300):
            break
        cand = lo[:, None] + width[:, None] * frac[None, :]
        counts = _sturm_counts_np(d, e2, cand.ravel(), pivmin).reshape(k, splits)
        above = counts >= targets[:, None]
        any_above = above.any(axis=1)
        first = np.where(any_above, above.argmax(axis=1), splits)
        hi = np.where(any_above, cand[rows, np.minimum(first, splits - 1)], hi)
        lo = np.where(first > 0, cand[rows, np.maximum(first - 1, 0)], lo)
    return 0.5 * (lo + hi)


def _hermite_np(n, z):
    pm = np.ones_like(z)
    if n == 0:
        return pm
    pc = 2.0 * z
    for kk in range(1, n):
        pm, pc = pc, 2.0 * z * pc - 2.0 * kk * pm
    return pc


def _laguerre_np(n, alpha, z):
    pm = np.ones_like(z)
    if n == 0:
        return pm
    pc = 1.0 + alpha - z
    for kk in range(1, n):
        pm, pc = pc, ((2.0 * kk + 1.0 + alpha - z) * pc - (kk + alpha) * pm) / (kk + 1.0)
    return pc


def _jacobi_np(n, alpha, beta, z):
    pm = np.ones_like(z)
    if n == 0:
        return pm
    apb = alpha + beta
    pc = 0.5 * (alpha - beta) + 0.5 * (apb + 2.0) * z
    # a removable pole of the recurrence (c1 == 0) propagates as NaN
    with np.errstate(invalid="ignore", divide="ignore"):
        for kk in range(2, n + 1):
            c1 = 2.0 * kk * (kk + apb) * (2.0 * kk + apb - 2.0)
            c2 = (2.0 * kk + apb - 1.0) * (alpha * alpha - beta * beta)
            c3 = (2.0 * kk + apb - 2.0) * (2.0 * kk + apb - 1.0) * (2.0 * kk + apb)
            c4 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * (2.0 * kk + apb)
            pm, pc = pc, ((c2 + c3 * z) * pc - c4 * pm) / c1
    return pc


# ---------------------------------------------------------------------------
# public entry points (backend dispatch)
# ---------------------------------------------------------------------------

def _pivmin(e2):
    return max(_PIVMIN_FLOOR, float(np.max(e2)) * 2.3e-308) if e2.size else _PIVMIN_FLOOR


def lowest_eigenvalues(diag, offdiag, k):
    """Lowest k eigenvalues (ascending) of the symmetric tridiagonal matrix."""
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e2 = np.ascontiguousarray(offdiag, dtype=np.float64) ** 2
    if not 1 <= k <= d.shape[0]:
        raise ValueError(f"k={k} outside 1..{d.shape[0]}")
    pm = _pivmin(e2)
    if USE_NUMBA:
        return _bisect_eigs_scalar(d, e2, k, pm)
    return _bisect_eigs_np(d, e2, k, pm)


def sturm_count(diag, offdiag, lam):
    """Number of eigenvalues strictly below lam."""
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e2 = np.ascontiguousarray(offdiag, dtype=np.float64) ** 2
    pm = _pivmin(e2)
    if USE_NUMBA:
        return int(_sturm_count_scalar(d, e2, float(lam), pm))
    return int(_sturm_counts_np(d, e2, np.array([float(lam)]), pm)[0])


def eigenvector(diag, offdiag, lam, start, iters=3):
    """Inverse-iteration eigenvector for the (accurate) eigenvalue lam.

    ``start`` seeds the iteration; pass a deterministic random vector for
    reproducible signs.  The result is 2-norm normalized.
    """
    d = np.ascontiguousarray(diag, dtype=np.float64)
    e = np.ascontiguousarray(offdiag, dtype=np.float64)
    pm = _pivmin(e**2)
    v = np.asarray(start, dtype=np.float64)
    v = v / np.linalg.norm(v)
    for _ in range(iters):
        v = _pivot_solve_scalar(d, e, float(lam), v, pm)
        v = v / np.linalg.norm(v)
    return v


def hermite_values(n, z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    return _hermite_scalar(n, z) if USE_NUMBA else _hermite_np(n, z)


def laguerre_values(n, alpha, z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    if USE_NUMBA:
        return _laguerre_scalar(n, complex(alpha), z)
    return _laguerre_np(n, complex(alpha), z)


def jacobi_values(n, alpha, beta, z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    if USE_NUMBA:
        return _jacobi_scalar(n, complex(alpha), complex(beta), z)
    return _jacobi_np(n, complex(alpha), complex(beta), z)
