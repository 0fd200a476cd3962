#!/usr/bin/env python3
"""Timing comparison of the numba and numpy kernel backends.

Measures the hot kernels on representative workloads:

* Sturm-bisection eigenvalues of the discretized hyperbolic well
  (the dominant cost of the finite-difference cross-check),
* inverse-iteration eigenvectors,
* three-term polynomial recurrences over a large complex grid.

Run with no arguments to benchmark both backends (each in a fresh
subprocess, since the backend is fixed at import time):

    python benchmarks/bench_backends.py
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def _measure(repeat=3):
    from intertwine import _kernels
    from intertwine._backend import BACKEND
    from intertwine.models import ModelId, ParameterSet
    from intertwine.oracle import GridConfig, fd_eigensolve, _build_tridiag, oracle_bounds

    model = ModelId.ROSEN_MORSE_HYPERBOLIC
    p = ParameterSet(g=16.0, ell=0.0)
    bounds = oracle_bounds(model, p, 3)
    x, h, diag, off = _build_tridiag(model, p, bounds, 4096)

    results = {"backend": BACKEND, "n_grid": len(diag)}

    # warm-up triggers JIT compilation on the numba path
    _kernels.lowest_eigenvalues(diag, off, 2)
    t0 = time.perf_counter()
    for _ in range(repeat):
        eigs = _kernels.lowest_eigenvalues(diag, off, 6)
    results["bisect_eigenvalues_s"] = (time.perf_counter() - t0) / repeat

    rng = np.random.default_rng(0)
    start = rng.standard_normal(len(diag))
    _kernels.eigenvector(diag, off, eigs[0], start)
    t0 = time.perf_counter()
    for _ in range(repeat):
        for lam in eigs:
            _kernels.eigenvector(diag, off, lam, start)
    results["inverse_iteration_s"] = (time.perf_counter() - t0) / repeat

    z = rng.standard_normal(200_000) + 1j * rng.standard_normal(200_000)
    _kernels.jacobi_values(10, -12 + 2j, -12 - 2j, z[:10])
    t0 = time.perf_counter()
    for _ in range(repeat):
        _kernels.jacobi_values(10, -12 + 2j, -12 - 2j, z)
    results["jacobi_recurrence_s"] = (time.perf_counter() - t0) / repeat

    t0 = time.perf_counter()
    for _ in range(repeat):
        fd_eigensolve(model, p, 3, GridConfig(n=1024, levels=2))
    results["fd_eigensolve_s"] = (time.perf_counter() - t0) / repeat
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--single", action="store_true",
                        help="measure the currently selected backend only")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if args.single:
        print(json.dumps(_measure(args.repeat)))
        return

    rows = []
    for backend in ("numba", "numpy"):
        env = dict(os.environ, INTERTWINE_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, __file__, "--single", "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True)
        rows.append(json.loads(out.stdout.strip().splitlines()[-1]))

    keys = [k for k in rows[0] if k.endswith("_s")]
    width = max(len(k) for k in keys) + 2
    print(f"{'kernel':<{width}} {'numba':>12} {'numpy':>12} {'speedup':>9}")
    for key in keys:
        a, b = rows[0][key], rows[1][key]
        print(f"{key[:-2]:<{width}} {a:>11.4f}s {b:>11.4f}s {b / a:>8.1f}x")
    print(f"\n(grid {rows[0]['n_grid']} points; averaged over {args.repeat} runs;"
          " both backends produce identical numbers)")


if __name__ == "__main__":
    main()
