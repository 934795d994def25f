"""Benchmark the compiled kernels against the pure-Python fallback.

Run from the repository root (or anywhere with qsu11 installed):

    python benchmarks/bench_kernels.py [--repeats N]

The parent process times every workload on the backend it imported
(numba-compiled unless QSU11_NO_NUMBA is set or numba is missing),
then re-runs itself in a subprocess with ``QSU11_NO_NUMBA=1`` and
prints a side-by-side table.  Workloads are warmed up once before
timing so numba's compilation cost is excluded; pass ``--repeats`` to
change the best-of count.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _build_workloads():
    from qsu11 import (
        ContourPath,
        IqPoint,
        QBase,
        QuadratureSpec,
        SpectralParam,
        gaussian_smooth,
        phi21_direct,
        qpoch_infinite,
        spherical_az,
        theta_pair,
    )
    from qsu11.grids import THETA_GRID

    base = QBase(0.5)
    q = base.q
    q2 = q * q

    def w_qpoch():
        for i in range(300):
            qpoch_infinite(complex(0.3 + 0.001 * i, 0.1), base, 1e-13)

    def w_phi21():
        for i in range(150):
            z = complex(-0.8 + 0.01 * i * 0.1, 0.05)
            phi21_direct(0.3, -0.45, 0.7, q, z, tol=1e-13)

    def w_theta():
        for re, im, k in THETA_GRID:
            theta_pair(complex(re, im), k, base, tol=1e-13)

    def w_spherical():
        for z in (0.9, 0.99, 0.999):
            zp = SpectralParam.from_z(z, base)
            for k in range(1, 7):
                spherical_az(base, zp, IqPoint.positive(k), tol=1e-12)

    def w_smooth():
        quad = QuadratureSpec.for_width(16.0, base, nodes_per_unit=16)
        path = ContourPath("vertical_line", 0.5)
        gaussian_smooth(base, IqPoint.positive(0), 2, 16.0, path, quad,
                        tol=1e-12)

    return [
        ("qpoch_infinite x300", w_qpoch),
        ("phi21_direct x150", w_phi21),
        ("theta_pair grid x100", w_theta),
        ("spherical case2 x18", w_spherical),
        ("gaussian_smooth n=16", w_smooth),
    ]


def run_inner(repeats: int) -> dict:
    from qsu11 import backend

    workloads = _build_workloads()
    for _, fn in workloads:  # warm-up: trigger any compilation
        fn()
    times = {}
    for name, fn in workloads:
        best = min(
            _timed(fn) for _ in range(repeats)
        )
        times[name] = best
    return {"backend": backend(), "times": times}


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3,
                    help="best-of repeat count per workload (default 3)")
    ap.add_argument("--inner", action="store_true",
                    help=argparse.SUPPRESS)  # subprocess mode: emit JSON
    args = ap.parse_args(argv)

    if args.inner:
        print(json.dumps(run_inner(args.repeats)))
        return 0

    here = run_inner(args.repeats)
    env = dict(os.environ)
    env["QSU11_NO_NUMBA"] = "1"
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--inner",
         "--repeats", str(args.repeats)],
        env=env, capture_output=True, text=True, check=True,
    )
    other = json.loads(proc.stdout.strip().splitlines()[-1])

    col_a = here["backend"]
    col_b = other["backend"]
    print(f"{'workload':<24} {col_a + ' [s]':>12} {col_b + ' [s]':>12} "
          f"{'speedup':>9}")
    print("-" * 60)
    for name, ta in here["times"].items():
        tb = other["times"][name]
        print(f"{name:<24} {ta:>12.6f} {tb:>12.6f} {tb / ta:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
