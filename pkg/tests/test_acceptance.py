"""Acceptance gate: one test per advertised guarantee of the library.

Each test exercises exactly one top-level claim at its stated tolerance
and prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of a failing run) before asserting, so a red run names
the violated guarantee directly.
"""

import cmath
import math

from qsu11 import (
    ContourPath,
    IqPoint,
    QBase,
    QuadratureSpec,
    SpectralParam,
    approx_identity_gap,
    coamen_coeff,
    gaussian_smooth,
    limit_sweep,
    path_independence,
    phi21_continued,
    phi21_direct,
    pochhammer_ratio,
    pochhammer_ratio_naive,
    qpoch_infinite,
    spherical_az,
    symbol_clip_abs,
    theta_pair,
    uniform_sup_gap,
)
from qsu11.grids import OVERLAP_GRID, THETA_BASES, THETA_GRID

B = QBase(0.5)
ST = 1e-12     # series tolerance for the underlying evaluations
MT = 200       # series term budget


def _verdict(name: str, ok: bool, detail: str) -> None:
    print(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def _spherical(z: complex, sign: int, k: int) -> complex:
    zp = SpectralParam.from_z(z, B)
    return spherical_az(B, zp, IqPoint(sign, k), tol=ST, max_terms=MT).value


def test_criterion_01_theta_product_identity():
    """Residual of the theta shift identity on the published grid."""
    worst = 0.0
    for b in THETA_BASES:
        for re, im, k in THETA_GRID:
            r = theta_pair(complex(re, im), k, b, tol=ST).residual
            worst = max(worst, r)
    _verdict("criterion_01_theta", worst < 1e-10,
             f"max residual {worst:.3e} over "
             f"{len(THETA_BASES) * len(THETA_GRID)} cells, threshold 1e-10")


def test_criterion_02_raw_vs_simplified_coefficients():
    """The raw product form and the simplified form agree cell by cell."""
    lams = (1.0 + 0.0j, cmath.exp(0.4j), complex(math.sqrt(B.q)))
    worst = 0.0
    for lam in lams:
        for m in range(-3, 4):
            for j in range(0, 11):
                p1 = IqPoint.positive(-j)
                raw = coamen_coeff(B, m, lam, p1, form="raw",
                                   tol=ST, max_terms=MT).value
                simp = coamen_coeff(B, m, lam, p1, form="simplified",
                                    tol=ST, max_terms=MT).value
                dev = abs(raw - simp) / max(abs(raw), abs(simp))
                worst = max(worst, dev)
    _verdict("criterion_02_rawsimp", worst < 1e-9,
             f"max relative deviation {worst:.3e} over 231 cells, "
             "threshold 1e-9")


def test_criterion_03_normalization_constant():
    """c_q satisfies its defining product normalization at each base."""
    worst = 0.0
    for b in THETA_BASES:
        qb = QBase(b)
        b2 = b * b
        prod = (qb.cq ** 2 * b2
                * qpoch_infinite(b2, b2, ST).value.real ** 2
                * qpoch_infinite(-1.0, b2, ST).value.real
                * qpoch_infinite(-b2, b2, ST).value.real)
        worst = max(worst, abs(prod - 1.0))
    _verdict("criterion_03_cq_norm", worst < 1e-12,
             f"max |product - 1| = {worst:.3e} at bases {THETA_BASES}, "
             "threshold 1e-12")


def test_criterion_04_direct_vs_continued_overlap():
    """Direct summation and two-term continuation agree on the overlap."""
    q = B.q
    q2 = q * q
    worst = 0.0
    for theta, kap in OVERLAP_GRID:
        lam = cmath.exp(1j * theta)
        direct = phi21_direct(q / lam, lam * q, q2, q2, -q2 / kap,
                              tol=ST, max_terms=MT).value
        cont = phi21_continued(lam, complex(kap), B,
                               tol=ST, max_terms=MT).value
        worst = max(worst, abs(direct - cont) / abs(direct))
    _verdict("criterion_04_overlap", worst < 1e-8,
             f"max relative deviation {worst:.3e} over "
             f"{len(OVERLAP_GRID)} points, threshold 1e-8")


def test_criterion_05_coamenability_limits():
    """Coefficients tend to 1 deep in the lattice; averages contract."""
    ok = True
    details = []
    for lam in (1.0 + 0.0j, cmath.exp(0.4j)):
        for m in range(-2, 3):
            rep = limit_sweep("coamen", B,
                              {"m": m, "lam": lam, "tol": ST,
                               "max_terms": MT},
                              (2, 4, 8, 16), 1.0, 1e-6)
            devs = [r.deviation for r in rep.rows]
            good = (all(b < a for a, b in zip(devs, devs[1:]))
                    and devs[-1] < 1e-6)
            ok = ok and good
            if not good:
                details.append(f"coamen m={m} lam={lam}: {devs}")
    for m in (0, 1, 2):
        rep = limit_sweep("averaged_coamen", B,
                          {"m": m, "lam": 1.0 + 0.0j, "tol": ST,
                           "max_terms": MT},
                          ((5, 10), (10, 20), (20, 40)), 1.0, 0.15)
        devs = [r.deviation for r in rep.rows]
        good = all(b < a for a, b in zip(devs, devs[1:])) and devs[-1] < 0.15
        ok = ok and good
        if not good:
            details.append(f"averaged m={m}: {devs}")
    _verdict("criterion_05_coamen_limits", ok,
             "; ".join(details) if details
             else "10 coefficient chains final < 1e-6, "
             "3 averaged chains final < 0.15, all decreasing")


def test_criterion_06_spherical_limits_and_uniform_gap():
    """All three coefficient families tend to 1, uniformly in the point."""
    ok = True
    details = []
    cases = (("spherical_case1", range(-6, 1)),
             ("spherical_case2", range(1, 7)),
             ("spherical_case3", range(1, 7)))
    for family, ks in cases:
        for k in ks:
            rep = limit_sweep(family, B,
                              {"k": k, "tol": ST, "max_terms": MT},
                              (0.9, 0.99, 0.999), 1.0, 5e-3)
            devs = [r.deviation for r in rep.rows]
            good = (all(b < a for a, b in zip(devs, devs[1:]))
                    and devs[-1] < 5e-3)
            ok = ok and good
            if not good:
                details.append(f"{family} k={k}: {devs}")
    g_near = uniform_sup_gap(B, SpectralParam.from_z(0.999, B), 24, tol=ST)
    g_end = uniform_sup_gap(B, SpectralParam.from_z(1.0, B), 24, tol=ST)
    ok = ok and g_near < 5e-3 and g_end == 0.0
    _verdict("criterion_06_spherical", ok,
             "; ".join(details) if details
             else f"19 chains decreasing to < 5e-3; sup gap {g_near:.3e} "
             f"at z=0.999, exactly {g_end} at z=1")


def test_criterion_07_stable_pochhammer_ratio():
    """The grouped ratio is small near the endpoint and matches the
    naive product away from it."""
    q = B.q
    ok = True
    details = []
    for k in (1, 2, 3, 10, math.inf):
        chain = [abs(pochhammer_ratio(B, q * (1.0 + 10.0 ** -j), k))
                 for j in (1, 2, 3)]
        # the j=3 entry is the stated modulus check at lam = q(1+1e-3)
        good = (all(b < a for a, b in zip(chain, chain[1:]))
                and chain[-1] < 1e-2)
        ok = ok and good
        if not good:
            details.append(f"k={k}: chain {chain}")
    lam = q + 0.1
    a = pochhammer_ratio(B, lam, 4)
    b = pochhammer_ratio_naive(B, lam, 4)
    agree = abs(a - b) / max(abs(a), abs(b))
    ok = ok and agree < 1e-12
    if agree >= 1e-12:
        details.append(f"naive disagreement {agree:.3e}")
    _verdict("criterion_07_ratio", ok,
             "; ".join(details) if details
             else f"|ratio| < 1e-2 at lam=q(1+1e-3) for k in "
             f"{{1,2,3,10,inf}}, chains decreasing, "
             f"naive agreement {agree:.3e} < 1e-12")


def test_criterion_08_gaussian_smoothing():
    """Smoothed values concentrate at the kernel center with unit mass,
    independently of the contour."""
    ok = True
    details = []
    for k in (2, 5):
        center = 1.0 - 1.0 / k
        for p0k in (0, -1, -2, -4):
            p0 = IqPoint.positive(p0k)
            target = _spherical(complex(center, 0.0), 1, p0k)
            devs = []
            for n in (4.0, 16.0, 64.0, 256.0):
                quad = QuadratureSpec.for_width(n, B)
                path = ContourPath("vertical_line", center)
                sm = gaussian_smooth(B, p0, k, n, path, quad, tol=ST)
                devs.append(abs(sm.value - target))
                if abs(sm.mass - 1.0) >= 1e-8:
                    ok = False
                    details.append(f"mass off by {abs(sm.mass - 1.0):.3e} "
                                   f"at k={k} p0k={p0k} n={n}")
            good = (all(b <= a + 1e-13 for a, b in zip(devs, devs[1:]))
                    and devs[-1] < 1e-2)
            ok = ok and good
            if not good:
                details.append(f"k={k} p0k={p0k}: {devs}")
    quad = QuadratureSpec.for_width(16.0, B)
    pa = ContourPath("vertical_line", 0.5)
    pb = ContourPath("perturbed", 0.5, wiggle_amplitude=0.05)
    d = path_independence(B, IqPoint.positive(0), 2, 16.0, pa, pb, quad,
                          tol=ST)
    ok = ok and d < 1e-6
    if d >= 1e-6:
        details.append(f"path dependence {d:.3e}")
    _verdict("criterion_08_smoothing", ok,
             "; ".join(details) if details
             else f"8 chains non-increasing to < 1e-2, unit mass within "
             f"1e-8, path independence {d:.3e} < 1e-6")


def test_criterion_09_weighted_approximate_identity():
    """The decaying-symbol gap shrinks toward the endpoint."""
    sym = symbol_clip_abs()
    gaps = {z: approx_identity_gap(B, SpectralParam.from_z(z, B), sym, 12,
                                   tol=ST).gap
            for z in (0.9, 0.99, 0.999)}
    ok = gaps[0.99] < gaps[0.9] and gaps[0.999] < 0.02
    _verdict("criterion_09_approxid", ok,
             f"gaps {gaps[0.9]:.3e} > {gaps[0.99]:.3e}, "
             f"final {gaps[0.999]:.3e} < 0.02")


def test_criterion_10_spectral_symmetries():
    """Periodicity is exact, real points give real values, and the
    unitary range is a contraction."""
    ok = True
    details = []
    period = B.period
    z0 = 0.35
    for sign, k in ((1, 0), (1, 3), (-1, 2)):
        ref = _spherical(complex(z0, 0.0), sign, k)
        for mult in (1, 2, 4):
            v = _spherical(complex(z0, mult * period), sign, k)
            if v != ref:
                ok = False
                details.append(f"periodicity broken at sign={sign} k={k} "
                               f"mult={mult}: {v!r} != {ref!r}")
    for z in (0.5, 0.9):
        for sign, k in ((1, 0), (1, -3), (1, 2), (-1, 1)):
            v = _spherical(complex(z, 0.0), sign, k)
            if abs(v.imag) >= 1e-10:
                ok = False
                details.append(f"imag {v.imag:.3e} at z={z} sign={sign} "
                               f"k={k}")
    half_period = math.pi / abs(B.log_q)
    worst = 0.0
    for jmid in range(20):
        t = (jmid + 0.5) / 20.0 * half_period
        z = complex(0.0, t)
        for k in range(-12, 13):
            worst = max(worst, abs(_spherical(z, 1, k)))
        for k in range(1, 13):
            worst = max(worst, abs(_spherical(z, -1, k)))
    ok = ok and worst <= 1.0 + 1e-8
    if worst > 1.0 + 1e-8:
        details.append(f"contraction violated: sup modulus {worst!r}")
    _verdict("criterion_10_symmetries", ok,
             "; ".join(details) if details
             else f"periodicity bit-exact, reality < 1e-10, "
             f"unitary sup modulus {worst:.12f} <= 1+1e-8")
