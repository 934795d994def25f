"""Verification harness: fixed check suites with CSV/JSON reports.

Every suite is a deterministic list of checks over published parameter
grids; reports carry no timestamps, hostnames, or random state, so two
runs with the same configuration produce byte-identical files.

Exit codes: 0 all checks passed, 1 at least one check failed,
2 invalid configuration (no reports written in that case, except that
suites computed before a mid-run crash are still flushed).
"""

from __future__ import annotations

import argparse
import cmath
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from . import __version__
from ._kernels import backend
from .errors import QSU11Error
from .grids import OVERLAP_GRID, RATIO_LAMBDA_GRID, THETA_BASES, THETA_GRID
from .limitlab import (
    MONO_SLACK,
    SweepReport,
    approx_identity_gap,
    limit_sweep,
    pochhammer_ratio,
    pochhammer_ratio_naive,
    symbol_clip_abs,
    symbol_constant,
    uniform_sup_gap,
)
from .qcalculus import (
    QBase,
    phi21_continued,
    phi21_direct,
    qpoch_infinite,
    theta_pair,
)
from .smoother import ContourPath, QuadratureSpec, gaussian_smooth, path_independence
from .su11core import (
    IqPoint,
    SpectralParam,
    averaged_coamen,
    coamen_coeff,
    spherical_az,
)

__all__ = ["SUITES", "RunConfig", "CheckRow", "run_suite", "main"]

SUITES = ("identities", "spherical", "coamenability", "smoothing", "approxid")

_FORMATS = ("csv", "json", "both")

_CSV_COLUMNS = (
    "suite", "check_id", "paper_anchor", "param_json",
    "value_re", "value_im", "deviation", "threshold", "verdict",
)


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one harness run (defaults match the CLI)."""

    q: float = 0.5
    tol: float = 1e-10
    tol_quad: float = 1e-8
    max_exponent: int = 24
    max_terms: int = 200
    suites: tuple[str, ...] = SUITES
    out_dir: str = "reports"
    format: str = "csv"

    def problems(self) -> list[str]:
        errs = []
        if not (0.0 < self.q < 1.0):
            errs.append(f"q must lie in (0, 1), got {self.q!r}")
        if self.tol <= 0:
            errs.append("tol must be positive")
        if self.tol_quad <= 0:
            errs.append("tol_quad must be positive")
        if self.max_exponent < 1:
            errs.append("max_exponent must be >= 1")
        if self.max_terms < 1:
            errs.append("max_terms must be >= 1")
        if not self.suites:
            errs.append("at least one suite must be selected")
        for s in self.suites:
            if s not in SUITES:
                errs.append(f"unknown suite {s!r} (choose from {SUITES})")
        if self.format not in _FORMATS:
            errs.append(f"format must be one of {_FORMATS}")
        return errs

    def warnings(self) -> list[str]:
        warns = []
        if self.q < 0.1 or self.q > 0.95:
            warns.append(
                f"q={self.q!r} is outside the validated window [0.1, 0.95]; "
                "tail bounds hold but thresholds were tuned inside it"
            )
        return warns

    @property
    def series_tol(self) -> float:
        """Series tolerance driven by tol: two orders tighter, floored."""
        return max(min(self.tol / 100.0, 1e-12), 1e-15)


@dataclass(frozen=True, eq=False)
class CheckRow:
    suite: str
    check_id: str
    paper_anchor: str
    params: dict
    value: complex
    deviation: float
    threshold: float
    verdict: str

    @property
    def param_json(self) -> str:
        return json.dumps(self.params, sort_keys=True, separators=(",", ":"))


def _row(suite: str, check_id: str, anchor: str, params: dict, value: complex,
         deviation: float, threshold: float, ok: bool | None = None) -> CheckRow:
    passed = (deviation <= threshold) if ok is None else ok
    return CheckRow(suite, check_id, anchor, params, complex(value),
                    float(deviation), float(threshold),
                    "pass" if passed else "fail")


def _guarded(build: Callable[[], CheckRow], suite: str, check_id: str,
             anchor: str, params: dict) -> CheckRow:
    try:
        return build()
    except QSU11Error as err:
        p = dict(params)
        p["error"] = str(err)
        return CheckRow(suite, check_id, anchor, p, complex("nan"),
                        math.inf, 0.0, "fail")


def _chain_row(suite: str, check_id: str, anchor: str, params: dict,
               values: list[complex], devs: list[float], threshold: float,
               monotone_required: bool = True) -> CheckRow:
    mono = all(devs[i + 1] <= devs[i] + MONO_SLACK for i in range(len(devs) - 1))
    ok = devs[-1] <= threshold and (mono or not monotone_required)
    p = dict(params)
    p["deviations"] = [float(d) for d in devs]
    p["monotone"] = bool(mono)
    return _row(suite, check_id, anchor, p, values[-1], devs[-1], threshold, ok)


def _sweep_row(suite: str, check_id: str, anchor: str, params: dict,
               rep: SweepReport) -> CheckRow:
    """Flatten a SweepReport into one CheckRow (final row carries verdict)."""
    p = dict(params)
    p["deviations"] = [float(r.deviation) for r in rep.rows]
    p["monotone"] = bool(rep.monotone_deviation)
    notes = [r.note for r in rep.rows if r.note]
    if notes:
        p["errors"] = notes
    return _row(suite, check_id, anchor, p, rep.rows[-1].value,
                rep.final_deviation, rep.threshold, rep.verdict == "pass")


# ---------------------------------------------------------------- suites


def _suite_identities(cfg: RunConfig, base: QBase) -> list[CheckRow]:
    rows = []
    st = cfg.series_tol
    for b in THETA_BASES:
        for i, (re, im, k) in enumerate(THETA_GRID):
            a = complex(re, im)
            params = {"a_re": re, "a_im": im, "k": k, "base": b}

            def build(a=a, k=k, b=b, i=i, params=params):
                tp = theta_pair(a, k, b, tol=st)
                return _row("identities", f"theta_b{b}_{i:03d}", "Eq4.1",
                            params, tp.lhs, tp.residual, cfg.tol)

            rows.append(_guarded(build, "identities", f"theta_b{b}_{i:03d}",
                                 "Eq4.1", params))
    for b in THETA_BASES:
        qb = QBase(b)
        b2 = b * b
        prod = (qb.cq ** 2 * b2
                * qpoch_infinite(b2, b2, st).value.real ** 2
                * qpoch_infinite(-1.0, b2, st).value.real
                * qpoch_infinite(-b2, b2, st).value.real)
        rows.append(_row("identities", f"cq_norm_b{b}", "Eq4.1", {"base": b},
                         prod, abs(prod - 1.0), cfg.tol / 100.0))
    q = base.q
    q2 = q * q
    for i, (theta, kap) in enumerate(OVERLAP_GRID):
        lam = cmath.exp(1j * theta)
        params = {"theta": theta, "kappa": kap}

        def build(lam=lam, kap=kap, i=i, params=params):
            direct = phi21_direct(q / lam, lam * q, q2, q2, -q2 / kap,
                                  tol=st, max_terms=cfg.max_terms)
            cont = phi21_continued(lam, complex(kap), base,
                                   tol=st, max_terms=cfg.max_terms)
            dev = abs(direct.value - cont.value) / abs(direct.value)
            return _row("identities", f"overlap_{i:02d}", "PropB2.Case2",
                        params, cont.value, dev, 100.0 * cfg.tol)

        rows.append(_guarded(build, "identities", f"overlap_{i:02d}",
                             "PropB2.Case2", params))
    return rows


_COAMEN_LAMBDAS = (
    ("one", lambda base: 1.0 + 0.0j),
    ("phase04", lambda base: cmath.exp(0.4j)),
    ("sqrtq", lambda base: complex(math.sqrt(base.q))),
)


def _suite_coamenability(cfg: RunConfig, base: QBase) -> list[CheckRow]:
    rows = []
    q = base.q
    st = cfg.series_tol
    for li, (lname, lfn) in enumerate(_COAMEN_LAMBDAS):
        lam = lfn(base)
        for m in range(-3, 4):
            for j in range(0, 11):
                params = {"lam": lname, "m": m, "j": j}
                cid = f"rawsimp_{lname}_m{m}_j{j}"

                def build(lam=lam, m=m, j=j, cid=cid, params=params):
                    p1 = IqPoint.positive(-j)
                    raw = coamen_coeff(base, m, lam, p1, form="raw",
                                       tol=st, max_terms=cfg.max_terms)
                    simp = coamen_coeff(base, m, lam, p1, form="simplified",
                                        tol=st, max_terms=cfg.max_terms)
                    dev = abs(raw.value - simp.value) \
                        / max(abs(raw.value), abs(simp.value))
                    return _row("coamenability", cid, "Eq5.2", params,
                                simp.value, dev, 10.0 * cfg.tol)

                rows.append(_guarded(build, "coamenability", cid, "Eq5.2",
                                     params))
    # The j-wise upper bound q^(2j-1) is specific to the m=0, lam=1 cell;
    # for m >= 1 the deviation exceeds it at small j (only the limit is
    # claimed there, checked by the chains below).
    for j in (2, 4, 8):
        params = {"lam": "one", "m": 0, "j": j}
        cid = f"coamen_bound_m0_j{j}"

        def build(j=j, cid=cid, params=params):
            ev = coamen_coeff(base, 0, 1.0 + 0.0j, IqPoint.positive(-j),
                              tol=st, max_terms=cfg.max_terms)
            return _row("coamenability", cid, "Thm5.2", params,
                        ev.value, abs(ev.value - 1.0), q ** (2 * j - 1))

        rows.append(_guarded(build, "coamenability", cid, "Thm5.2", params))
    for lname, lfn in _COAMEN_LAMBDAS[:2]:
        lam = lfn(base)
        for m in range(-2, 3):
            params = {"lam": lname, "m": m, "js": [2, 4, 8, 16]}
            cid = f"coamen_limit_{lname}_m{m}"

            def build(lam=lam, m=m, cid=cid, params=params):
                rep = limit_sweep(
                    "coamen", base,
                    {"m": m, "lam": lam, "tol": st,
                     "max_terms": cfg.max_terms},
                    (2, 4, 8, 16), 1.0, 1e-6)
                return _sweep_row("coamenability", cid, "Thm5.2", params, rep)

            rows.append(_guarded(build, "coamenability", cid, "Thm5.2",
                                 params))
    for m in (0, 1, 2):
        params = {"m": m, "chain": [[5, 10], [10, 20], [20, 40]]}
        cid = f"averaged_m{m}"

        def build(m=m, cid=cid, params=params):
            rep = limit_sweep(
                "averaged_coamen", base,
                {"m": m, "lam": 1.0 + 0.0j, "tol": st,
                 "max_terms": cfg.max_terms},
                ((5, 10), (10, 20), (20, 40)), 1.0, 0.15)
            return _sweep_row("coamenability", cid, "Thm5.2", params, rep)

        rows.append(_guarded(build, "coamenability", cid, "Thm5.2", params))
    return rows


def _sph(base: QBase, z: complex, sign: int, k: int, tol: float,
         max_terms: int) -> complex:
    zp = SpectralParam.from_z(z, base)
    return spherical_az(base, zp, IqPoint(sign, k), tol=tol,
                        max_terms=max_terms).value


def _suite_spherical(cfg: RunConfig, base: QBase) -> list[CheckRow]:
    rows = []
    q = base.q
    st = cfg.series_tol
    z_chain = (0.9, 0.99, 0.999)
    cases = (("spherical_case1", range(-6, 1), "PropB2.Case1"),
             ("spherical_case2", range(1, 7), "PropB2.Case2"),
             ("spherical_case3", range(1, 7), "PropB2.Case3"))
    for family, ks, anchor in cases:
        for k in ks:
            params = {"family": family, "k": k, "zs": list(z_chain)}
            cid = f"{family.removeprefix('spherical_')}_k{k}"

            def build(family=family, k=k, cid=cid, anchor=anchor,
                      params=params):
                rep = limit_sweep(
                    family, base,
                    {"k": k, "tol": st, "max_terms": cfg.max_terms},
                    z_chain, 1.0, 5e-3)
                return _sweep_row("spherical", cid, anchor, params, rep)

            rows.append(_guarded(build, "spherical", cid, anchor, params))

    gaps = []
    for z in (0.9, 0.95, 0.99, 0.999, 1.0):
        params = {"z": z, "max_exponent": cfg.max_exponent}
        cid = f"unifgap_z{z}"

        def build(z=z, cid=cid, params=params):
            g = uniform_sup_gap(base, SpectralParam.from_z(z, base),
                                cfg.max_exponent, tol=st)
            gaps.append(g)
            thr = cfg.tol if z == 1.0 else (5e-3 if z == 0.999 else 0.05)
            return _row("spherical", cid, "Thm6.3", params, g, g, thr)

        rows.append(_guarded(build, "spherical", cid, "Thm6.3", params))
    if len(gaps) == 5:
        worst_rise = max(0.0, max(gaps[i + 1] - gaps[i] for i in range(4)))
        rows.append(_row("spherical", "unifgap_monotone", "Thm6.3",
                         {"zs": [0.9, 0.95, 0.99, 0.999, 1.0]},
                         gaps[-1], worst_rise, MONO_SLACK))

    def build_window():
        zp = SpectralParam.from_z(0.95, base)
        g20 = uniform_sup_gap(base, zp, 20, tol=st)
        g40 = uniform_sup_gap(base, zp, 40, tol=st)
        return _row("spherical", "unifgap_window", "Thm6.3",
                    {"z": 0.95, "depths": [20, 40]},
                    g40, abs(g40 - g20), 1e-14)

    rows.append(_guarded(build_window, "spherical", "unifgap_window",
                         "Thm6.3", {"z": 0.95}))

    lam_near = q * (1.0 + 1e-3)
    for k in (1, 2, 3, 10, math.inf):
        kname = "inf" if k == math.inf else str(k)
        params = {"lam_re": lam_near, "lam_im": 0.0, "k": kname}
        cid = f"ratio_mod_k{kname}"

        def build(k=k, cid=cid, params=params):
            v = pochhammer_ratio(base, complex(lam_near), k)
            return _row("spherical", cid, "LemB.1", params, v, abs(v), 1e-2)

        rows.append(_guarded(build, "spherical", cid, "LemB.1", params))

    def build_ratio_mono():
        rep = limit_sweep(
            "b1_ratio", base, {"k": 3},
            tuple(q * (1.0 + 10.0 ** -j) for j in (1, 2, 3)),
            0.0, 1e-2)
        return _sweep_row("spherical", "ratio_monotone", "LemB.1",
                          {"k": 3, "offsets": [0.1, 0.01, 0.001]}, rep)

    rows.append(_guarded(build_ratio_mono, "spherical", "ratio_monotone",
                         "LemB.1", {"k": 3}))

    for i, (re, im) in enumerate(RATIO_LAMBDA_GRID):
        lam = complex(re, im)
        for k in (1, 2, 3, 7):
            params = {"lam_re": re, "lam_im": im, "k": k}
            cid = f"ratio_agree_{i:02d}_k{k}"

            def build(lam=lam, k=k, cid=cid, params=params):
                a = pochhammer_ratio(base, lam, k)
                b = pochhammer_ratio_naive(base, lam, k)
                dev = abs(a - b) / max(abs(a), abs(b))
                return _row("spherical", cid, "LemB.1", params, a, dev,
                            cfg.tol / 100.0)

            rows.append(_guarded(build, "spherical", cid, "LemB.1", params))

    period = base.period
    z0 = 0.35
    for p in (IqPoint.positive(0), IqPoint.positive(3), IqPoint.negative(2)):
        if p.sign > 0 and p.exponent <= 0:
            anchor = "PropB2.Case1"
        elif p.sign > 0:
            anchor = "PropB2.Case2"
        else:
            anchor = "PropB2.Case3"
        for mult in (1, 2, 4):
            params = {"z0": z0, "period_multiple": mult,
                      "sign": p.sign, "k": p.exponent}
            cid = f"periodic_s{p.sign}_k{p.exponent}_m{mult}"

            def build(p=p, mult=mult, cid=cid, anchor=anchor, params=params):
                ref = _sph(base, complex(z0, 0.0), p.sign, p.exponent,
                           st, cfg.max_terms)
                v = _sph(base, complex(z0, mult * period), p.sign,
                         p.exponent, st, cfg.max_terms)
                return _row("spherical", cid, anchor, params, v,
                            abs(v - ref), cfg.tol)

            rows.append(_guarded(build, "spherical", cid, anchor, params))

    for z in (0.5, 0.9):
        for p in (IqPoint.positive(0), IqPoint.positive(-3),
                  IqPoint.positive(2), IqPoint.negative(1)):
            params = {"z": z, "sign": p.sign, "k": p.exponent}
            cid = f"real_z{z}_s{p.sign}_k{p.exponent}"

            def build(z=z, p=p, cid=cid, params=params):
                v = _sph(base, complex(z, 0.0), p.sign, p.exponent, st,
                         cfg.max_terms)
                return _row("spherical", cid, "PropB2.Case1", params, v,
                            abs(v.imag), cfg.tol)

            rows.append(_guarded(build, "spherical", cid, "PropB2.Case1",
                                 params))

    half_period = math.pi / abs(base.log_q)
    depth = min(cfg.max_exponent, 12)
    for jmid in range(20):
        t = (jmid + 0.5) / 20.0 * half_period
        params = {"t": t, "depth": depth}
        cid = f"contract_{jmid:02d}"

        def build(t=t, cid=cid, params=params):
            z = complex(0.0, t)
            worst = 0.0
            worst_v = 0.0 + 0.0j
            for k in range(-depth, depth + 1):
                v = _sph(base, z, 1, k, st, cfg.max_terms)
                if abs(v) > worst:
                    worst, worst_v = abs(v), v
            for k in range(1, depth + 1):
                v = _sph(base, z, -1, k, st, cfg.max_terms)
                if abs(v) > worst:
                    worst, worst_v = abs(v), v
            return _row("spherical", cid, "Thm6.3", params, worst_v,
                        max(0.0, worst - 1.0), 1e-8)

        rows.append(_guarded(build, "spherical", cid, "Thm6.3", params))
    return rows


def _suite_smoothing(cfg: RunConfig, base: QBase) -> list[CheckRow]:
    rows = []
    st = cfg.series_tol
    n_chain = (4.0, 16.0, 64.0, 256.0)
    for k in (2, 5):
        for p0k in (0, -1, -2, -4):
            p0 = IqPoint.positive(p0k)
            center = 1.0 - 1.0 / k
            params = {"k": k, "p0_k": p0k, "ns": list(n_chain)}
            cid = f"smooth_k{k}_p{p0k}"

            def build(k=k, p0=p0, center=center, cid=cid, params=params):
                target = _sph(base, complex(center, 0.0), p0.sign,
                              p0.exponent, st, cfg.max_terms)
                vals, devs = [], []
                for n in n_chain:
                    quad = QuadratureSpec.for_width(n, base, cfg.tol_quad)
                    path = ContourPath("vertical_line", center)
                    sm = gaussian_smooth(base, p0, k, n, path, quad, tol=st)
                    vals.append(sm.value)
                    devs.append(abs(sm.value - target))
                return _chain_row("smoothing", cid, "Thm7.4", params,
                                  vals, devs, 1e-2)

            rows.append(_guarded(build, "smoothing", cid, "Thm7.4", params))

    def build_mass():
        quad = QuadratureSpec.for_width(16.0, base, cfg.tol_quad)
        path = ContourPath("vertical_line", 0.5)
        sm = gaussian_smooth(base, IqPoint.positive(0), 2, 16.0, path, quad,
                             tol=st)
        return _row("smoothing", "mass_unit", "Eq7.1",
                    {"k": 2, "n": 16}, sm.mass, abs(sm.mass - 1.0),
                    cfg.tol_quad)

    rows.append(_guarded(build_mass, "smoothing", "mass_unit", "Eq7.1",
                         {"k": 2, "n": 16}))

    def build_path():
        quad = QuadratureSpec.for_width(16.0, base, cfg.tol_quad)
        pa = ContourPath("vertical_line", 0.5)
        pb = ContourPath("perturbed", 0.5, wiggle_amplitude=0.05)
        d = path_independence(base, IqPoint.positive(0), 2, 16.0, pa, pb,
                              quad, tol=st)
        return _row("smoothing", "path_independence", "Eq7.1",
                    {"k": 2, "n": 16, "wiggle": 0.05}, d, d,
                    100.0 * cfg.tol_quad)

    rows.append(_guarded(build_path, "smoothing", "path_independence",
                         "Eq7.1", {"k": 2, "n": 16}))

    def build_doubling():
        path = ContourPath("vertical_line", 0.5)
        qa = QuadratureSpec.for_width(256.0, base, cfg.tol_quad,
                                      nodes_per_unit=32)
        qb = QuadratureSpec.for_width(256.0, base, cfg.tol_quad,
                                      nodes_per_unit=64)
        va = gaussian_smooth(base, IqPoint.positive(0), 2, 256.0, path, qa,
                             tol=st)
        vb = gaussian_smooth(base, IqPoint.positive(0), 2, 256.0, path, qb,
                             tol=st)
        d = abs(va.value - vb.value)
        return _row("smoothing", "node_doubling", "Eq7.1",
                    {"k": 2, "n": 256, "npu": [32, 64]}, vb.value, d,
                    cfg.tol_quad)

    rows.append(_guarded(build_doubling, "smoothing", "node_doubling",
                         "Eq7.1", {"k": 2, "n": 256}))

    def build_affine():
        c0, c1 = 0.7 - 0.2j, 0.31 + 0.11j
        center = 0.5
        quad = QuadratureSpec.for_width(16.0, base, cfg.tol_quad)
        path = ContourPath("vertical_line", center)
        sm = gaussian_smooth(
            base, IqPoint.positive(0), 2, 16.0, path, quad,
            integrand=lambda z: c0 + c1 * (z - center), tol=st,
        )
        return _row("smoothing", "affine_mean", "Eq7.1",
                    {"k": 2, "n": 16, "c0": [c0.real, c0.imag],
                     "c1": [c1.real, c1.imag]},
                    sm.value, abs(sm.value - c0), cfg.tol_quad)

    rows.append(_guarded(build_affine, "smoothing", "affine_mean", "Eq7.1",
                         {"k": 2, "n": 16}))
    return rows


def _suite_approxid(cfg: RunConfig, base: QBase) -> list[CheckRow]:
    rows = []
    st = cfg.series_tol
    depth = min(cfg.max_exponent, 12)
    sym = symbol_clip_abs()
    params = {"zs": [0.9, 0.99, 0.999], "symbol": sym.name, "depth": depth}

    def build_chain():
        vals, devs = [], []
        for z in (0.9, 0.99, 0.999):
            g = approx_identity_gap(base, SpectralParam.from_z(z, base),
                                    sym, depth, tol=st)
            vals.append(complex(g.gap))
            devs.append(g.gap)
        return _chain_row("approxid", "weighted_gap_chain", "Thm6.3", params,
                          vals, devs, 0.02)

    rows.append(_guarded(build_chain, "approxid", "weighted_gap_chain",
                         "Thm6.3", params))

    const = symbol_constant(1.0)
    cparams = {"z": 0.999, "symbol": const.name, "depth": depth}

    def build_const():
        g = approx_identity_gap(base, SpectralParam.from_z(0.999, base),
                                const, depth, tol=st)
        return _row("approxid", "const_symbol_bounded", "Thm6.3", cparams,
                    g.gap, g.gap, 3.0)

    rows.append(_guarded(build_const, "approxid", "const_symbol_bounded",
                         "Thm6.3", cparams))
    return rows


_BUILDERS: dict[str, Callable[[RunConfig, QBase], list[CheckRow]]] = {
    "identities": _suite_identities,
    "spherical": _suite_spherical,
    "coamenability": _suite_coamenability,
    "smoothing": _suite_smoothing,
    "approxid": _suite_approxid,
}


# ---------------------------------------------------------------- reports


def _float_repr(x: float) -> str:
    return repr(float(x))


def _write_csv(path: Path, rows: Iterable[CheckRow]) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(_CSV_COLUMNS)
        for r in rows:
            w.writerow([
                r.suite, r.check_id, r.paper_anchor, r.param_json,
                _float_repr(r.value.real), _float_repr(r.value.imag),
                _float_repr(r.deviation), _float_repr(r.threshold),
                r.verdict,
            ])


def _header_dict(cfg: RunConfig) -> dict:
    return {
        "version": __version__,
        "backend": backend(),
        "q": cfg.q,
        "tolerances": {"tol": cfg.tol, "tol_quad": cfg.tol_quad},
        "max_exponent": cfg.max_exponent,
        "max_terms": cfg.max_terms,
        "warnings": cfg.warnings(),
    }


def _write_json(path: Path, cfg: RunConfig, rows: Iterable[CheckRow]) -> None:
    doc = {
        "header": _header_dict(cfg),
        "rows": [
            {
                "suite": r.suite,
                "check_id": r.check_id,
                "paper_anchor": r.paper_anchor,
                "params": json.loads(r.param_json),
                "value_re": r.value.real,
                "value_im": r.value.imag,
                "deviation": r.deviation,
                "threshold": r.threshold,
                "verdict": r.verdict,
            }
            for r in rows
        ],
    }
    path.write_text(json.dumps(doc, sort_keys=True, indent=2,
                               allow_nan=True) + "\n")


def run_suite(cfg: RunConfig) -> int:
    """Run the configured suites, write reports, return the exit code."""
    errs = cfg.problems()
    if errs:
        for e in errs:
            print(f"config error: {e}", file=sys.stderr)
        return 2
    for w in cfg.warnings():
        print(f"warning: {w}", file=sys.stderr)

    base = QBase(cfg.q)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    seen = []
    for s in cfg.suites:
        if s not in seen:
            seen.append(s)

    summary = []
    any_fail = False
    for suite in seen:
        try:
            rows = _BUILDERS[suite](cfg, base)
        except Exception as err:  # crash inside a builder: partial report
            rows = [CheckRow(suite, "suite_crashed", "Eq4.1",
                             {"error": f"{type(err).__name__}: {err}"},
                             complex("nan"), math.inf, 0.0, "fail")]
        failures = sum(1 for r in rows if r.verdict != "pass")
        any_fail = any_fail or failures > 0
        if cfg.format in ("csv", "both"):
            _write_csv(out / f"{suite}.csv", rows)
        if cfg.format in ("json", "both"):
            _write_json(out / f"{suite}.json", cfg, rows)
        summary.append((suite, len(rows), failures))

    if cfg.format in ("csv", "both"):
        with (out / "summary.csv").open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["suite", "checks", "failures", "verdict"])
            for suite, n, f in summary:
                w.writerow([suite, n, f, "pass" if f == 0 else "fail"])
    if cfg.format in ("json", "both"):
        doc = {
            "header": _header_dict(cfg),
            "suites": [
                {"suite": s, "checks": n, "failures": f,
                 "verdict": "pass" if f == 0 else "fail"}
                for s, n, f in summary
            ],
        }
        (out / "summary.json").write_text(
            json.dumps(doc, sort_keys=True, indent=2) + "\n")

    for suite, n, f in summary:
        status = "pass" if f == 0 else "fail"
        print(f"{suite}: {n - f}/{n} checks passed [{status}]")
    return 1 if any_fail else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qsu11-verify",
        description="Run the qsu11 verification suites and write reports.",
    )
    p.add_argument("--q", type=float, default=0.5,
                   help="deformation parameter in (0, 1) (default 0.5)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="identity-check tolerance (default 1e-10)")
    p.add_argument("--tol-quad", type=float, default=1e-8,
                   help="quadrature tolerance (default 1e-8)")
    p.add_argument("--max-exponent", type=int, default=24,
                   help="spectral truncation depth (default 24)")
    p.add_argument("--max-terms", type=int, default=200,
                   help="series term budget (default 200)")
    p.add_argument("--suite", action="append", choices=SUITES, default=None,
                   help="suite to run (repeatable; default: all)")
    p.add_argument("--out", default="reports",
                   help="output directory (default ./reports)")
    p.add_argument("--format", choices=_FORMATS, default="csv",
                   help="report format (default csv)")
    return p


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    suites = tuple(args.suite) if args.suite else SUITES
    return RunConfig(q=args.q, tol=args.tol, tol_quad=args.tol_quad,
                     max_exponent=args.max_exponent, max_terms=args.max_terms,
                     suites=suites, out_dir=args.out, format=args.format)


def main(argv: list[str] | None = None) -> int:
    return run_suite(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
