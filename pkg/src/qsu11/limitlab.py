"""Limit experiments: parameter sweeps, uniform gaps, averaged identities.

Everything here is a thin, deterministic layer over the evaluators in
:mod:`qsu11.su11core`: it runs fixed parameter chains toward a limit,
records per-step deviations, and reports whether the chain behaves
(monotone decrease, final deviation under a threshold).  No randomness
and no adaptive stepping, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import InvalidArgumentError, PoleGuardError, QSU11Error
from .qcalculus import EPS_POLE, QBase, _near_power, qpoch_finite
from .su11core import (IqPoint, SpectralParam, averaged_coamen, coamen_coeff,
                       spherical_az)

__all__ = [
    "MONO_SLACK",
    "SWEEP_FAMILIES",
    "SweepRow",
    "SweepReport",
    "Symbol",
    "symbol_clip_abs",
    "symbol_constant",
    "limit_sweep",
    "uniform_sup_gap",
    "ApproxIdentityGap",
    "approx_identity_gap",
    "pochhammer_ratio",
    "pochhammer_ratio_naive",
]

#: Absolute slack when comparing consecutive deviations for monotonicity;
#: allows ties and rounding jitter at the no-signal floor.
MONO_SLACK = 1e-13

#: Truncation depth for the k = inf Pochhammer ratio; the discarded
#: factors change the value by less than 1e-16 relative for the
#: parameter windows used here (q <= 0.95, |lam| >= q).
RATIO_TRUNC_K = 60


@dataclass(frozen=True)
class SweepRow:
    """One step of a limit sweep: parameter, value, deviation from target."""

    param: object
    value: complex
    deviation: float
    note: str = ""


@dataclass(frozen=True)
class SweepReport:
    """Outcome of a limit sweep.

    ``verdict`` is "pass" when every row evaluated, the final deviation
    is within the threshold, and (if required) deviations decrease
    monotonically along the chain up to :data:`MONO_SLACK`.
    """

    label: str
    rows: tuple[SweepRow, ...]
    verdict: str
    monotone_deviation: bool
    threshold: float

    @property
    def final_deviation(self) -> float:
        return self.rows[-1].deviation if self.rows else math.inf


#: Evaluator families understood by :func:`limit_sweep`.
SWEEP_FAMILIES = ("spherical_case1", "spherical_case2", "spherical_case3",
                  "coamen", "averaged_coamen", "b1_ratio")


def _sweep_evaluator(family: str, base: QBase,
                     fixed: dict) -> Callable[[object], complex]:
    """Build the per-step evaluator for one sweep family.

    Consumes the keys it understands from ``fixed`` (leftovers are the
    caller's error).  The meaning of one approach-sequence element:

    * ``spherical_case1/2/3`` — a spectral parameter z (fixed key
      ``k``: point exponent; sign and range follow the case).
    * ``coamen`` — an exponent j with ``p1 = q^-j`` (fixed keys ``m``,
      ``lam``, optional ``form``).
    * ``averaged_coamen`` — a pair (n, j) (fixed keys ``m``, ``lam``).
    * ``b1_ratio`` — a value of lam (fixed key ``k``: int or math.inf).
    """
    tol = float(fixed.pop("tol", 1e-12))
    max_terms = int(fixed.pop("max_terms", 200))
    if family in ("spherical_case1", "spherical_case2", "spherical_case3"):
        k = int(fixed.pop("k", 0 if family == "spherical_case1" else 1))
        if family == "spherical_case1":
            if k > 0:
                raise InvalidArgumentError("case-1 points need exponent <= 0")
            p0 = IqPoint.positive(k)
        elif family == "spherical_case2":
            if k < 1:
                raise InvalidArgumentError("case-2 points need exponent >= 1")
            p0 = IqPoint.positive(k)
        else:
            p0 = IqPoint.negative(k)

        def evaluate(z: object) -> complex:
            zp = z if isinstance(z, SpectralParam) \
                else SpectralParam.from_z(z, base)
            return spherical_az(base, zp, p0, tol=tol,
                                max_terms=max_terms).value

        return evaluate
    if family == "coamen":
        m = int(fixed.pop("m", 0))
        lam = complex(fixed.pop("lam", 1.0))
        form = str(fixed.pop("form", "simplified"))

        def evaluate(j: object) -> complex:
            p1 = IqPoint.positive(-int(j))
            return coamen_coeff(base, m, lam, p1, form=form, tol=tol,
                                max_terms=max_terms).value

        return evaluate
    if family == "averaged_coamen":
        m = int(fixed.pop("m", 0))
        lam = complex(fixed.pop("lam", 1.0))

        def evaluate(nj: object) -> complex:
            n, j = nj
            return averaged_coamen(base, int(n), IqPoint.positive(-int(j)),
                                   m, lam, tol=tol,
                                   max_terms=max_terms).value

        return evaluate
    if family == "b1_ratio":
        k = fixed.pop("k", 1)
        trunc = int(fixed.pop("trunc_K", RATIO_TRUNC_K))

        def evaluate(lam: object) -> complex:
            return pochhammer_ratio(base, complex(lam), k, trunc_K=trunc)

        return evaluate
    raise InvalidArgumentError(
        f"unknown sweep family {family!r}; expected one of {SWEEP_FAMILIES}")


def limit_sweep(family: str, base: QBase, fixed_params: dict | None,
                approach: Sequence[object], target: complex,
                threshold: float, require_monotone: bool = True) -> SweepReport:
    """Evaluate one family along ``approach`` and compare against ``target``.

    Each approach element is evaluated with the family's fixed
    parameters, and the deviation ``|value - target|`` is recorded.  The
    verdict is "pass" when every row evaluated, the final deviation is
    within ``threshold``, and (if required) the deviations decrease
    monotonically up to :data:`MONO_SLACK`.  Rows where the evaluator
    raises a package error are recorded with an infinite deviation and
    the error text, and fail the sweep.
    """
    if not approach:
        raise InvalidArgumentError("limit_sweep needs a nonempty approach")
    if threshold <= 0:
        raise InvalidArgumentError("threshold must be positive")
    fixed = dict(fixed_params or {})
    evaluate = _sweep_evaluator(family, base, fixed)
    if fixed:
        raise InvalidArgumentError(
            f"fixed_params keys not understood by {family}: {sorted(fixed)}")
    rows = []
    failed = False
    for p in approach:
        try:
            v = evaluate(p)
            rows.append(SweepRow(p, v, abs(v - target)))
        except QSU11Error as err:
            rows.append(SweepRow(p, complex("nan"), math.inf, str(err)))
            failed = True
    devs = [r.deviation for r in rows]
    monotone = all(devs[i + 1] <= devs[i] + MONO_SLACK
                   for i in range(len(devs) - 1))
    ok = (not failed) and devs[-1] <= threshold \
        and (monotone or not require_monotone)
    return SweepReport(family, tuple(rows), "pass" if ok else "fail",
                       monotone, threshold)


def uniform_sup_gap(base: QBase, zp: SpectralParam, max_exponent: int = 24,
                    tol: float = 1e-12) -> float:
    """Sup of ``|a_z(q^k) - 1|`` over the outward points k = -max_exponent..0.

    The coefficient deviations decay geometrically in -k on this range,
    so the sup over the truncated window already equals the sup over
    the full branch to well below the verification thresholds
    (deepening the window leaves the value unchanged at 1e-14 level;
    the suites check that directly).
    """
    if max_exponent < 0:
        raise InvalidArgumentError("max_exponent must be >= 0")
    gap = 0.0
    for k in range(-max_exponent, 1):
        ev = spherical_az(base, zp, IqPoint.positive(k), tol=tol)
        gap = max(gap, abs(ev.value - 1.0))
    return gap


@dataclass(frozen=True)
class Symbol:
    """A scalar symbol on the classical points.

    ``eval`` maps (point, base) to a complex weight; ``decay_at_zero``
    declares whether the symbol tends to 0 along ``q^k, k -> +inf``
    (the property that makes the weighted gap vanish in the limit).
    """

    name: str
    eval: Callable[[IqPoint, QBase], complex] = field(repr=False)
    decay_at_zero: bool = True


def symbol_clip_abs() -> Symbol:
    """The symbol ``p -> min(1, |p|)``: 1 outward, decaying at zero."""
    return Symbol("clip_abs",
                  lambda p, base: min(1.0, abs(p.value(base))),
                  decay_at_zero=True)


def symbol_constant(c: complex = 1.0) -> Symbol:
    """A constant symbol; does not decay at zero (non-example)."""
    return Symbol(f"const_{c}", lambda p, base: c, decay_at_zero=False)


@dataclass(frozen=True)
class ApproxIdentityGap:
    """Weighted sup gaps split by region.

    ``unit_region`` covers the outward points ``+q^k, k <= 0`` and
    ``decay_region`` the points near zero ``+-q^k, k >= 1``; ``gap`` is
    the max of the two.
    """

    gap: float
    unit_region: float
    decay_region: float


def approx_identity_gap(base: QBase, zp: SpectralParam, sym: Symbol,
                        max_exponent: int = 24,
                        tol: float = 1e-12) -> ApproxIdentityGap:
    """Weighted gap ``sup_p |a_z(p) - 1| |sym(p)|`` over the truncated spectrum.

    Samples ``+q^k`` for k in [-max_exponent, max_exponent] and
    ``-q^k`` for k in [1, max_exponent].  For symbols that decay at
    zero the gap vanishes as z -> 1; for non-decaying symbols it stays
    bounded but need not vanish (the deviation at points near zero does
    not go away, only its weight can kill it).
    """
    if max_exponent < 1:
        raise InvalidArgumentError("max_exponent must be >= 1")
    unit = 0.0
    for k in range(-max_exponent, 1):
        p = IqPoint.positive(k)
        ev = spherical_az(base, zp, p, tol=tol)
        unit = max(unit, abs(ev.value - 1.0) * abs(sym.eval(p, base)))
    decay = 0.0
    for k in range(1, max_exponent + 1):
        for p in (IqPoint.positive(k), IqPoint.negative(k)):
            ev = spherical_az(base, zp, p, tol=tol)
            decay = max(decay, abs(ev.value - 1.0) * abs(sym.eval(p, base)))
    return ApproxIdentityGap(max(unit, decay), unit, decay)


def _ratio_pole_guard(base: QBase, lam: complex, depth: int) -> None:
    q2 = base.q * base.q
    lam2 = lam * lam
    if abs(lam2 - 1.0) <= EPS_POLE:
        raise PoleGuardError("lam**2 within the guard band of 1")
    # Unpaired denominator zeros of the stable grouping: the head factor
    # (1 + q/lam) vanishes at lam = -q (lam**2 = q**2), the tail factors
    # at lam**2 = q**(2i), 2 <= i <= depth - 1.
    j = _near_power(lam2, q2, lo=1, hi=depth - 1) if depth >= 2 else None
    if j is not None:
        raise PoleGuardError(
            f"lam**2 within {EPS_POLE} of q**({2 * j}): denominator zero"
        )


def pochhammer_ratio(base: QBase, lam: complex, k: int | float,
                     trunc_K: int = RATIO_TRUNC_K) -> complex:
    """Stable evaluation of ``(q/lam; q^2)_k^2 / (1/lam^2; q^2)_k``.

    The naive quotient loses all precision as ``lam -> q`` because the
    leading factors of numerator and denominator separately blow up or
    vanish; grouping each numerator factor against its denominator
    partner keeps every intermediate bounded:

    * k = 1: ``(1 - q/lam)^2 / (1 - 1/lam^2)``.
    * k >= 2: ``(1 - q/lam) / (1 + q/lam) * prod_{i=1}^{k-1}
      (1 - q^{1+2i}/lam)^2 / [(1 - 1/lam^2) prod_{i=2}^{k-1}
      (1 - q^{2i}/lam^2)]``.

    ``k = math.inf`` truncates the products at ``trunc_K`` factors,
    after which the remaining factors are 1 to double precision on the
    documented parameter window.
    """
    q = base.q
    if lam == 0:
        raise InvalidArgumentError("lam must be nonzero")
    is_inf = k == math.inf
    if not is_inf:
        if not isinstance(k, int) or k < 1:
            raise InvalidArgumentError("k must be a positive integer or math.inf")
    K = trunc_K if is_inf else int(k)
    _ratio_pole_guard(base, lam, K)
    if K == 1:
        return (1.0 - q / lam) ** 2 / (1.0 - 1.0 / lam ** 2)
    head = (1.0 - q / lam) / (1.0 + q / lam)
    num = 1.0 + 0.0j
    for i in range(1, K):
        num *= (1.0 - q ** (1 + 2 * i) / lam) ** 2
    den = 1.0 - 1.0 / lam ** 2
    for i in range(2, K):
        den *= 1.0 - q ** (2 * i) / lam ** 2
    return head * num / den


def pochhammer_ratio_naive(base: QBase, lam: complex, k: int) -> complex:
    """Reference quotient of plain finite products (finite k only).

    Agrees with :func:`pochhammer_ratio` away from the pole set; used
    to cross-check the stable grouping.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError("k must be a positive integer")
    q2 = base.q * base.q
    num = qpoch_finite(base.q / lam, q2, k)
    den = qpoch_finite(1.0 / lam ** 2, q2, k)
    if den == 0:
        raise PoleGuardError("naive denominator vanished")
    return num ** 2 / den
