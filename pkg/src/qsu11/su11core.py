"""Spherical-type coefficient families on a two-sided geometric lattice.

The objects here live on the discrete set ``{+q^k : k integer} union
{-q^k : k >= 1}``.  The module provides the structural maps on that
set, the spectral parametrisation ``z -> lam = q^z``, the spherical
coefficient ``a_z`` at each point, and the averaged coefficient
families whose limits the verification suites check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InvalidArgumentError, PoleGuardError
from .qcalculus import (
    EPS_POLE,
    QBase,
    SeriesEval,
    _near_power,
    phi21_continued,
    phi21_direct,
    phi21_heine,
    qpoch_multi,
    qpoch_signed,
)

__all__ = [
    "IqPoint",
    "StructuralMaps",
    "SpectralParam",
    "structural_maps",
    "spherical_az",
    "coamen_coeff",
    "averaged_coamen",
]


@dataclass(frozen=True)
class IqPoint:
    """A classical point ``sign * q**exponent`` of the disc spectrum.

    ``sign`` is +1 or -1; negative points require ``exponent >= 1``
    (the negative branch starts at ``-q``).
    """

    sign: int
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise InvalidArgumentError("sign must be +1 or -1")
        if self.sign < 0 and self.exponent < 1:
            raise InvalidArgumentError("negative points require exponent >= 1")

    @classmethod
    def positive(cls, exponent: int) -> "IqPoint":
        return cls(1, exponent)

    @classmethod
    def negative(cls, exponent: int) -> "IqPoint":
        return cls(-1, exponent)

    def value(self, base: QBase) -> float:
        return self.sign * base.q ** self.exponent

    def shifted(self, steps: int) -> "IqPoint":
        """The point with exponent increased by ``steps`` (same sign)."""
        return IqPoint(self.sign, self.exponent + steps)


@dataclass(frozen=True)
class StructuralMaps:
    """Values of the structural maps at one point.

    ``kappa = sign * q**(2 exponent)`` (signed square), ``chi`` is the
    integer exponent itself, and ``nu = q**((chi-1)(chi-2)/2)``.
    """

    value: float
    kappa: float
    chi: int
    nu: float


def nu_exponent(k: int) -> int:
    """Integer exponent of ``nu`` at ``+-q^k``: (k-1)(k-2)/2 exactly."""
    return (k - 1) * (k - 2) // 2


def structural_maps(p: IqPoint, base: QBase) -> StructuralMaps:
    """Evaluate value, kappa, chi, nu at ``p`` with exact exponent arithmetic."""
    q = base.q
    k = p.exponent
    return StructuralMaps(
        value=p.sign * q ** k,
        kappa=p.sign * q ** (2 * k),
        chi=k,
        nu=q ** nu_exponent(k),
    )


@dataclass(frozen=True)
class SpectralParam:
    """Spectral parameter ``z`` with its derived quantities.

    ``lam = q**z`` computed after reducing ``Im z`` modulo the imaginary
    period ``2 pi / |log q|`` (so equal-by-period parameters produce
    bit-identical values), and ``x = (lam + 1/lam) / 2``.
    """

    z: complex
    lam: complex
    x: complex

    @classmethod
    def from_z(cls, z: complex, base: QBase) -> "SpectralParam":
        zc = complex(z)
        y = math.remainder(zc.imag, base.period)
        mag = math.exp(zc.real * base.log_q)
        theta = y * base.log_q
        lam = complex(mag * math.cos(theta), mag * math.sin(theta))
        return cls(zc, lam, (lam + 1.0 / lam) / 2.0)


def _series_rel(ev: SeriesEval) -> float:
    if ev.value == 0:
        return 0.0
    return ev.tail_bound / abs(ev.value) if math.isfinite(ev.tail_bound) else math.inf


def _case3(base: QBase, lam: complex, k: int, tol: float,
           max_terms: int) -> SeriesEval:
    """Coefficient at the negative point -q^k (k >= 1).

    The printed closed form is a 0 * inf expression: an overall factor
    vanishes while the same product sits in both bracket denominators.
    That common factor is cancelled analytically here, leaving

    value = p0^2 nu^2 cq^2 (q^{2k}; q^2)_inf (q^2; q^2)_inf^2
            * (-lam q^{3-2k}, -q^{2k-1}/lam; q^2)_inf
              / (q^{2k-1}/lam, lam q^{3-2k}; q^2)_inf
            * (T1 + T2)

    with the bracket terms

    T1 = (lam q, lam q, q^{3-2k}/lam, lam q^{2k-1}; q^2)_inf
         / (q^2, lam^2, q^{2k}; q^2)_inf
         * 2phi1(q/lam, q/lam; q^2/lam^2; q^2, q^{2k})

    and T2 = T1 with lam -> 1/lam.  The overall sign is +: the source
    display carries a minus sign that its own limit value contradicts.
    """
    q = base.q
    q2 = q * q
    lam2 = lam * lam
    j = _near_power(lam2, q2)
    if j is not None:
        raise PoleGuardError(
            f"lam**2 within {EPS_POLE} of q**({2 * j}); closed form is singular"
        )
    part_tol = tol / 16.0
    mk = q ** (2 * k)

    pref_scalar = q ** (2 * k + 2 * nu_exponent(k)) * base.cq ** 2
    pref_num = qpoch_multi(
        [mk, q2, q2, -lam * q ** (3 - 2 * k), -q ** (2 * k - 1) / lam],
        q2, part_tol,
    )
    pref_den = qpoch_multi(
        [q ** (2 * k - 1) / lam, lam * q ** (3 - 2 * k)], q2, part_tol
    )
    if pref_den.degenerate or pref_den.value == 0:
        raise PoleGuardError("negative-point prefactor denominator vanished")

    used = pref_num.terms_used + pref_den.terms_used
    rel_pref = (1.0 + _series_rel(pref_num)) * (1.0 + _series_rel(pref_den)) - 1.0
    pref = pref_scalar * pref_num.value / pref_den.value

    total = 0.0 + 0.0j
    tail = 0.0
    for u, u2 in ((lam, lam2), (1.0 / lam, 1.0 / lam2)):
        num = qpoch_multi(
            [u * q, u * q, q ** (3 - 2 * k) / u, u * q ** (2 * k - 1)],
            q2, part_tol,
        )
        den = qpoch_multi([q2, u2, mk], q2, part_tol)
        if den.degenerate or den.value == 0:
            raise PoleGuardError("negative-point bracket denominator vanished")
        inner = phi21_direct(q / u, q / u, q2 / u2, q2, mk,
                             tol=part_tol, max_terms=max_terms)
        term = num.value / den.value * inner.value
        rel = (1.0 + _series_rel(num)) * (1.0 + _series_rel(den)) \
            * (1.0 + _series_rel(inner)) - 1.0
        total += term
        tail += abs(term) * rel
        used += num.terms_used + den.terms_used + inner.terms_used

    value = pref * total
    tail_total = abs(pref) * tail + abs(value) * rel_pref
    return SeriesEval(value, used, tail_total)


def spherical_az(base: QBase, zp: SpectralParam, p0: IqPoint,
                 tol: float = 1e-12, max_terms: int = 200) -> SeriesEval:
    """Spherical coefficient ``a_z(p0)`` of the averaged vector states.

    Dispatch by the location of ``p0``:

    * ``p0 = +q^k, k <= 0``: convergent series
      ``2phi1(q/lam, lam q; q^2; q^2, -q^{2-2k})``.
    * ``p0 = +q^k, k >= 1``: the same function continued past the
      convergence disc (two-term continuation, see
      :func:`qsu11.qcalculus.phi21_continued`).
    * ``p0 = -q^k, k >= 1``: the cancelled closed form at negative
      points (see module source for the exact product expression).

    The continued cases are refused (:class:`PoleGuardError`) when
    ``lam**2`` sits within the guard band around ``q**(2 Z)``; the
    convergent case has no such restriction.
    """
    q = base.q
    lam = zp.lam
    if lam == 0:
        raise InvalidArgumentError("lam must be nonzero")
    k = p0.exponent
    if p0.sign > 0 and k <= 0:
        return phi21_direct(q / lam, lam * q, q * q, q * q,
                            -q ** (2 - 2 * k), tol=tol, max_terms=max_terms)
    if p0.sign > 0:
        return phi21_continued(lam, q ** (2 * k), base,
                               tol=tol, max_terms=max_terms)
    return _case3(base, lam, k, tol, max_terms)


def coamen_coeff(base: QBase, m: int, lam: complex, p1: IqPoint,
                 form: str = "simplified", tol: float = 1e-12,
                 max_terms: int = 200) -> SeriesEval:
    """Matrix coefficient of the averaged states against weight shift m.

    For ``p1 = q^L`` (positive points only) the simplified form is

    ``sqrt((-q^e; q^2)_{2m}) * 2phi1(-q^{1+2m}/lam, -lam q^{1+2m};
    q^2; q^2, -q^e)`` with ``e = 2 - 2L - 4m``,

    and the raw form is the unsimplified product expression

    ``q^{2L + 2m + nu_exp(L) + nu_exp(L+2m)} cq^2
    sqrt((-q^{2L}, -q^{2L+4m}; q^2)_inf)
    (q^2; q^2)_inf^2 (-q^e; q^2)_inf * [same 2phi1]``,

    which agrees with the simplified one identically; the verification
    suites check that agreement numerically.

    For ``e <= 0`` the series argument leaves the unit disc and the
    evaluation routes through the small-parameter continuation
    (:func:`qsu11.qcalculus.phi21_heine`), which needs
    ``|lam| q^{1+2m} < 1``.
    """
    if p1.sign < 0:
        raise InvalidArgumentError("coamen_coeff is defined at positive points")
    if form not in ("simplified", "raw"):
        raise InvalidArgumentError(f"unknown form {form!r}")
    q = base.q
    q2 = q * q
    L = p1.exponent
    e = 2 - 2 * L - 4 * m
    a = -q ** (1 + 2 * m) / lam
    b = -lam * q ** (1 + 2 * m)
    z = -q ** e

    if e > 0:
        series = phi21_direct(a, b, q2, q2, z, tol=tol, max_terms=max_terms)
    else:
        series = phi21_heine(a, b, q2, q2, z, tol=tol, max_terms=max_terms)

    if form == "simplified":
        pref = cmath.sqrt(qpoch_signed(-q ** e, q2, 2 * m))
        value = pref * series.value
        return SeriesEval(value, series.terms_used,
                          abs(pref) * series.tail_bound)

    part_tol = tol / 16.0
    scalar = q ** (2 * L + 2 * m + nu_exponent(L) + nu_exponent(L + 2 * m)) \
        * base.cq ** 2
    root = qpoch_multi([-q ** (2 * L), -q ** (2 * L + 4 * m)], q2, part_tol)
    rest = qpoch_multi([q2, q2, -q ** e], q2, part_tol)
    pref = scalar * cmath.sqrt(root.value) * rest.value
    value = pref * series.value
    rel = (1.0 + 0.5 * _series_rel(root)) * (1.0 + _series_rel(rest)) \
        * (1.0 + _series_rel(series)) - 1.0
    used = series.terms_used + root.terms_used + rest.terms_used
    return SeriesEval(value, used, abs(value) * rel)


def averaged_coamen(base: QBase, n: int, p1: IqPoint, m: int, lam: complex,
                    tol: float = 1e-12, max_terms: int = 200) -> SeriesEval:
    """Average of ``coamen_coeff`` over the spectral window of width n.

    Sums the coefficient at the points ``p1 q^e`` for e from
    ``n - 2|m|`` down to ``-n`` (``2(n - |m|) + 1`` summands; the
    remaining ``2|m|`` window slots carry no weight) and divides by
    ``2n + 1``.
    """
    if n < 0:
        raise InvalidArgumentError("n must be >= 0")
    if abs(m) > n:
        raise InvalidArgumentError("|m| must not exceed n")
    total = 0.0 + 0.0j
    tail = 0.0
    used = 0
    for e in range(n - 2 * abs(m), -n - 1, -1):
        ev = coamen_coeff(base, m, lam, p1.shifted(e), tol=tol,
                          max_terms=max_terms)
        total += ev.value
        tail += ev.tail_bound
        used += ev.terms_used
    w = 1.0 / (2 * n + 1)
    return SeriesEval(total * w, used, tail * w)
