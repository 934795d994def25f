"""q-Pochhammer products, a theta-product identity, and 2phi1 evaluators.

All operations work at a fixed real deformation parameter in (0, 1).
Series and products return a :class:`SeriesEval` carrying the value
together with an a-posteriori tail bound, so callers can propagate
honest accuracy estimates instead of trusting a black box.

Conventions
-----------
* ``(a; b)_k``   : finite product of ``(1 - a b^i)`` for ``i < k``.
* ``(a; b)_inf`` : the infinite product, truncated once the remaining
  factors are provably within the requested relative tolerance.
* ``2phi1(a, b; c; base, z)`` : sum over k >= 0 of
  ``(a; base)_k (b; base)_k / ((c; base)_k (base; base)_k) * z^k``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from ._kernels import phi21_kernel, qpoch_finite_kernel, qpoch_infinite_kernel
from .errors import (
    DivergentSeriesError,
    InvalidArgumentError,
    PoleGuardError,
    PoleInCError,
)

__all__ = [
    "EPS_POLE",
    "QBase",
    "SeriesEval",
    "ThetaPair",
    "qpoch_finite",
    "qpoch_signed",
    "qpoch_infinite",
    "qpoch_multi",
    "theta_pair",
    "phi21_direct",
    "phi21_continued",
    "phi21_heine",
]

#: Relative half-width of the guard band around pole sets.  Parameters
#: within this relative distance of a pole (or of a terminating value)
#: are snapped onto it or refused, never evaluated "nearby".
EPS_POLE = 1e-9

#: Floor used when normalising residuals of near-zero quantities.
_RESIDUAL_FLOOR = 1e-300

#: Hard cap on accumulated product factors, whatever the tolerance.
_MAX_FACTORS = 2_000_000

BaseLike = Union["QBase", float]


def _base_value(base: BaseLike) -> float:
    q = base.q if isinstance(base, QBase) else float(base)
    if not (0.0 < q < 1.0):
        raise InvalidArgumentError(f"base must lie in (0, 1), got {q!r}")
    return q


@dataclass(frozen=True)
class QBase:
    """A deformation parameter with its derived constants.

    Attributes
    ----------
    q : float
        The deformation parameter, strictly between 0 and 1.
    log_q : float
        Natural logarithm of ``q`` (negative).
    cq : float
        The positive normalisation constant defined by
        ``cq**(-2) = 2 q^2 (q^2; q^2)_inf^2 (-q^2; q^2)_inf^2``,
        i.e. ``cq = 1 / (sqrt(2) q (q^2; q^2)_inf (-q^2; q^2)_inf)``.
    """

    q: float
    log_q: float = field(init=False, repr=False)
    cq: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not (0.0 < self.q < 1.0):
            raise InvalidArgumentError(f"q must lie in (0, 1), got {self.q!r}")
        object.__setattr__(self, "log_q", math.log(self.q))
        q2 = self.q * self.q
        cutoff = 1e-16 * (1.0 - q2) / 4.0
        p1, _, _, _ = qpoch_infinite_kernel(complex(q2), q2, cutoff, _MAX_FACTORS)
        p2, _, _, _ = qpoch_infinite_kernel(complex(-q2), q2, cutoff, _MAX_FACTORS)
        object.__setattr__(
            self, "cq", 1.0 / (math.sqrt(2.0) * self.q * p1.real * p2.real)
        )

    @property
    def period(self) -> float:
        """Imaginary period ``2 pi / |log q|`` of the spectral maps."""
        return 2.0 * math.pi / abs(self.log_q)


@dataclass(frozen=True)
class SeriesEval:
    """Value of a truncated series or product with accuracy metadata.

    Attributes
    ----------
    value : complex
        The computed value.
    terms_used : int
        Number of series terms / product factors consumed.  At least 1
        whenever the series is nonempty.
    tail_bound : float
        Upper bound on the modulus of the discarded remainder
        (absolute, not relative).  ``math.inf`` signals that the
        evaluator ran out of terms before certifying convergence.
    degenerate : bool
        True when a product factor vanished exactly, making the value
        exactly zero with no truncation error.
    """

    value: complex
    terms_used: int
    tail_bound: float
    degenerate: bool = False


@dataclass(frozen=True)
class ThetaPair:
    """Both sides of the theta-product shift identity plus their residual.

    ``residual`` is relative (normalised by the larger modulus) unless
    ``absolute`` is set, which happens when the parameter sits inside
    the guard band around a zero of both sides; there the relative
    residual is ill-conditioned and the plain difference is reported.
    """

    lhs: complex
    rhs: complex
    residual: float
    absolute: bool = False


def _near_power(x: complex, base: float, eps: float = EPS_POLE,
                lo: int | None = None, hi: int | None = None) -> int | None:
    """Return integer j with |x - base**j| <= eps * base**j, else None.

    The candidate j is located from log|x| and its two neighbours are
    checked, so the scan is O(1).  ``lo``/``hi`` optionally restrict the
    admissible exponent range (inclusive).
    """
    if x == 0:
        return None
    r = abs(x)
    t = math.log(r) / math.log(base)
    for j in (math.floor(t), math.ceil(t), math.floor(t) - 1, math.ceil(t) + 1):
        if lo is not None and j < lo:
            continue
        if hi is not None and j > hi:
            continue
        p = base ** j
        if p > 0 and math.isfinite(p) and abs(x - p) <= eps * p:
            return j
    return None


def _near_inv_power(x: complex, base: float, eps: float = EPS_POLE) -> int | None:
    """Return n >= 0 with x within eps (relative) of base**(-n), else None."""
    j = _near_power(x, base, eps, hi=0)
    return -j if j is not None else None


def qpoch_finite(a: complex, base: BaseLike, k: int) -> complex:
    """Finite q-Pochhammer product ``(a; base)_k``.

    Parameters
    ----------
    a : complex
    base : QBase or float in (0, 1)
    k : int, >= 0
    """
    b = _base_value(base)
    if k < 0:
        raise InvalidArgumentError("qpoch_finite requires k >= 0; use qpoch_signed")
    return qpoch_finite_kernel(complex(a), b, int(k))


def qpoch_signed(a: complex, base: BaseLike, k: int) -> complex:
    """Pochhammer product ``(a; base)_k`` for any integer k.

    Negative indices follow the reciprocal convention
    ``(a; b)_{-n} = 1 / (a b^{-n}; b)_n``.
    """
    b = _base_value(base)
    if k >= 0:
        return qpoch_finite_kernel(complex(a), b, int(k))
    n = -int(k)
    denom = qpoch_finite_kernel(complex(a) * b ** (-n), b, n)
    if denom == 0:
        raise PoleGuardError("reciprocal Pochhammer hit a vanishing factor")
    return 1.0 / denom


def qpoch_infinite(a: complex, base: BaseLike, tol: float = 1e-12) -> SeriesEval:
    """Infinite q-Pochhammer product ``(a; base)_inf``.

    Factors are accumulated until the first index K with
    ``|a| base^K < tol (1 - base) / 4``; the discarded tail then has
    relative modulus at most ``exp(|a| base^K / (1 - base)) - 1 <= tol``
    (comfortably, for tol <= 1).  ``tail_bound`` is that bound times the
    returned modulus, i.e. an absolute bound.

    At least one factor is always consumed, so ``terms_used >= 1`` even
    for ``a = 0``.
    """
    b = _base_value(base)
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    cutoff = tol * (1.0 - b) / 4.0
    az = abs(a)
    if az <= cutoff:
        cap = 1
    else:
        cap = int(math.ceil((math.log(cutoff) - math.log(az)) / math.log(b))) + 2
        cap = min(max(cap, 1), _MAX_FACTORS)
    value, used, tail_rel, degen = qpoch_infinite_kernel(complex(a), b, cutoff, cap)
    if degen:
        return SeriesEval(value, used, 0.0, degenerate=True)
    return SeriesEval(value, used, abs(value) * tail_rel)


def qpoch_multi(args: Sequence[complex], base: BaseLike, tol: float = 1e-12) -> SeriesEval:
    """Product of ``(a; base)_inf`` over all ``a`` in ``args``.

    The tolerance is split evenly across the factors; the combined
    relative tail is the compounded product of the per-factor bounds.
    """
    b = _base_value(base)
    n = max(len(args), 1)
    value = 1.0 + 0.0j
    used = 0
    rel = 1.0
    degen = False
    for a in args:
        ev = qpoch_infinite(a, b, tol / n)
        used += ev.terms_used
        if ev.degenerate:
            degen = True
            value = 0.0 + 0.0j
            continue
        rel *= 1.0 + (ev.tail_bound / abs(ev.value) if ev.value != 0 else 0.0)
        value *= ev.value
    if degen:
        return SeriesEval(0.0 + 0.0j, used, 0.0, degenerate=True)
    return SeriesEval(value, used, abs(value) * (rel - 1.0))


def theta_pair(a: complex, k: int, base: BaseLike, tol: float = 1e-12) -> ThetaPair:
    """Evaluate both sides of the theta-product shift identity.

    lhs = ``(a base^k; base)_inf (base^{1-k}/a; base)_inf`` and
    rhs = ``(-a)^{-k} base^{-k(k-1)/2} (a; base)_inf (base/a; base)_inf``
    agree identically in exact arithmetic for ``a != 0`` and integer k.

    When ``a`` lies inside the guard band around some ``base**j`` both
    sides vanish and the relative residual is meaningless; the pair is
    then returned with ``absolute=True`` and an un-normalised residual.
    """
    b = _base_value(base)
    if a == 0:
        raise InvalidArgumentError("theta_pair requires a != 0")
    k = int(k)
    lhs = qpoch_multi([a * b ** k, b ** (1 - k) / a], b, tol)
    rhs_prod = qpoch_multi([a, b / a], b, tol)
    prefac = (-a) ** (-k) * b ** (-k * (k - 1) // 2)
    rhs = prefac * rhs_prod.value
    diff = abs(lhs.value - rhs)
    if _near_power(a, b) is not None:
        return ThetaPair(lhs.value, rhs, diff, absolute=True)
    scale = max(abs(lhs.value), abs(rhs), _RESIDUAL_FLOOR)
    return ThetaPair(lhs.value, rhs, diff / scale)


def phi21_direct(a: complex, b: complex, c: complex, base: BaseLike, z: complex,
                 tol: float = 1e-12, max_terms: int = 200) -> SeriesEval:
    """Direct summation of ``2phi1(a, b; c; base, z)``.

    Behaviour
    ---------
    * If ``c`` is within ``EPS_POLE`` (relative) of ``base**(-j)`` for
      some integer j >= 0, raises :class:`PoleInCError`.
    * If ``a`` or ``b`` is within ``EPS_POLE`` of ``base**(-n)`` for
      some n >= 0, the series terminates: the parameter is treated as
      exactly ``base**(-n)`` and exactly ``n + 1`` terms are summed with
      zero tail.  This keeps unit cases exact (``a = 1`` gives value 1).
    * Otherwise the series must satisfy ``|z| < 1``; if not, raises
      :class:`DivergentSeriesError`.
    * Convergent sums stop once a geometric envelope certifies the
      remaining tail below ``tol`` relative to the partial sum.  If
      ``max_terms`` is exhausted first, the partial sum is returned with
      ``tail_bound = math.inf`` rather than raising.
    """
    bb = _base_value(base)
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    if max_terms < 1:
        raise InvalidArgumentError("max_terms must be >= 1")
    jc = _near_inv_power(c, bb)
    if jc is not None:
        raise PoleInCError(f"c is within {EPS_POLE} of base**(-{jc})")
    na = _near_inv_power(a, bb)
    nb = _near_inv_power(b, bb)
    if na is not None and nb is not None:
        n_exact = min(na, nb)
    elif na is not None:
        n_exact = na
    elif nb is not None:
        n_exact = nb
    else:
        n_exact = -1
        if abs(z) >= 1.0:
            raise DivergentSeriesError(
                f"non-terminating series at |z| = {abs(z)!r} >= 1"
            )
    value, used, tail, status = phi21_kernel(
        complex(a), complex(b), complex(c), bb, complex(z),
        n_exact, tol, int(max_terms),
    )
    return SeriesEval(value, used, tail if status == 0 else math.inf)


def _series_rel(ev: SeriesEval) -> float:
    if ev.value == 0:
        return 0.0
    return ev.tail_bound / abs(ev.value) if math.isfinite(ev.tail_bound) else math.inf


def phi21_continued(lam: complex, kappa: complex, base: QBase,
                    tol: float = 1e-12, max_terms: int = 200) -> SeriesEval:
    """Two-term continuation of the spherical-type series in lambda, kappa.

    Evaluates, for ``q = base.q``, the continuation of
    ``2phi1(q/lam, lam q; q^2; q^2, -q^2/kappa)`` as the symmetric sum
    of two convergent series in the small argument ``-kappa``:

    ``T(lam) + T(1/lam)`` with

    ``T(u) = [(u q, u q, -q^3/(u kappa), -u kappa / q; q^2)_inf /
    (q^2, u^2, -q^2/kappa, -kappa; q^2)_inf]
    * 2phi1(q/u, q/u; q^2/u^2; q^2, -kappa)``.

    Preconditions
    -------------
    * ``0 < |kappa| < 1`` (raises :class:`InvalidArgumentError`).
    * ``lam**2`` at least ``EPS_POLE`` away (relatively) from every even
      power ``q**(2j)``, j integer: the expression has simple poles
      there (raises :class:`PoleGuardError`).
    """
    q = base.q
    q2 = q * q
    if kappa == 0 or abs(kappa) >= 1.0:
        raise InvalidArgumentError("phi21_continued needs 0 < |kappa| < 1")
    if lam == 0:
        raise InvalidArgumentError("lam must be nonzero")
    lam2 = lam * lam
    j = _near_power(lam2, q2)
    if j is not None:
        raise PoleGuardError(
            f"lam**2 within {EPS_POLE} of q**({2 * j}); continuation is singular"
        )

    part_tol = tol / 8.0
    used = 0
    total = 0.0 + 0.0j
    tail = 0.0
    for u in (lam, 1.0 / lam):
        num = qpoch_multi([u * q, u * q, -q2 * q / (u * kappa), -u * kappa / q],
                          q2, part_tol)
        den = qpoch_multi([q2, u * u, -q2 / kappa, -kappa], q2, part_tol)
        if den.degenerate or den.value == 0:
            raise PoleGuardError("continuation prefactor denominator vanished")
        inner = phi21_direct(q / u, q / u, q2 / (u * u), q2, -kappa,
                             tol=part_tol, max_terms=max_terms)
        term = num.value / den.value * inner.value
        rel = (1.0 + _series_rel(num)) * (1.0 + _series_rel(den)) \
            * (1.0 + _series_rel(inner)) - 1.0
        total += term
        tail += abs(term) * rel
        used += num.terms_used + den.terms_used + inner.terms_used
    return SeriesEval(total, used, tail)


def phi21_heine(a: complex, b: complex, c: complex, base: BaseLike, z: complex,
                tol: float = 1e-12, max_terms: int = 200) -> SeriesEval:
    """Continuation of ``2phi1(a, b; c; base, z)`` with small parameter b.

    Uses the classical Heine transformation

    ``2phi1(a, b; c; base, z) = [(b; base)_inf (a z; base)_inf /
    ((c; base)_inf (z; base)_inf)] * 2phi1(c/b, z; a z; base, b)``,

    which converges whenever ``|b| < 1``, extending the series beyond
    ``|z| < 1``.

    Raises
    ------
    InvalidArgumentError
        If ``|b| >= 1``.
    PoleInCError
        If ``c`` or the transformed lower parameter ``a z`` sits on the
        pole lattice ``base**(-j)``, j >= 0.
    PoleGuardError
        If ``z`` sits on ``base**(-j)`` (zero of the denominator
        product, i.e. a genuine pole of the continuation).
    """
    bb = _base_value(base)
    if abs(b) >= 1.0:
        raise InvalidArgumentError("phi21_heine needs |b| < 1")
    if _near_inv_power(c, bb) is not None:
        raise PoleInCError("c on the pole lattice base**(-j)")
    az = a * z
    if _near_inv_power(az, bb) is not None:
        raise PoleInCError("transformed parameter a*z on the pole lattice")
    jz = _near_inv_power(z, bb)
    if jz is not None:
        raise PoleGuardError(f"z within {EPS_POLE} of base**(-{jz}): continuation pole")

    part_tol = tol / 8.0
    num = qpoch_multi([b, az], bb, part_tol)
    den = qpoch_multi([c, z], bb, part_tol)
    if den.degenerate or den.value == 0:
        raise PoleGuardError("Heine prefactor denominator vanished")
    inner = phi21_direct(c / b, z, az, bb, b, tol=part_tol, max_terms=max_terms)
    value = num.value / den.value * inner.value
    rel = (1.0 + _series_rel(num)) * (1.0 + _series_rel(den)) \
        * (1.0 + _series_rel(inner)) - 1.0
    used = num.terms_used + den.terms_used + inner.terms_used
    return SeriesEval(value, used, abs(value) * rel)
