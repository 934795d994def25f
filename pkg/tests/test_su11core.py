"""Unit tests for the spectrum points and matrix-coefficient evaluators."""

import cmath
import math

import pytest

from qsu11 import (
    InvalidArgumentError,
    IqPoint,
    PoleGuardError,
    QBase,
    SpectralParam,
    averaged_coamen,
    coamen_coeff,
    phi21_continued,
    phi21_direct,
    spherical_az,
    structural_maps,
)
from qsu11.su11core import nu_exponent

B = QBase(0.5)


class TestIqPoint:
    def test_positive_any_exponent(self):
        for k in (-5, 0, 3):
            p = IqPoint.positive(k)
            assert p.sign == 1 and p.exponent == k

    def test_negative_needs_positive_exponent(self):
        assert IqPoint.negative(1).value(B) == -0.5
        for k in (0, -1):
            with pytest.raises(InvalidArgumentError):
                IqPoint.negative(k)

    def test_bad_sign(self):
        with pytest.raises(InvalidArgumentError):
            IqPoint(2, 0)

    def test_value_and_shift(self):
        p = IqPoint.positive(-2)
        assert p.value(B) == 4.0
        assert p.shifted(3) == IqPoint.positive(1)
        assert IqPoint.negative(2).shifted(-1) == IqPoint.negative(1)


class TestStructuralMaps:
    def test_nu_exponent_table(self):
        assert [nu_exponent(k) for k in (-1, 0, 1, 2, 3, 5)] == [3, 1, 0, 0, 1, 6]

    def test_unit_point(self):
        sm = structural_maps(IqPoint.positive(0), B)
        assert (sm.value, sm.kappa, sm.chi, sm.nu) == (1.0, 1.0, 0, 0.5)

    def test_positive_point(self):
        sm = structural_maps(IqPoint.positive(2), B)
        assert (sm.value, sm.kappa, sm.chi, sm.nu) == (0.25, 0.0625, 2, 1.0)

    def test_negative_point(self):
        sm = structural_maps(IqPoint.negative(1), B)
        assert (sm.value, sm.kappa, sm.chi, sm.nu) == (-0.5, -0.25, 1, 1.0)


class TestSpectralParam:
    def test_real_z_gives_real_lambda(self):
        zp = SpectralParam.from_z(0.37, B)
        assert zp.lam.imag == 0.0
        assert zp.lam.real == pytest.approx(0.5 ** 0.37, rel=1e-15)

    def test_x_is_symmetrised_lambda(self):
        zp = SpectralParam.from_z(0.3 + 0.9j, B)
        assert zp.x == (zp.lam + 1.0 / zp.lam) / 2.0

    @pytest.mark.parametrize("mult", [1, 2, 4])
    def test_period_reduction_is_bit_exact(self, mult):
        z = 0.35
        a = SpectralParam.from_z(complex(z, 0.0), B)
        b = SpectralParam.from_z(complex(z, mult * B.period), B)
        assert a.lam == b.lam

    def test_unitary_range_modulus_one(self):
        zp = SpectralParam.from_z(1.23j, B)
        assert abs(zp.lam) == pytest.approx(1.0, rel=1e-15)


class TestSphericalCase1:
    @pytest.mark.parametrize("k", range(-6, 1))
    def test_exact_one_at_endpoint(self, k):
        zp = SpectralParam.from_z(1.0, B)
        ev = spherical_az(B, zp, IqPoint.positive(k))
        assert ev.value == 1.0
        assert ev.tail_bound == 0.0

    def test_matches_direct_series(self):
        zp = SpectralParam.from_z(0.7, B)
        lam = zp.lam
        q = B.q
        ev = spherical_az(B, zp, IqPoint.positive(-2))
        ref = phi21_direct(q / lam, lam * q, q * q, q * q, -q ** 6)
        assert ev.value == ref.value

    def test_no_pole_guard_needed(self):
        # lam = 1 sits on the continuation pole set but Case 1 is direct
        zp = SpectralParam.from_z(0.0, B)
        ev = spherical_az(B, zp, IqPoint.positive(0))
        assert math.isfinite(abs(ev.value))


class TestSphericalCase2:
    def test_matches_continuation(self):
        zp = SpectralParam.from_z(0.7, B)
        ev = spherical_az(B, zp, IqPoint.positive(3))
        ref = phi21_continued(zp.lam, B.q ** 6, B)
        assert ev.value == ref.value

    def test_near_limit_value(self):
        zp = SpectralParam.from_z(0.999, B)
        ev = spherical_az(B, zp, IqPoint.positive(3))
        assert abs(ev.value - 1.0) < 5e-3

    def test_pole_guard_at_integer_z(self):
        zp = SpectralParam.from_z(0.0, B)
        with pytest.raises(PoleGuardError):
            spherical_az(B, zp, IqPoint.positive(2))


class TestSphericalCase3:
    def test_near_limit_value(self):
        zp = SpectralParam.from_z(0.999, B)
        ev = spherical_az(B, zp, IqPoint.negative(2))
        assert abs(ev.value - 1.0) < 0.05

    def test_tighter_limit_chain(self):
        devs = []
        for z in (0.9, 0.99, 0.999):
            zp = SpectralParam.from_z(z, B)
            devs.append(abs(spherical_az(B, zp, IqPoint.negative(3)).value - 1.0))
        assert devs[0] > devs[1] > devs[2]
        assert devs[-1] < 5e-3

    def test_pole_guard_at_integer_z(self):
        zp = SpectralParam.from_z(1.0, B)
        with pytest.raises(PoleGuardError):
            spherical_az(B, zp, IqPoint.negative(1))


class TestSphericalShared:
    def test_zero_lambda_rejected(self):
        zp = SpectralParam(0.0, 0.0, 0.0)
        with pytest.raises(InvalidArgumentError):
            spherical_az(B, zp, IqPoint.positive(0))

    @pytest.mark.parametrize("p", [IqPoint.positive(0), IqPoint.positive(3),
                                   IqPoint.negative(2)])
    def test_periodicity_is_exact(self, p):
        za = SpectralParam.from_z(complex(0.35, 0.0), B)
        zb = SpectralParam.from_z(complex(0.35, 2 * B.period), B)
        assert spherical_az(B, za, p).value == spherical_az(B, zb, p).value

    @pytest.mark.parametrize("p", [IqPoint.positive(-3), IqPoint.positive(0),
                                   IqPoint.positive(2), IqPoint.negative(1)])
    def test_real_values_on_real_z(self, p):
        zp = SpectralParam.from_z(0.5, B)
        assert abs(spherical_az(B, zp, p).value.imag) < 1e-10


class TestCoamenCoeff:
    def test_m_zero_is_bare_series(self):
        lam = cmath.exp(0.4j)
        ev = coamen_coeff(B, 0, lam, IqPoint.positive(-3))
        q = B.q
        ref = phi21_direct(-q / lam, -lam * q, q * q, q * q, -q ** 8)
        assert ev.value == ref.value

    def test_negative_point_rejected(self):
        with pytest.raises(InvalidArgumentError):
            coamen_coeff(B, 0, 1.0, IqPoint.negative(2))

    def test_unknown_form_rejected(self):
        with pytest.raises(InvalidArgumentError):
            coamen_coeff(B, 0, 1.0, IqPoint.positive(0), form="compact")

    def test_raw_matches_simplified_deep_cell(self):
        raw = coamen_coeff(B, 1, 1.0, IqPoint.positive(-5), form="raw")
        simp = coamen_coeff(B, 1, 1.0, IqPoint.positive(-5))
        assert abs(raw.value - simp.value) / abs(simp.value) < 1e-9

    @pytest.mark.parametrize("m", [-2, 0, 2])
    @pytest.mark.parametrize("j", [0, 3])
    def test_raw_matches_simplified_grid(self, m, j):
        lam = cmath.exp(0.4j)
        raw = coamen_coeff(B, m, lam, IqPoint.positive(-j), form="raw")
        simp = coamen_coeff(B, m, lam, IqPoint.positive(-j))
        scale = max(abs(raw.value), abs(simp.value))
        assert abs(raw.value - simp.value) / scale < 1e-9

    def test_bound_cell(self):
        devs = []
        for j in (2, 4, 8):
            ev = coamen_coeff(B, 0, 1.0, IqPoint.positive(-j))
            dev = abs(ev.value - 1.0)
            assert dev < B.q ** (2 * j - 1)
            devs.append(dev)
        assert devs[0] > devs[1] > devs[2]

    def test_large_argument_cell_routes_through_continuation(self):
        # m = 1, j = 0 gives series argument of modulus q^{-2} > 1
        ev = coamen_coeff(B, 1, 1.0, IqPoint.positive(0))
        assert math.isfinite(abs(ev.value))
        assert math.isfinite(ev.tail_bound)


class TestAveragedCoamen:
    def test_single_cell_window(self):
        lam = cmath.exp(0.4j)
        avg = averaged_coamen(B, 0, IqPoint.positive(-4), 0, lam)
        single = coamen_coeff(B, 0, lam, IqPoint.positive(-4))
        assert avg.value == single.value

    def test_window_sum_matches_manual(self):
        p1 = IqPoint.positive(-6)
        n, m = 2, 1
        avg = averaged_coamen(B, n, p1, m, 1.0)
        total = sum(coamen_coeff(B, m, 1.0, p1.shifted(e)).value
                    for e in range(n - 2 * abs(m), -n - 1, -1))
        assert avg.value == pytest.approx(total / (2 * n + 1), rel=1e-14)

    def test_window_validation(self):
        with pytest.raises(InvalidArgumentError):
            averaged_coamen(B, 1, IqPoint.positive(0), 2, 1.0)
        with pytest.raises(InvalidArgumentError):
            averaged_coamen(B, -1, IqPoint.positive(0), 0, 1.0)

    def test_triangle_bound(self):
        p1 = IqPoint.positive(-8)
        n, m = 3, 1
        avg = averaged_coamen(B, n, p1, m, 1.0)
        worst = max(abs(coamen_coeff(B, m, 1.0, p1.shifted(e)).value)
                    for e in range(n - 2 * abs(m), -n - 1, -1))
        assert abs(avg.value) <= worst + 1e-12

    def test_chain_decreases(self):
        d1 = abs(averaged_coamen(B, 5, IqPoint.positive(-10), 0, 1.0).value - 1.0)
        d2 = abs(averaged_coamen(B, 10, IqPoint.positive(-20), 0, 1.0).value - 1.0)
        assert d2 < d1
