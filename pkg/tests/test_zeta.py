"""Euler-Maclaurin zeta and the functional-equation residual."""

import mpmath
import pytest

from lfclass.errors import PoleError
from lfclass.zeta import fe_residual_zeta2, gamma_zeta2, zeta_em


def test_zeta_two():
    with mpmath.workprec(300):
        assert abs(zeta_em(2) - mpmath.pi ** 2 / 6) < mpmath.mpf(10) ** -80


def test_zeta_minus_one():
    with mpmath.workprec(300):
        assert abs(zeta_em(-1) + mpmath.mpf(1) / 12) < mpmath.mpf(10) ** -80


def test_zeta_near_first_zero():
    with mpmath.workprec(120):
        assert abs(zeta_em(mpmath.mpc(0.5, 14.134725))) < 1e-6


def test_zeta_matches_mpmath_off_line():
    with mpmath.workprec(260):
        for s in (mpmath.mpc(0.3, 2), mpmath.mpc(-2.5, 17),
                  mpmath.mpc(4, -60)):
            assert abs(zeta_em(s) - mpmath.zeta(s)) \
                < mpmath.mpf(10) ** -70 * (1 + abs(mpmath.zeta(s)))


def test_zeta_pole():
    with pytest.raises(PoleError):
        zeta_em(1)
    with pytest.raises(PoleError):
        zeta_em(1 + 1e-9j)


def test_fe_residual_small_on_samples():
    for s in (mpmath.mpc(0.3, 2), mpmath.mpc(0.5, 5), mpmath.mpc(0.5, 0)):
        assert abs(fe_residual_zeta2(s)) < mpmath.mpf(10) ** -100


def test_fe_residual_pole_guard():
    with pytest.raises(PoleError):
        fe_residual_zeta2(1)
    with pytest.raises(PoleError):
        fe_residual_zeta2(0)  # Gamma(s/2) pole


def test_gamma_zeta2_reflection_consistency():
    # gamma(s) zeta(s)^2 must equal gamma(1-s) zeta(1-s)^2 numerically
    with mpmath.workprec(200):
        s = mpmath.mpc(0.25, 3)
        lhs = gamma_zeta2(s) * mpmath.zeta(s) ** 2
        rhs = gamma_zeta2(1 - s) * mpmath.zeta(1 - s) ** 2
        assert abs(lhs - rhs) < mpmath.mpf(10) ** -50 * (1 + abs(lhs))
