"""Smoothed-twist sums: kernel agreement, determinism, residue fits."""

import numpy as np
import pytest

from lfclass import kernel
from lfclass.coefficients import divisor_source, tau_source
from lfclass.twist import (geometric_grid, residue_fit, smoothed_twist,
                           spectrum_member, truncation_index)


def test_spectrum_membership_divisor():
    src = divisor_source()
    ok, m = spectrum_member(src, 2.0)
    assert ok and m == 1
    ok, m = spectrum_member(src, 1.0)
    assert not ok
    for m in range(1, 101):
        ok, got = spectrum_member(src, 2.0 * m ** 0.5)
        assert ok and got == m   # d(m) never vanishes


def test_spectrum_membership_tau():
    src = tau_source()
    ok, m = spectrum_member(src, 2.0 * 2 ** 0.5)
    assert ok and m == 2


def test_kernels_agree():
    d = divisor_source().values(200000)
    a = kernel.twist_sum(d, 2.0, 8000.0)
    b = kernel.twist_sum(d, 2.0, 8000.0, force_python=True)
    assert abs(a - b) < 1e-10 * (1 + abs(a))


def test_kernel_float_path_agrees():
    rng = np.random.default_rng(7)
    c = rng.standard_normal(50000)
    a = kernel.twist_sum(c, 1.3, 2000.0)
    b = kernel.twist_sum(c, 1.3, 2000.0, force_python=True)
    assert abs(a - b) < 1e-10 * (1 + abs(a))


def test_kernel_deterministic():
    d = divisor_source().values(100000)
    runs = {kernel.twist_sum(d, 2.0, 4000.0) for _ in range(3)}
    assert len(runs) == 1


def test_truncation_sanity_small_X():
    # X -> 0: the first term dominates
    src = divisor_source()
    val = smoothed_twist(src, 2.0, 0.05, n_cut=50)
    import cmath, math
    first = cmath.exp(-2j * math.pi * 2.0) * math.exp(-1 / 0.05)
    assert abs(val - first) < abs(first) * 1e-6


def test_leading_term_scaling():
    # fitted X^(3/4) coefficient: S(4X)/S(X) ~ 4^(3/4)
    src = divisor_source()
    e = residue_fit(src, 2.0, geometric_grid(2e3, 2e5, 7),
                    d_values=(1.0, -0.125))
    s1 = e.fitted[0] * 1e5 ** 0.75
    s2 = e.fitted[0] * 4e5 ** 0.75
    assert abs(s2 / s1) == pytest.approx(4 ** 0.75, rel=1e-12)
    assert e.rel_err_c0 < 0.02
    assert e.rel_err_c1 < 0.20


def test_off_spectrum_null():
    src = divisor_source()
    e = residue_fit(src, 1.0, geometric_grid(2e3, 2e5, 7),
                    require_spectrum=False)
    assert e.rel_err_c0 < 0.02


def test_residue_fit_requires_spectrum():
    with pytest.raises(ValueError):
        residue_fit(divisor_source(), 1.0, geometric_grid(1e3, 1e5, 6))


def test_residue_fit_needs_enough_points():
    with pytest.raises(ValueError):
        residue_fit(divisor_source(), 2.0, [1e3, 1e4])


def test_truncation_index_linear():
    assert truncation_index(1000.0) == 30000
