"""Coefficient generators and the strict file ingester."""

from fractions import Fraction

import numpy as np
import pytest

from lfclass.coefficients import (CoefficientError, divisor_sieve,
                                  divisor_source, eigenform_coefficients,
                                  eisenstein_coefficients, file_source,
                                  series_mul, tau_coefficients, tau_source)


def test_divisor_small_values():
    assert list(divisor_sieve(6)) == [1, 2, 2, 3, 2, 4]


def test_divisor_against_trial_division():
    d = divisor_sieve(500)
    for n in (1, 17, 36, 128, 360, 499, 500):
        assert d[n - 1] == sum(1 for k in range(1, n + 1) if n % k == 0)


def test_series_mul_matches_convolution():
    a = [3, -1, 4, 0, -5]
    b = [2, 7, -6]
    n = 5
    expected = [sum(a[i] * b[k - i] for i in range(max(0, k - len(b) + 1),
                                                  min(k + 1, len(a))))
                for k in range(n)]
    assert series_mul(a, b, n) == expected


def test_tau_oracles():
    tau = tau_coefficients(12)
    assert tau[:7] == [1, -24, 252, -1472, 4830, -6048, -16744]
    assert tau[5] == tau[1] * tau[2]          # multiplicativity at 6 = 2*3
    assert tau[11] == -370944                 # tau(12)


def test_tau_congruence_mod_691():
    tau = tau_coefficients(1000)
    for n in range(1, 1001):
        sigma11 = sum(d ** 11 for d in range(1, n + 1) if n % d == 0)
        assert (tau[n - 1] - sigma11) % 691 == 0


def test_eisenstein_weight4():
    e4 = eisenstein_coefficients(4, 4)
    assert e4 == [1, 240, 2160, 6720, 17520]


def test_eigenform_weight16():
    # unique normalized cusp form of weight 16: known initial coefficients
    a = eigenform_coefficients(16, 6)
    assert a == [1, 216, -3348, 13888, 52110, -723168]


def test_eigenform_weight18():
    a = eigenform_coefficients(18, 4)
    assert a == [1, -528, -4284, 147712]


def test_eigenform_rejects_bad_weight():
    with pytest.raises(ValueError):
        eigenform_coefficients(14, 10)


def test_source_shift_normalization():
    src = tau_source()
    vals = src.values(4)
    assert vals[0] == pytest.approx(1.0)
    assert vals[1] == pytest.approx(-24 / 2 ** 5.5)
    assert src.a(1) == pytest.approx(1.0)


def test_divisor_source_exact_dtype():
    assert divisor_source().values(10).dtype == np.int16


def test_file_source_roundtrip(tmp_path):
    p = tmp_path / "coeffs.txt"
    p.write_text("# lfun-coeffs v1; normalization=a1; shift=0\n"
                 "1 1.0\n2 -0.5 0.25\n4 2.0\n")
    src = file_source(p)
    vals = src.values(4)
    assert vals[0] == 1.0
    assert vals[1] == complex(-0.5, 0.25)
    assert vals[2] == 0.0
    assert vals[3] == 2.0


def test_file_source_bad_header(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("not a header\n1 1.0\n")
    with pytest.raises(CoefficientError):
        file_source(p).values(2)


def test_file_source_duplicate_entry(tmp_path):
    p = tmp_path / "dup.txt"
    p.write_text("# lfun-coeffs v1; normalization=none; shift=0\n"
                 "1 1.0\n1 2.0\n")
    with pytest.raises(CoefficientError):
        file_source(p).values(2)


def test_file_source_bad_normalization(tmp_path):
    p = tmp_path / "norm.txt"
    p.write_text("# lfun-coeffs v1; normalization=a1; shift=0\n2 1.0\n")
    with pytest.raises(CoefficientError):
        file_source(p).values(2)
