"""Bernoulli data, log-Gamma, and the Stirling expansion."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfclass.errors import PoleError
from lfclass.gammafun import (adaptive_stirling_order, bernoulli_number,
                              bernoulli_poly, gen_binomial, log_gamma,
                              stirling_series)
from lfclass.precision import working_precision


def test_bernoulli_numbers():
    expected = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6),
                4: Fraction(-1, 30), 12: Fraction(-691, 2730)}
    for n, v in expected.items():
        assert bernoulli_number(n) == v
    assert bernoulli_number(7) == 0


@settings(max_examples=50)
@given(st.integers(0, 12),
       st.fractions(min_value=-50, max_value=50, max_denominator=12))
def test_bernoulli_difference_identity(n, x):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    lhs = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x)
    rhs = n * x ** (n - 1) if n >= 1 else 0
    assert lhs == rhs


def test_gen_binomial():
    assert gen_binomial(Fraction(1, 2), 3) == Fraction(1, 16)
    assert gen_binomial(Fraction(1, 2), 0) == 1


def test_log_gamma_pole_detection():
    with pytest.raises(PoleError):
        log_gamma(0)
    with pytest.raises(PoleError):
        log_gamma(-3 + 1e-9j)


def test_log_gamma_duplication():
    # log Gamma(2z) = log Gamma(z) + log Gamma(z + 1/2)
    #                 + (2z - 1) log 2 - (1/2) log pi   (for Re z > 0)
    with working_precision(guard=16) as ctx:
        eps = mpmath.mpf(2) ** (-ctx.prec + 24)
        for z in (mpmath.mpc(0.7, 0.3), mpmath.mpc(5, -2), mpmath.mpc(13, 9)):
            lhs = log_gamma(2 * z)
            rhs = (log_gamma(z) + log_gamma(z + mpmath.mpf(1) / 2)
                   + (2 * z - 1) * mpmath.log(2)
                   - mpmath.log(mpmath.pi) / 2)
            assert abs(lhs - rhs) < eps * (1 + abs(lhs))


def test_stirling_series_accuracy():
    st_exp = stirling_series(Fraction(1), Fraction(11, 2), order=20)
    with working_precision(guard=16):
        z = mpmath.mpc(80, 5)
        approx = st_exp.eval_log_gamma(z)
        exact = log_gamma(z + mpmath.mpf(11) / 2)
        assert abs(approx - exact) < mpmath.mpf(10) ** -26


def test_adaptive_order_monotone_and_capped():
    # order grows with |z| (more asymptotic terms usable) up to a cap
    assert adaptive_stirling_order(10.0) <= adaptive_stirling_order(100.0)
    assert adaptive_stirling_order(1e6) == adaptive_stirling_order(1e9)
    assert adaptive_stirling_order(0.1) >= 4
