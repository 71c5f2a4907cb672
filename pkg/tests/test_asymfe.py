"""Sine-product expansion, h-function, and structural invariants."""

from fractions import Fraction

import mpmath
import pytest

from lfclass.asymfe import (h_eval, log_h, s_expand, structural_numeric,
                            structural_symbolic)
from lfclass.exact import ExactScalar
from lfclass.factors import (delta_gamma, duplicate, invariants,
                             virtual_gamma, zeta_squared_gamma)

GRID = [virtual_gamma("hecke", mu=Fraction(1, 2)),
        virtual_gamma("hecke", mu=Fraction(3, 2)),
        virtual_gamma("hecke", mu=Fraction(11, 2)),
        zeta_squared_gamma(),
        virtual_gamma("maass", eps=0, kappa=Fraction(1)),
        virtual_gamma("maass", eps=1, kappa=Fraction(2))]


@pytest.mark.parametrize("g", GRID)
def test_expsum_symmetry(g):
    assert s_expand(g).check_symmetry()


def test_expsum_zeta2_shape():
    es = s_expand(zeta_squared_gamma())
    # 4 sin(pi s / 2)^2 has frequencies -1, 0, 1 with coefficients -1, 2, -1
    assert es.N == 2
    assert es.frequencies == (Fraction(-1), Fraction(0), Fraction(1))
    with mpmath.workprec(120):
        for c, want in zip(es.coefficients, (-1, 2, -1)):
            assert abs(c.to_mpc() - want) < mpmath.mpf(2) ** -100
    with mpmath.workprec(120):
        s = mpmath.mpc("0.3", "0.2")
        direct = 4 * mpmath.sin(mpmath.pi * s / 2) ** 2
        assert abs(es.eval(s) - direct) < mpmath.mpf(2) ** -90


@pytest.mark.parametrize("g", GRID)
def test_h_eval_agrees_with_mpmath(g):
    # independent oracle: rebuild the gamma-quotient with mpmath.loggamma
    with mpmath.workprec(150):
        s = mpmath.mpc("-7.3", "0.4")
        r = len(g.lambdas)
        qf = mpmath.mpf(g.Q_mpf())
        acc = -r * mpmath.log(2 * mpmath.pi) + (1 - 2 * s) * mpmath.log(qf)
        for j, lam in enumerate(g.lambdas):
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            mu = g.mu_mpc(j)
            acc += mpmath.loggamma(lamf * (1 - s) + mpmath.conj(mu))
            acc += mpmath.loggamma(1 - lamf * s - mu)
        direct = mpmath.exp(acc)
        assert abs(h_eval(g, s) - direct) \
            < mpmath.mpf(2) ** -100 * (1 + abs(direct))


@pytest.mark.parametrize("g", GRID)
def test_d1_equals_chi_minus_eighth(g):
    chi = invariants(g).chi.as_rational()
    ss = structural_symbolic(g, 1)
    assert ss.prefactor == ExactScalar.from_rational(1)
    assert ss.d[0] == ExactScalar.from_rational(1)
    assert ss.d[1] == ExactScalar.from_rational(chi - Fraction(1, 8))


def test_structural_symbolic_duplicate_invariance():
    g = virtual_gamma("hecke", mu=Fraction(11, 2))
    g2, _ = duplicate(g, 1)
    a = structural_symbolic(g, 4)
    b = structural_symbolic(g2, 4)
    assert a.d == b.d


def test_structural_numeric_matches_symbolic():
    g = delta_gamma()
    sym = structural_symbolic(g, 4)
    num = structural_numeric(g, 4)
    with mpmath.workprec(900):
        for l in range(5):
            ref = sym.d[l].to_mpc(800)
            rel = abs(num.d[l] - ref) / max(1, abs(ref))
            assert rel < mpmath.mpf(10) ** -64


def test_structural_numeric_error_estimates_honest():
    g = zeta_squared_gamma()
    sym = structural_symbolic(g, 3)
    num = structural_numeric(g, 3)
    with mpmath.workprec(900):
        for l in range(4):
            ref = sym.d[l].to_mpc(800)
            actual = abs(num.d[l] - ref)
            # reported error bounds the true error within two orders
            assert actual < max(num.errors[l] * 100, mpmath.mpf(10) ** -100)


def test_log_h_at_negative_axis_is_finite():
    g = delta_gamma()
    with mpmath.workprec(200):
        v = log_h(g, mpmath.mpc(-500.25, 0))
        assert mpmath.isfinite(v)
