"""End-to-end acceptance gate.

Ten criteria, one per test, each printing a single pass/fail line
(run with ``pytest -s tests/test_acceptance.py`` to see them live).
Every tolerance is stated inline next to the check it gates.
"""

from fractions import Fraction

import mpmath
import pytest

from lfclass import asymfe, periods, quadforms, twist, zeta
from lfclass.coefficients import divisor_source, eigenform_source, tau_source
from lfclass.exact import ExactScalar, ZERO
from lfclass.factors import (classify, classify_pair, delta_gamma, invariants,
                             virtual_gamma, zeta_squared_gamma)
from lfclass.precision import get_precision, set_precision

HECKE_MUS = [Fraction(1, 2), Fraction(3, 2), Fraction(5, 2),
             Fraction(11, 2), Fraction(7)]
MAASS_PTS = [(e, Fraction(k)) for e in (0, 1) for k in (1, 2)]


def _report(num, label, ok):
    print("ACCEPTANCE %2d [%s]: %s" % (num, label, "PASS" if ok else "FAIL"))
    assert ok, "acceptance criterion %d (%s) failed" % (num, label)


@pytest.fixture(autouse=True)
def _default_precision():
    set_precision(256)
    yield


def test_criterion_01_chi_identities_exact():
    ok = True
    for mu in HECKE_MUS:
        g = virtual_gamma("hecke", mu=mu)
        chi = invariants(g, n_max=2).chi
        ok &= chi == ExactScalar.from_rational(2 * mu * mu)
    for eps, kappa in MAASS_PTS:
        g = virtual_gamma("maass", eps=eps, kappa=kappa)
        chi = invariants(g, n_max=2).chi
        ok &= chi == ExactScalar.from_rational(-2 * kappa * kappa)
    ok &= invariants(zeta_squared_gamma(), n_max=2).chi.is_zero()
    _report(1, "chi identities, exact arithmetic", ok)


def test_criterion_02_d1_equals_chi_minus_eighth():
    gs = [virtual_gamma("hecke", mu=mu) for mu in HECKE_MUS]
    gs += [virtual_gamma("maass", eps=e, kappa=k) for e, k in MAASS_PTS]
    ok = True
    eighth = ExactScalar.from_rational(Fraction(1, 8))
    for g in gs:
        ss = asymfe.structural_symbolic(g, 1)
        chi = invariants(g, n_max=2).chi
        ok &= ss.prefactor == ExactScalar.from_rational(1)
        ok &= ss.d[1] == chi - eighth
    _report(2, "d(1) = chi - 1/8 on 9 gamma-data", ok)


def test_criterion_03_recursion_and_residue_identities():
    ok = True
    # closed-form recursion polynomials
    rec = quadforms.recursion(4)
    F = Fraction
    expected = {
        2: [F(0), F(-1, 2), F(1, 2)],
        3: [F(0), F(1, 2), F(-2, 3), F(1, 6)],
        4: [F(0), F(-3, 4), F(9, 8), F(-5, 12), F(1, 24)],
    }
    for l, coeffs in expected.items():
        got = [F(c) if isinstance(c, int) else c.as_rational()
               for c in rec.polys[l].coeffs]
        ok &= got == coeffs
    # residue identities vanish identically on every gamma-datum
    gs = [virtual_gamma("hecke", mu=mu) for mu in HECKE_MUS]
    gs += [virtual_gamma("maass", eps=e, kappa=k) for e, k in MAASS_PTS]
    gs.append(zeta_squared_gamma())
    for g in gs:
        ss = asymfe.structural_symbolic(g, 8)
        for M in range(1, 9):
            for bucket in quadforms.residue_identity(M).values():
                total = ZERO
                for (l, j), c in bucket.items():
                    total = total + c * ss.d[l] * ss.d[j]
                ok &= total.is_zero()
    _report(3, "recursion oracle + residue identities M<=8", ok)


def test_criterion_04_quadratic_forms():
    ok = True
    one = ExactScalar.from_rational(1)
    for N in (2, 3, 4):
        q = quadforms.quad_form(N)
        ok &= q.normalized
        pinned = q.coeffs.get((0, N), ZERO) + q.coeffs.get((N, 0), ZERO)
        ok &= pinned == one
        for (l, h), c in q.coeffs.items():
            ok &= l + h <= N and c.is_real() and len(c.grades()) <= 1
    # forms annihilate the structural invariants of every gamma-datum
    gs = [virtual_gamma("hecke", mu=mu) for mu in HECKE_MUS]
    gs += [virtual_gamma("maass", eps=e, kappa=k) for e, k in MAASS_PTS]
    for g in gs:
        ss = asymfe.structural_symbolic(g, 4)
        for N in (2, 3, 4):
            ok &= quadforms.quad_form(N).evaluate(ss.d).is_zero()
    _report(4, "universal quadratic forms N=2,3,4", ok)


def test_criterion_05_dual_method_agreement():
    tol = mpmath.mpf(10) ** -64
    ok = True
    for g in (zeta_squared_gamma(),
              virtual_gamma("hecke", mu=Fraction(11, 2)),
              virtual_gamma("maass", eps=0, kappa=Fraction(1))):
        sym = asymfe.structural_symbolic(g, 4)
        num = asymfe.structural_numeric(g, 4)
        with mpmath.workprec(get_precision() + 64):
            for l in range(5):
                ref = sym.d[l].to_mpc()
                ok &= abs(num.d[l] - ref) <= tol * max(1, abs(ref))
    _report(5, "symbolic vs numeric d(l), l<=4, 1e-64", ok)


def test_criterion_06_fe_residual_zeta2():
    tol = mpmath.mpf(10) ** -100
    worst = mpmath.mpf(0)
    for i in range(5):
        for j in range(5):
            s = mpmath.mpc(0.1 + 0.2 * i, -10 + 5 * j)
            worst = max(worst, abs(zeta.fe_residual_zeta2(s)))
    _report(6, "zeta^2 functional-equation residual 5x5 grid", worst < tol)


def test_criterion_07_twist_residues():
    src = divisor_source()
    g = zeta_squared_gamma()
    sym = asymfe.structural_symbolic(g, 1)
    d_vals = [complex(sym.d[0].to_mpc()), complex(sym.d[1].to_mpc())]
    grid = twist.geometric_grid(1e4, 1e7, 7)
    on = twist.residue_fit(src, 2.0, grid, d_values=d_vals)
    ok = on.rel_err_c0 < 0.02 and on.rel_err_c1 < 0.20
    off = twist.residue_fit(src, 1.0, grid, require_spectrum=False)
    ok &= off.rel_err_c0 < 0.02
    _report(7, "smoothed-twist residues, alpha=2 fit + alpha=1 null", ok)


def test_criterion_08_period_residuals():
    tol = mpmath.mpf(10) ** (-(get_precision() // 3) + 12)
    zs = (mpmath.mpc(0, 0.7), mpmath.mpc(0, 1.3), mpmath.mpc(0, 2.0),
          mpmath.mpc(0.3, 1.1), mpmath.mpc(0.2, 1.5))
    ok = True
    with mpmath.workprec(300):
        for src, shift in ((tau_source(), Fraction(11, 2)),
                           (eigenform_source(16), Fraction(15, 2))):
            fs = periods.hecke_series(src, shift)
            for z in zs:
                ok &= abs(periods.psi_eval(fs, z)) < tol
        fs12 = periods.hecke_series(tau_source(), Fraction(11, 2))
        ok &= abs(periods.three_term_residual(fs12, mpmath.mpc(0.2, 1.5))) < tol
        # negative control: wrong coefficients must visibly break modularity
        fake = periods.FourierSeries(source=divisor_source(),
                                     lam=Fraction(11, 2), growth=7.0)
        ok &= abs(periods.psi_eval(fake, mpmath.mpc(0.2, 1.5))) > 1e-6
    _report(8, "period residuals for eigenforms + negative control", ok)


def test_criterion_09_contour_identity():
    tol = mpmath.mpf(10) ** -15
    worst = mpmath.mpf(0)
    for mu in (Fraction(1, 2), Fraction(11, 2), Fraction(0)):
        for w in (mpmath.mpc(4), mpmath.mpc(2, 1), mpmath.mpc(3, -1)):
            worst = max(worst, abs(periods.ml_contour_residual(mu, w)))
    _report(9, "entire-series vs contour integral 3x3 grid", worst < tol)


def test_criterion_10_classifier_end_to_end():
    ok = True
    c = classify(delta_gamma())
    ok &= c.case == "hecke" and c.weight == 12
    c = classify(zeta_squared_gamma())
    ok &= c.case == "zeta_squared"
    g = virtual_gamma("maass", eps=1, kappa=Fraction(5))
    pc = classify_pair(g, Fraction(-1))
    c = pc.classification
    ok &= c.case == "maass" and c.eigenvalue == Fraction(101, 4) \
        and c.parity == 1
    c = classify(virtual_gamma("hecke", mu=Fraction(13, 2)))
    ok &= c.case == "empty" and c.weight == 14
    _report(10, "classifier: hecke / zeta^2 / maass / empty", ok)
