"""Combinatorial engine: W-polynomials, residue identities, quadratic
forms, the one-variable recursion, and polynomiality of the invariants."""

from fractions import Fraction

import pytest

from lfclass.errors import NormalizationFailure
from lfclass.exact import ExactScalar, ZERO
from lfclass.quadforms import (akv, pole_abscissa, poly_extract, quad_form,
                               quad_form_raw, recursion, residue_identity,
                               w_poly)
from lfclass.asymfe import structural_symbolic
from lfclass.factors import virtual_gamma, zeta_squared_gamma


def test_akv_oracles():
    assert akv(0, 0).as_rational() == 1
    assert akv(3, 1).as_rational() == Fraction(1, 16)
    assert akv(6, 2).as_rational() == Fraction(1, 256)
    assert akv(4, 1).as_rational() == Fraction(-5, 128)  # C(1/2, 4)


def test_akv_precondition():
    with pytest.raises(ValueError):
        akv(2, 1)


def test_w0_is_one():
    w = w_poly(0)
    assert list(w.terms) == [(0, 0)]
    assert w.terms[(0, 0)](Fraction(5)) == 1


def test_w1_closed_form():
    w = w_poly(1)
    assert list(w.terms) == [(0, 1)]
    poly = w.terms[(0, 1)]
    assert poly(Fraction(1, 4)) == ZERO + 0 or poly(Fraction(1, 4)).is_zero()
    assert poly(Fraction(5, 4)) == ExactScalar.from_rational(1)


def test_w_poly_degree_bound():
    for m in range(7):
        for (l, h) in w_poly(m).terms:
            assert 2 * l <= m
            assert h <= m


def test_residue_identity_m1_empty():
    assert residue_identity(1) == {}


def test_residue_identity_no_constant_term():
    for M in range(1, 7):
        assert 0 not in residue_identity(M)


GRID = [virtual_gamma("hecke", mu=Fraction(1, 2)),
        virtual_gamma("hecke", mu=Fraction(3, 2)),
        virtual_gamma("hecke", mu=Fraction(11, 2)),
        virtual_gamma("maass", eps=0, kappa=Fraction(1)),
        virtual_gamma("maass", eps=0, kappa=Fraction(2)),
        virtual_gamma("maass", eps=1, kappa=Fraction(1)),
        virtual_gamma("maass", eps=1, kappa=Fraction(2))]


@pytest.mark.parametrize("g", GRID)
def test_residue_identity_vanishes_on_invariants(g):
    ss = structural_symbolic(g, 8)
    for M in range(1, 9):
        for power, bucket in residue_identity(M).items():
            total = ZERO
            for (l, j), c in bucket.items():
                total = total + c * ss.d[l] * ss.d[j]
            assert total.is_zero(), (M, power)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_quad_form_structure(N):
    q = quad_form(N)
    assert q.normalized
    for (l, h), c in q.coeffs.items():
        assert l + h <= N
        assert c.is_real()
        assert len(c.grades()) <= 1
    pinned = q.coeffs.get((0, N), ZERO) + q.coeffs.get((N, 0), ZERO)
    assert pinned == ExactScalar.from_rational(1)


def test_quad_form_n1_degenerate():
    # the N=1 pinned combination vanishes; normalization must refuse
    raw = quad_form_raw(1)
    pinned = raw.coeffs.get((0, 1), ZERO) + raw.coeffs.get((1, 0), ZERO)
    assert pinned.is_zero()
    with pytest.raises(ValueError):
        quad_form(1)


@pytest.mark.parametrize("g", GRID)
def test_quad_form_vanishes_on_invariants(g):
    ss = structural_symbolic(g, 4)
    for N in (2, 3, 4):
        assert quad_form(N).evaluate(ss.d).is_zero()


def test_recursion_known_values():
    rec = recursion(4)
    # E_2(x) = (x^2 - x)/2, E_3 = x/2 - 2x^2/3 + x^3/6
    assert rec.polys[2].coeffs == [ExactScalar(),
                                   ExactScalar.from_rational(Fraction(-1, 2)),
                                   ExactScalar.from_rational(Fraction(1, 2))]


@pytest.mark.parametrize("g", GRID + [zeta_squared_gamma()])
def test_recursion_reproduces_invariants(g):
    ss = structural_symbolic(g, 4)
    vals = recursion(4).d_values(ss.d[1])
    for l in range(5):
        assert vals[l] == ss.d[l]


def test_recursion_consistency_with_forms():
    # substituting E_l back into Q_N gives the zero polynomial in d1
    from lfclass.series import Poly
    rec = recursion(4)
    for N in (2, 3, 4):
        q = quad_form(N)
        acc = Poly()
        for (l, h), c in q.coeffs.items():
            acc = acc + (rec.polys[l] * rec.polys[h]) * c
        assert acc.is_zero()


def test_poly_extract_hecke():
    p = poly_extract("hecke", 1)
    assert p.coeffs == [Fraction(-1, 8), Fraction(0), Fraction(2)]


def test_poly_extract_maass():
    q = poly_extract("maass", 1)
    assert q.coeffs == [Fraction(-1, 8), Fraction(0), Fraction(-2)]


def test_poly_extract_relation():
    # Q_l(kappa) = P_l(i kappa) coefficient-wise: sign flip on 2 mod 4 powers
    p = poly_extract("hecke", 2)
    q = poly_extract("maass", 2)
    for j, (a, b) in enumerate(zip(p.coeffs, q.coeffs)):
        assert b == a * (-1 if j % 4 == 2 else 1)
