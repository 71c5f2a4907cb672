"""Exact scalar ring: Gaussian rationals graded by half-powers of pi."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfclass.exact import ExactScalar, I, ONE, PI, QI, SQRT_PI, ZERO, \
    rational_from_string

rationals = st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 3)


def scalars():
    return st.builds(
        lambda entries: ExactScalar({e: QI(a, b) for e, a, b in entries}),
        st.lists(st.tuples(st.integers(-4, 4), rationals, rationals),
                 max_size=4))


def test_qi_arithmetic():
    a = QI(Fraction(1, 2), Fraction(3))
    b = QI(Fraction(-2), Fraction(1, 5))
    assert a + b == QI(Fraction(-3, 2), Fraction(16, 5))
    assert a * b == QI(Fraction(1, 2) * -2 - 3 * Fraction(1, 5),
                       Fraction(1, 2) * Fraction(1, 5) + 3 * -2)
    assert (a / b) * b == a
    assert a.conjugate().im == -3


def test_qi_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QI(1) / QI(0)


def test_canonical_zero_terms_dropped():
    s = ExactScalar({2: QI(0), 0: QI(1)})
    assert s.grades() == [0]
    assert s == ONE


def test_pi_grading():
    assert SQRT_PI * SQRT_PI == PI
    assert PI / PI == ONE
    assert (PI ** -1) * PI == ONE
    with mpmath.workprec(80):
        assert abs(PI.to_mpc(80) - mpmath.pi) < mpmath.mpf(2) ** -70


def test_i_squared():
    assert I * I == -ONE


def test_division_requires_monomial():
    with pytest.raises(ValueError):
        ONE / (ONE + PI)


def test_real_imag_conjugate():
    z = ExactScalar({1: QI(2, 3), 0: QI(-1, 0)})
    assert z.real_part() + I * z.imag_part() == z
    assert z.conjugate().conjugate() == z
    assert not z.is_real()
    assert z.real_part().is_real()


def test_as_rational_guards():
    with pytest.raises(ValueError):
        PI.as_rational()
    assert ExactScalar.from_rational(Fraction(3, 7)).as_rational() == \
        Fraction(3, 7)


@settings(max_examples=60)
@given(scalars(), scalars(), scalars())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60)
@given(scalars(), scalars())
def test_commutativity_and_neg(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert a - b == -(b - a)


@settings(max_examples=40)
@given(scalars())
def test_to_mpc_is_ring_hom_on_samples(a):
    with mpmath.workprec(120):
        va = a.to_mpc(120)
        assert abs((a + a).to_mpc(120) - 2 * va) \
            < mpmath.mpf(2) ** -90 * (1 + abs(va))


def test_rational_from_string():
    assert rational_from_string("3/4") == Fraction(3, 4)
    assert rational_from_string("-2.5") == Fraction(-5, 2)
    assert rational_from_string(" 7 ") == 7
