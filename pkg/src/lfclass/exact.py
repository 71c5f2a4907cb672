"""Exact arithmetic in the ring Q(i)[pi^(1/2), pi^(-1/2)].

Values are finite sums  sum_e c_e * pi^(e/2)  where e is an integer
(half-integer powers of pi are needed internally because Gamma at
half-integer arguments produces sqrt(pi)) and c_e is a Gaussian
rational.  The representation is canonical: zero coefficients are
never stored, so equality and zero-testing are exact.  pi is treated
as transcendental, i.e. a value is zero iff every graded coefficient
is zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import mpmath

RationalLike = Union[int, Fraction]


class QI:
    """A Gaussian rational a + b*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other: "QI") -> "QI":
        return QI(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "QI") -> "QI":
        return QI(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "QI":
        return QI(-self.re, -self.im)

    def __mul__(self, other: "QI") -> "QI":
        return QI(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "QI") -> "QI":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QI((self.re * other.re + self.im * other.im) / n,
                  (self.im * other.re - self.re * other.im) / n)

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QI):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "%s*i" % self.im
        sign = "+" if self.im > 0 else "-"
        return "(%s %s %s*i)" % (self.re, sign, abs(self.im))

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(mpmath.mpf(self.re.numerator) / self.re.denominator,
                          mpmath.mpf(self.im.numerator) / self.im.denominator)


QI_ZERO = QI(0)
QI_ONE = QI(1)
QI_I = QI(0, 1)


def _as_qi(x) -> QI:
    if isinstance(x, QI):
        return x
    if isinstance(x, (int, Fraction)):
        return QI(x)
    raise TypeError("cannot coerce %r to a Gaussian rational" % (x,))


class ExactScalar:
    """An element of Q(i)[pi^(1/2), pi^(-1/2)], graded by half-powers of pi.

    ``terms`` maps the half-grade e (representing pi^(e/2)) to a nonzero
    Gaussian rational.  Arithmetic is exact; comparisons are decidable.
    Instances are immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _as_qi(c)
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, x: RationalLike) -> "ExactScalar":
        return cls({0: QI(x)})

    @classmethod
    def from_gauss(cls, re: RationalLike, im: RationalLike = 0) -> "ExactScalar":
        return cls({0: QI(re, im)})

    @classmethod
    def pi_power(cls, half_grade: int, coeff=1) -> "ExactScalar":
        """coeff * pi^(half_grade/2)."""
        return cls({half_grade: _as_qi(coeff)})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return set(self.terms) <= {0} and all(c.im == 0 for c in self.terms.values())

    def is_real(self) -> bool:
        return all(c.im == 0 for c in self.terms.values())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def grades(self):
        return sorted(self.terms)

    def as_rational(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("%r is not rational" % (self,))
        return self.terms[0].re

    def as_gauss(self) -> QI:
        """The grade-0 coefficient; raises if other grades are present."""
        if self.is_zero():
            return QI(0)
        if set(self.terms) != {0}:
            raise ValueError("%r carries nonzero pi-grades" % (self,))
        return self.terms[0]

    def real_part(self) -> "ExactScalar":
        return ExactScalar({e: QI(c.re) for e, c in self.terms.items()})

    def imag_part(self) -> "ExactScalar":
        return ExactScalar({e: QI(c.im) for e, c in self.terms.items()})

    def conjugate(self) -> "ExactScalar":
        return ExactScalar({e: c.conjugate() for e, c in self.terms.items()})

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction, QI)):
            return ExactScalar({0: _as_qi(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, QI_ZERO) + c
        return ExactScalar(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return ExactScalar({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, QI_ZERO) + c1 * c2
        return ExactScalar(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("exact division by zero")
        if not other.is_monomial():
            raise ValueError("exact division only by pi-monomials, got %r" % (other,))
        (e0, c0), = other.terms.items()
        return ExactScalar({e - e0: c / c0 for e, c in self.terms.items()})

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            (e0, c0), = self.terms.items()
            return ExactScalar({-e0: QI_ONE / c0}) ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in self.grades():
            c = self.terms[e]
            if e == 0:
                parts.append(repr(c))
            elif e % 2 == 0:
                parts.append("%r*pi^%d" % (c, e // 2))
            else:
                parts.append("%r*pi^(%d/2)" % (c, e))
        return " + ".join(parts)

    # -- conversion ---------------------------------------------------

    def to_mpc(self, prec: int = None) -> mpmath.mpc:
        """Round to an mpmath complex at ``prec`` bits (current context if None)."""
        ctx = mpmath.mp
        with mpmath.workprec(prec if prec is not None else ctx.prec):
            sqrtpi = mpmath.sqrt(mpmath.pi)
            total = mpmath.mpc(0)
            for e, c in self.terms.items():
                total += c.to_mpc() * sqrtpi ** e
            return +total


ZERO = ExactScalar()
ONE = ExactScalar.from_rational(1)
I = ExactScalar.from_gauss(0, 1)
PI = ExactScalar.pi_power(2)
SQRT_PI = ExactScalar.pi_power(1)


def rational_from_string(s: str) -> Fraction:
    """Parse 'p/q' or a decimal/integer string into an exact Fraction."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(s)
