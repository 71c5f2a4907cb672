"""Truncated series and dense univariate polynomials.

Coefficients may be ExactScalar, Fraction, int, or mpmath numbers;
all operations only require ``+``, ``*``, unary ``-`` and division by
integers, which every supported coefficient type provides.  Integer 0
and 1 act as neutral elements.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import ExactScalar


def _is_zero(c) -> bool:
    if isinstance(c, ExactScalar):
        return c.is_zero()
    return c == 0


class Poly:
    """Dense univariate polynomial, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, ExactScalar)):
            return Poly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly([1])
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
        return self.coeffs == other.coeffs

    def __call__(self, x):
        """Horner evaluation at x (any compatible scalar)."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        return "Poly(%s)" % ", ".join(repr(c) for c in self.coeffs)


def falling_binomial(top: Poly, k: int) -> Poly:
    """Generalized binomial C(top, k) where ``top`` is a polynomial."""
    out = Poly([Fraction(1, factorial(k))])
    for j in range(k):
        out = out * (top - j)
    return out


class AsymSeries:
    """Truncated series sum_{n=0..order} c_n * u^n in a formal variable u.

    The formal variable is typically 1/z for asymptotic expansions or a
    small parameter x; truncation order is respected exactly by every
    operation.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = cs[:order + 1] + [0] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @classmethod
    def const(cls, c, order: int) -> "AsymSeries":
        return cls([c], order)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def _coerce(self, other):
        if isinstance(other, AsymSeries):
            if other.order != self.order:
                raise ValueError("truncation orders differ: %d vs %d"
                                 % (self.order, other.order))
            return other
        if isinstance(other, (int, Fraction, ExactScalar)):
            return AsymSeries.const(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AsymSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                          self.order)

    __radd__ = __add__

    def __neg__(self):
        return AsymSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        M = self.order
        out = [0] * (M + 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j in range(M + 1 - i):
                b = other.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return AsymSeries(out, M)

    __rmul__ = __mul__

    def reciprocal(self) -> "AsymSeries":
        """1/self; requires an invertible constant term."""
        c0 = self.coeffs[0]
        if _is_zero(c0):
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        inv0 = _invert(c0)
        out = [inv0] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                ck = self.coeffs[k]
                if not _is_zero(ck):
                    acc = acc + ck * out[n - k]
            out[n] = -inv0 * acc
        return AsymSeries(out, self.order)

    def exp(self) -> "AsymSeries":
        """exp(self); requires zero constant term (kept exact)."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError("exp of a series with nonzero constant term")
        # exp(S)' = S' exp(S)  =>  n e_n = sum_{k=1..n} k s_k e_{n-k}
        out = [1] + [0] * self.order
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                sk = self.coeffs[k]
                if not _is_zero(sk):
                    acc = acc + (k * sk) * out[n - k]
            out[n] = acc / Fraction(n) if isinstance(acc, (int, Fraction)) \
                else acc / n
        return AsymSeries(out, self.order)

    def log(self) -> "AsymSeries":
        """log(self); requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log of a series with constant term != 1")
        # log(S)' = S'/S  =>  n s_n = n c_n - sum_{k=1..n-1} k s_k c_{n-k}
        out = [0] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = n * self.coeffs[n]
            for k in range(1, n):
                if not _is_zero(out[k]):
                    acc = acc - (k * out[k]) * self.coeffs[n - k]
            out[n] = acc / Fraction(n) if isinstance(acc, (int, Fraction)) \
                else acc / n
        return AsymSeries(out, self.order)

    def __call__(self, u):
        out = 0
        for c in reversed(self.coeffs):
            out = out * u + c
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return all((a == b) or (_is_zero(a) and _is_zero(b))
                   for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return "AsymSeries(order=%d, %s)" % (self.order, self.coeffs)


def _invert(c):
    if isinstance(c, ExactScalar):
        from .exact import ONE
        return ONE / c
    if isinstance(c, int):
        return Fraction(1, c)
    if isinstance(c, Fraction):
        return 1 / c
    return 1 / c
