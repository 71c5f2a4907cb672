"""Exact combinatorial engine behind the coefficient recursion.

Builds the W_m(s, alpha) polynomials from a five-fold constrained
enumeration, assembles the residue-vanishing identities at the pole
abscissae s_M = 3/4 - M/2, extracts the universal quadratic forms Q_N
relating the structural invariants d(0..N), and solves them into the
one-variable recursion d(l) = E_l(d(1)).  Everything in this module is
exact: coefficients live in Q(i)[pi^(1/2), pi^(-1/2)] and no floats
appear anywhere.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Tuple

from .errors import (InterpolationMismatch, NormalizationFailure,
                     StructuralViolation)
from .exact import ExactScalar, ONE, QI, ZERO
from .gammafun import gen_binomial
from .series import Poly, falling_binomial

_I_POW = (QI(1), QI(0, 1), QI(-1), QI(0, -1))


def _ipow(t: int) -> QI:
    """i**t as a Gaussian rational."""
    return _I_POW[t % 4]


@lru_cache(maxsize=None)
def _akv(k: int, nu: int) -> Fraction:
    if nu == 0:
        return Fraction(1) if k == 0 else Fraction(0)
    if k < 3 * nu:
        return Fraction(0)
    # peel one factor off the nu-th power of the tail series
    total = Fraction(0)
    for j in range(3, k - 3 * (nu - 1) + 1):
        inner = _akv(k - j, nu - 1)
        if inner:
            total += gen_binomial(Fraction(1, 2), j) * inner
    return total


def akv(k: int, nu: int) -> ExactScalar:
    """Coefficient of xi^k in (sum_{j>=3} C(1/2,j) xi^j)^nu."""
    if not (k >= 3 * nu >= 0):
        raise ValueError("need k >= 3*nu >= 0, got k=%d nu=%d" % (k, nu))
    return ExactScalar.from_rational(_akv(k, nu))


def _a_constant(nu: int, mu: int, k: int, l: int, h: int) -> ExactScalar:
    """The exact scalar A(nu, mu, k, l, h); requires mu + k even.

    Gamma((mu+k+1)/2) at half-integer argument contributes
    (2p)!/(4^p p!) * sqrt(pi) with p = (mu+k)/2, whose sqrt(pi)
    cancels the 1/sqrt(pi) prefactor, so the result carries only
    integer powers of pi.
    """
    a = _akv(k, nu)
    if not a:
        return ZERO
    p = (mu + k) // 2
    rational = (a * Fraction(2 ** p, factorial(nu))
                * Fraction(-1, 2) ** h
                * Fraction(4) ** (nu - l)
                * Fraction(factorial(2 * p), 4 ** p * factorial(p)))
    # (-2i/pi)^p * i^(nu+l) = 2^p * i^(nu+l-p) * pi^(-p)
    coeff = _ipow(nu + l - p) * QI(rational)
    return ExactScalar({2 * (nu - l - p): coeff})


class WPoly:
    """W_m(s, alpha) with the structural invariants kept formal.

    ``terms`` maps (l, h) to the polynomial in s multiplying
    D_l * alpha^h.  Only l with 2l <= m and h <= m occur.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Dict[Tuple[int, int], Poly]):
        self.m = m
        self.terms = terms

    def eval_s(self, s) -> Dict[Tuple[int, int], ExactScalar]:
        """Coefficients of D_l * alpha^h at a fixed (rational) s."""
        out = {}
        for key, poly in self.terms.items():
            val = poly(s)
            if not isinstance(val, ExactScalar):
                val = ZERO + val
            if not val.is_zero():
                out[key] = val
        return out

    def bind(self, d_values) -> Dict[int, Poly]:
        """Substitute numeric/exact d-values; alpha power -> poly in s."""
        out = {}
        for (l, h), poly in self.terms.items():
            contrib = poly * d_values[l]
            out[h] = out.get(h, Poly()) + contrib
        return out


@lru_cache(maxsize=None)
def w_poly(m: int) -> WPoly:
    """Exact assembly of W_m(s, alpha) from the constrained five-fold sum.

    The constraint -2*nu + mu + k + 2l + h = m together with k >= 3*nu
    forces nu + mu + 2l + h <= m, which bounds every loop explicitly.
    """
    if m < 0:
        raise ValueError("order must be >= 0")
    terms: Dict[Tuple[int, int], Poly] = {}
    for nu in range(m + 1):
        for l in range((m - nu) // 2 + 1):
            for mu in range(m - nu - 2 * l + 1):
                for h in range(m - nu - 2 * l - mu + 1):
                    k = m + 2 * nu - mu - 2 * l - h
                    if (mu + k) % 2:
                        continue
                    const = _a_constant(nu, mu, k, l, h)
                    if const.is_zero():
                        continue
                    top1 = Poly([Fraction(-1, 4) - Fraction(l, 2),
                                 Fraction(-1)])
                    top2 = Poly([Fraction(1, 2) + 2 * nu - mu - k - l,
                                 Fraction(-2)])
                    contrib = (falling_binomial(top1, mu)
                               * falling_binomial(top2, h)) * const
                    key = (l, h)
                    terms[key] = terms.get(key, Poly()) + contrib
    terms = {k: v for k, v in terms.items() if not v.is_zero()}
    if m == 0 and terms != {(0, 0): Poly([1])}:
        # W_0 must be identically 1 by construction
        if list(terms) != [(0, 0)] or terms[(0, 0)](Fraction(0)) != ONE:
            raise StructuralViolation("W_0 is not identically 1: %r" % terms)
    return WPoly(m, terms)


def pole_abscissa(l: int) -> Fraction:
    """The l-th pole location s_l = 3/4 - l/2 of the smoothed twist."""
    return Fraction(3, 4) - Fraction(l, 2)


def residue_identity(M: int) -> Dict[int, Dict[Tuple[int, int], ExactScalar]]:
    """sum_{m=1..M} W_m(s_M, alpha) (-2 pi i)^m D_{M-m} alpha^m, expanded.

    Returns a map: alpha power -> {(l, j): coefficient} where the term
    stands for D_l * D_j, the first index coming from W_m and the
    second from the explicit D_{M-m}.  Substituting actual structural
    invariants must annihilate every alpha coefficient.
    """
    if M < 1:
        raise ValueError("need M >= 1")
    sM = pole_abscissa(M)
    out: Dict[int, Dict[Tuple[int, int], ExactScalar]] = {}
    for m in range(1, M + 1):
        w = w_poly(m).eval_s(sM)
        if not w:
            continue
        # (-2 pi i)^m = 2^m * i^(-m) * pi^m
        twist = ExactScalar({2 * m: _ipow(-m) * QI(2 ** m)})
        for (l, h), c in w.items():
            key = (l, M - m)
            bucket = out.setdefault(h + m, {})
            bucket[key] = bucket.get(key, ZERO) + c * twist
    cleaned = {}
    for power, bucket in out.items():
        bucket = {k: v for k, v in bucket.items() if not v.is_zero()}
        if bucket:
            cleaned[power] = bucket
    return cleaned


@dataclasses.dataclass(frozen=True)
class QuadraticForm:
    """The universal quadratic form Q_N in X_0..X_N.

    ``coeffs`` maps the ordered pair (l, h) with l + h <= N to the
    exact coefficient of X_l X_h; when ``normalized`` the pinned
    combination alpha_{0,N} + alpha_{N,0} equals 1.
    """

    N: int
    coeffs: Dict[Tuple[int, int], ExactScalar]
    normalized: bool

    def evaluate(self, xs) -> ExactScalar:
        total = ZERO
        for (l, h), c in self.coeffs.items():
            total = total + c * xs[l] * xs[h]
        return total


def quad_form_raw(N: int) -> QuadraticForm:
    """The alpha^(2N) coefficient of residue_identity(2N), unnormalized."""
    if N < 1:
        raise ValueError("need N >= 1")
    bucket = residue_identity(2 * N).get(2 * N, {})
    for (l, h) in bucket:
        if l + h > N:
            raise StructuralViolation(
                "product X_%d X_%d exceeds total degree %d" % (l, h, N))
    return QuadraticForm(N, dict(bucket), normalized=False)


@lru_cache(maxsize=None)
def quad_form(N: int) -> QuadraticForm:
    """Normalized Q_N with alpha_{0,N} + alpha_{N,0} = 1, real coefficients."""
    if N < 2:
        raise ValueError("normalized forms require N >= 2")
    raw = quad_form_raw(N)
    pivot = raw.coeffs.get((0, N), ZERO) + raw.coeffs.get((N, 0), ZERO)
    if pivot.is_zero():
        raise NormalizationFailure(
            "X_0 X_%d coefficient vanishes in Q_%d" % (N, N))
    if not pivot.is_monomial():
        raise NormalizationFailure(
            "X_0 X_%d coefficient mixes pi-grades: %r" % (N, pivot))
    coeffs = {}
    for key, c in raw.coeffs.items():
        v = c / pivot
        if not v.is_real():
            raise StructuralViolation(
                "coefficient of X_%d X_%d is not real: %r" % (key[0], key[1], v))
        grades = v.grades()
        if len(grades) > 1:
            raise StructuralViolation(
                "coefficient of X_%d X_%d mixes pi-grades: %r"
                % (key[0], key[1], v))
        coeffs[key] = v
    return QuadraticForm(N, coeffs, normalized=True)


@dataclasses.dataclass(frozen=True)
class RecursionE:
    """d(l) = E_l(d(1)): exact polynomials in the single variable d(1)."""

    Lmax: int
    polys: Dict[int, Poly]

    def d_values(self, d1):
        """Evaluate [E_0(d1), ..., E_Lmax(d1)] at an exact or numeric d1."""
        return [self.polys[l](d1) for l in range(self.Lmax + 1)]


@lru_cache(maxsize=None)
def recursion(Lmax: int) -> RecursionE:
    """Solve Q_N(1, d1, ..., dN) = 0 for dN iteratively, N = 2..Lmax.

    The X_0 X_N coefficient is pinned to 1 by normalization and X_0 = 1,
    so each Q_N is linear in X_N with unit coefficient.
    """
    if Lmax < 2:
        raise ValueError("need Lmax >= 2")
    polys = {0: Poly([ONE]), 1: Poly([ZERO, ONE])}
    for N in range(2, Lmax + 1):
        q = quad_form(N)
        acc = Poly()
        for (l, h), c in q.coeffs.items():
            if (l, h) in ((0, N), (N, 0)):
                continue
            acc = acc + (polys[l] * polys[h]) * c
        polys[N] = -acc
    return RecursionE(Lmax, polys)


def _lagrange(points) -> Poly:
    """Exact Lagrange interpolation through (x_i, y_i) with Fraction data."""
    total = Poly()
    for i, (xi, yi) in enumerate(points):
        basis = Poly([Fraction(1)])
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = basis * Poly([-xj, Fraction(1)])
            denom *= (xi - xj)
        total = total + basis * (yi / denom)
    return total


def poly_extract(kind: str, l: int) -> Poly:
    """The structural invariant d(l) as an exact polynomial in the
    spectral parameter: P_l(mu) for 'hecke', Q_l(kappa) for 'maass'.

    Interpolates through 2l+3 exact evaluations and verifies three
    held-out parameter values; for 'maass' both parity choices must
    yield the same polynomial.
    """
    from .asymfe import structural_symbolic
    from .factors import virtual_gamma

    if l < 0:
        raise ValueError("need l >= 0")
    n_fit, n_check = 2 * l + 3, 3

    def d_at(param: Fraction, eps: int = 0) -> Fraction:
        if kind == "hecke":
            g = virtual_gamma("hecke", mu=param)
        elif kind == "maass":
            g = virtual_gamma("maass", eps=eps, kappa=param)
        else:
            raise ValueError("kind must be 'hecke' or 'maass'")
        return structural_symbolic(g, l).d[l].as_rational()

    params = [Fraction(j, 2) for j in range(1, n_fit + n_check + 1)]
    fit = [(p, d_at(p)) for p in params[:n_fit]]
    poly = _lagrange(fit)
    for p in params[n_fit:]:
        if poly(p) != d_at(p):
            raise InterpolationMismatch(
                "%s invariant d(%d) is not polynomial: check at %s failed"
                % (kind, l, p))
    if kind == "maass":
        for p in params[:n_fit] + params[n_fit:]:
            if poly(p) != d_at(p, eps=1):
                raise InterpolationMismatch(
                    "maass invariant d(%d) depends on parity at kappa=%s"
                    % (l, p))
    return poly
