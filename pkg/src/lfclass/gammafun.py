"""Bernoulli polynomials, complex log-Gamma, generalized binomials and
the Stirling expansion of log Gamma(lambda*z + mu) as z -> infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from .errors import PoleError
from .exact import ExactScalar
from .precision import working_precision
from .series import AsymSeries

POLE_TOLERANCE = 1e-6


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with the B_1 = -1/2 convention (matches B_n(0))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(n: int):
    """Coefficients of B_n(x), lowest degree first, as exact Fractions."""
    return tuple(comb(n, k) * bernoulli_number(n - k) for k in range(n + 1))


def bernoulli_poly(n: int, x):
    """B_n(x) for x of any supported scalar type (exact stays exact)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = 0
    for c in reversed(bernoulli_poly_coeffs(n)):
        out = out * x + c
    return out


def gen_binomial(top, k: int):
    """C(top, k) = top (top-1) ... (top-k+1) / k!; exact when top is exact."""
    if k < 0:
        raise ValueError("k must be >= 0")
    prod = 1
    for j in range(k):
        prod = prod * (top - j)
    if isinstance(prod, (int, Fraction, ExactScalar)):
        return prod * Fraction(1, factorial(k))
    return prod / factorial(k)


def log_gamma(z, guard: int = 16) -> mpmath.mpc:
    """Principal branch of log Gamma(z) at the configured precision.

    Raises PoleError when z is within POLE_TOLERANCE of a nonpositive
    integer.  Delegates to mpmath's implementation (argument raising +
    Stirling with rigorous truncation).
    """
    with working_precision(guard=guard):
        zc = mpmath.mpc(z)
        if zc.real <= 0.5:
            nearest = mpmath.nint(zc.real)
            if nearest <= 0 and abs(zc - nearest) < POLE_TOLERANCE:
                raise PoleError("log_gamma evaluated within %g of pole at %s"
                                % (POLE_TOLERANCE, nearest))
        return +mpmath.loggamma(zc)


def gamma(z, guard: int = 16) -> mpmath.mpc:
    with working_precision(guard=guard):
        return mpmath.exp(log_gamma(z, guard=guard))


@dataclass(frozen=True)
class StirlingExpansion:
    """Asymptotic data of log Gamma(lam*z + mu) as z -> +infinity:

        (lam z + mu - 1/2) log(lam z) - lam z + (1/2) log(2 pi)
            + sum_{n>=1} (-1)^(n+1) B_{n+1}(mu) / (n (n+1) lam^n) z^(-n).

    Only the 1/z-series is stored explicitly (coefficients exact whenever
    mu is exact); the prefactor is determined by lam and mu.
    """

    lam: Fraction
    mu: object
    series: AsymSeries

    def eval_log_gamma(self, z) -> mpmath.mpc:
        """Numeric value of the truncated expansion at z (for cross-checks)."""
        with working_precision(guard=16):
            lam = mpmath.mpf(self.lam.numerator) / self.lam.denominator
            if isinstance(self.mu, ExactScalar):
                mu = self.mu.to_mpc()
            elif isinstance(self.mu, Fraction):
                mu = mpmath.mpf(self.mu.numerator) / self.mu.denominator
            else:
                mu = mpmath.mpc(self.mu)
            zc = mpmath.mpc(z)
            main = (lam * zc + mu - mpmath.mpf(1) / 2) * mpmath.log(lam * zc) \
                - lam * zc + mpmath.log(2 * mpmath.pi) / 2
            u = 1 / zc
            tail = mpmath.mpc(0)
            for n in range(self.series.order, 0, -1):
                c = self.series[n]
                cv = c.to_mpc() if isinstance(c, ExactScalar) else mpmath.mpc(
                    mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else c)
                tail = (tail + cv) * u
            return +(main + tail)

    def truncation_bound(self, z) -> float:
        """First-omitted-term magnitude at z (standard Stirling bound)."""
        n = self.series.order + 1
        mu = self.mu
        b = bernoulli_poly(n + 1, mu)
        bv = abs(complex(b.to_mpc())) if isinstance(b, ExactScalar) else abs(float(b))
        lam = float(self.lam)
        return bv / (n * (n + 1) * abs(lam * complex(z)) ** n)


def stirling_series(lam: Fraction, mu, order: int) -> StirlingExpansion:
    """Exact Stirling-expansion data for log Gamma(lam*z + mu).

    ``mu`` may be a Fraction or an ExactScalar (Gaussian rational);
    the 1/z-series coefficients then stay exact.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lam must be positive")
    coeffs = [0]
    for n in range(1, order + 1):
        b = bernoulli_poly(n + 1, mu)
        scale = Fraction((-1) ** (n + 1), n * (n + 1)) / lam ** n
        coeffs.append(b * scale)
    return StirlingExpansion(lam=lam, mu=mu, series=AsymSeries(coeffs, order))


def adaptive_stirling_order(z_abs: float) -> int:
    """Truncation order for |z| using the error <= first-omitted-term rule.

    The optimal order for Stirling at |w| is about pi*|w|; we cap well
    below that and let callers verify via truncation_bound.
    """
    return max(4, min(int(3.14 * z_abs) - 1, 64))
