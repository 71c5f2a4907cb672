"""Euler-Maclaurin evaluation of the Riemann zeta function and the
functional-equation residual for its square.

zeta_em provides an analytic continuation that never invokes the
functional equation, so the residual check below is not circular.
"""

from __future__ import annotations

import mpmath

from .errors import NonConvergence, PoleError
from .gammafun import bernoulli_number
from .precision import working_precision


def zeta_em(s, prec: int = None):
    """zeta(s) by Euler-Maclaurin summation.

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_k B_2k/(2k)! * (s)_(2k-1) * N^(-s-2k+1).

    The cutoff N grows with the precision and |Im s| so the correction
    series converges geometrically (ratio ~ |s+2k|^2 / (2 pi N)^2).
    """
    with working_precision(bits=prec, guard=32) as ctx:
        s = mpmath.mpc(s)
        if abs(s - 1) < mpmath.mpf("1e-6"):
            raise PoleError("zeta has its pole at s = 1 (got %s)"
                            % mpmath.nstr(s, 8))
        digits = ctx.prec * 0.30103
        N = int(digits * 0.9 + abs(s.imag) * 0.5) + 10
        total = mpmath.mpc(0)
        for n in range(1, N):
            total += mpmath.power(n, -s)
        total += mpmath.power(N, 1 - s) / (s - 1)
        total += mpmath.power(N, -s) / 2
        eps = mpmath.mpf(2) ** (-ctx.prec - 8)
        scale = 1 + abs(total)
        poch = s  # (s)_1
        k = 1
        npow = mpmath.power(N, -s - 1)
        inv_n2 = mpmath.mpf(1) / (N * N)
        while True:
            b = bernoulli_number(2 * k)
            term = (mpmath.mpf(b.numerator) / b.denominator
                    / mpmath.factorial(2 * k)) * poch * npow
            total += term
            if abs(term) < eps * scale:
                break
            k += 1
            if 2 * k > 6.28 * N:
                raise NonConvergence(
                    "Euler-Maclaurin tail for zeta(%s) stopped converging"
                    % mpmath.nstr(s, 8))
            poch *= (s + 2 * k - 3) * (s + 2 * k - 2)
            npow *= inv_n2
        return +total


def gamma_zeta2(s):
    """The completing factor pi^(-s) Gamma(s/2)^2 for the square of zeta."""
    return mpmath.pi ** (-s) * mpmath.gamma(s / 2) ** 2


def fe_residual_zeta2(s, guard: int = None):
    """gamma(s) zeta(s)^2 - gamma(1-s) zeta(1-s)^2 with gamma(s) =
    pi^(-s) Gamma(s/2)^2; identically zero in exact arithmetic.

    Both sides are computed with an internal precision of roughly twice
    the configured one so the returned residual isolates genuine
    deviations rather than rounding noise.
    """
    with working_precision() as base:
        extra = base.prec if guard is None else guard
    with working_precision(guard=extra + 64) as ctx:
        s = mpmath.mpc(s)
        for point in (s, 1 - s):
            if abs(point - 1) < mpmath.mpf("1e-6"):
                raise PoleError("zeta pole adjacent to s = %s"
                                % mpmath.nstr(s, 8))
            half = point / 2
            if abs(half - mpmath.nint(half.real)) < mpmath.mpf("1e-6") \
                    and half.real <= 1e-6:
                raise PoleError("gamma pole adjacent to s = %s"
                                % mpmath.nstr(s, 8))
        lhs = gamma_zeta2(s) * zeta_em(s, prec=ctx.prec) ** 2
        rhs = gamma_zeta2(1 - s) * zeta_em(1 - s, prec=ctx.prec) ** 2
        return +(lhs - rhs)
