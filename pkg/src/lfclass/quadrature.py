"""Adaptive quadrature along vertical segments in the complex plane."""

from __future__ import annotations

import mpmath

from .errors import NonConvergence
from .precision import working_precision


def line_integral(f, sigma, t0, t1, tol=None, guard: int = 32, points=None,
                  prec: int = None):
    """Integral of f over the vertical segment sigma + i t, t in [t0, t1].

    Gauss-Legendre adaptive quadrature (mpmath); raises NonConvergence
    when the estimated error exceeds ``tol`` (default: 2^-(P/2) at the
    configured working precision P).  ``points`` optionally lists
    interior breakpoints to split oscillatory integrands.
    """
    with working_precision(bits=prec, guard=guard) as ctx:
        if tol is None:
            tol = mpmath.mpf(2) ** (-(ctx.prec - guard) // 2)
        sig = mpmath.mpf(sigma)

        def g(t):
            return f(mpmath.mpc(sig, t))

        interval = [t0] + list(points or []) + [t1]
        val, err = ctx.quad(g, interval, error=True)
        if err > tol * (1 + abs(val)):
            raise NonConvergence(
                "line integral error estimate %s exceeds tolerance %s"
                % (mpmath.nstr(err, 5), mpmath.nstr(tol, 5)))
        # d s = i d t along the segment
        return +(mpmath.mpc(0, 1) * val)
