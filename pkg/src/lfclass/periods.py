"""Period functions and the entire-function side of the polar analysis.

f(z) = sum a(n) n^lambda e(nz) on the upper half-plane, the period
function psi(z) = f(z) - z^(-2 lambda - 1) f(-1/z), its three-term
relation, and the Mittag-Leffler-type entire function E_(1/2-mu)(w)
together with the vertical-line contour integral it equals (up to the
stated prefactor).
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

import mpmath

from .errors import NonConvergence, SlowConvergence
from .precision import working_precision
from .quadrature import line_integral


@dataclasses.dataclass
class FourierSeries:
    """sum_n a(n) n^lambda e(nz) with a truncation policy driven by a
    declared polynomial growth bound |a(n) n^lambda| <= n^growth."""

    source: object          # CoefficientSource
    lam: Fraction           # the exponent lambda (real rational here)
    growth: float           # exponent in the coefficient bound

    def cutoff(self, y: float, prec: int) -> int:
        """Smallest n_max with n^growth e^(-2 pi n y) summed beyond
        n_max below 2^-(prec + 10)."""
        import math
        target = (prec + 10) * math.log(2)
        n = 8
        while True:
            # tail ~ integrand at n_max times a mild geometric factor
            if 2 * math.pi * n * y - self.growth * math.log(n + 1) > target + 3:
                return n
            n = int(n * 1.25) + 1


def hecke_series(source, weight_shift: Fraction, growth: float = None
                 ) -> FourierSeries:
    """Series with lambda equal to the source's analytic shift, so the
    summed coefficients a(n) n^lambda are the raw integral ones."""
    if growth is None:
        growth = float(weight_shift) + 1.1  # divisor-bound margin
    return FourierSeries(source=source, lam=weight_shift, growth=growth)


def f_eval(fs: FourierSeries, z, guard: int = 64):
    """f(z) for Im z > 0, truncated per the series' growth policy."""
    with working_precision(guard=guard) as ctx:
        z = mpmath.mpc(z)
        y = float(z.imag)
        if y < 1e-3:
            raise SlowConvergence(
                "Im z = %g is too small for the Fourier series" % y)
        n_max = fs.cutoff(y, ctx.prec)
        raw = fs.source.raw(n_max)
        lam = fs.lam
        shift = fs.source.shift
        q = mpmath.exp(2j * mpmath.pi * z)
        qn = mpmath.mpc(1)
        total = mpmath.mpc(0)
        for n in range(1, n_max + 1):
            qn *= q
            c = raw[n - 1]
            if not c:
                continue
            if lam == shift:
                coef = mpmath.mpmathify(int(c)) if isinstance(c, int) \
                    else mpmath.mpmathify(c)
            else:
                coef = mpmath.mpmathify(c) * mpmath.power(
                    n, mpmath.mpf(lam.numerator) / lam.denominator
                    - mpmath.mpf(shift.numerator) / shift.denominator)
            total += coef * qn
        return +total


def psi_eval(fs: FourierSeries, z, guard: int = 64):
    """psi(z) = f(z) - z^(-2 lambda - 1) f(-1/z), principal branch of
    the power on the upper half-plane."""
    with working_precision(guard=guard):
        z = mpmath.mpc(z)
        exponent = -(2 * mpmath.mpf(fs.lam.numerator) / fs.lam.denominator + 1)
        prefactor = mpmath.power(z, exponent)
        return +(f_eval(fs, z, guard=guard)
                 - prefactor * f_eval(fs, -1 / z, guard=guard))


def three_term_residual(fs: FourierSeries, z, guard: int = 64):
    """psi(z) - psi(z+1) - (z+1)^(-2 mu - 1) psi(z/(z+1)) with mu equal
    to the series' lambda."""
    with working_precision(guard=guard):
        z = mpmath.mpc(z)
        exponent = -(2 * mpmath.mpf(fs.lam.numerator) / fs.lam.denominator + 1)
        return +(psi_eval(fs, z, guard=guard)
                 - psi_eval(fs, z + 1, guard=guard)
                 - mpmath.power(z + 1, exponent)
                 * psi_eval(fs, z / (z + 1), guard=guard))


def mittag_leffler(mu, w, guard: int = 32):
    """sum_{l>=0} (-w)^l / Gamma(l + 1/2 - mu); entire in w.

    Terms where the reciprocal Gamma sits on a pole contribute exactly
    zero (mpmath.rgamma handles this natively).
    """
    with working_precision(guard=guard) as ctx:
        w = mpmath.mpc(w)
        mu_f = mpmath.mpf(mu.numerator) / mu.denominator \
            if isinstance(mu, Fraction) else mpmath.mpf(mu)
        eps = mpmath.mpf(2) ** (-ctx.prec - 8)
        total = mpmath.mpc(0)
        power = mpmath.mpc(1)
        biggest = mpmath.mpf(0)
        l = 0
        while True:
            term = power * mpmath.rgamma(l + mpmath.mpf(1) / 2 - mu_f)
            total += term
            biggest = max(biggest, abs(term))
            if l > 2 * abs(w) + 8 and abs(term) < eps * (1 + biggest):
                break
            power *= -w
            l += 1
            if l > 10000:
                raise NonConvergence("Mittag-Leffler series did not settle")
        return +total


def j_contour(mu, w, delta: float = 0.25, prec: int = 120):
    """(1/2 pi i) * integral over Re s = 1 + delta of
    w^(-s) / (cos(pi s) Gamma(1 - s - mu)) ds.

    Converges like e^(-(pi/2 - |arg w|)|t|); w must stay away from the
    imaginary axis.  The power w^(-s) uses the principal branch, which
    matches the stated branch range for Re w > 0.  The abscissa
    1 + delta must avoid half-integers, where cos(pi s) vanishes on
    the contour; the default delta = 1/4 keeps clear of them.
    ``prec`` bounds the
    quadrature precision: the oscillatory line integral is much more
    expensive per bit than the series side, and the identity checks
    only need ~1e-15.
    """
    with working_precision(bits=prec) as ctx:
        w = mpmath.mpc(w)
        arg = abs(mpmath.arg(w))
        if arg > mpmath.pi / 2 - mpmath.mpf("0.1"):
            raise NonConvergence(
                "arg w = %s too close to +-pi/2 for contour decay"
                % mpmath.nstr(arg, 5))
        mu_f = mpmath.mpf(mu.numerator) / mu.denominator \
            if isinstance(mu, Fraction) else mpmath.mpf(mu)
        sigma = 1 + delta
        rate = float(mpmath.pi / 2 - arg)
        digits = ctx.prec * 0.30103
        # e^(-rate T) * T^(sigma + mu - 1/2) < 10^-digits
        import math
        T = (digits * math.log(10) + 20) / rate
        for _ in range(20):
            T_new = (digits * math.log(10) + 10
                     + max(0.0, (sigma + float(mu_f) - 0.5)) * math.log(T + 2)
                     ) / rate
            if abs(T_new - T) < 0.5:
                break
            T = T_new
        logw = mpmath.log(w)

        def integrand(s):
            return (mpmath.exp(-s * logw) * mpmath.rgamma(1 - s - mu_f)
                    / mpmath.cos(mpmath.pi * s))

        # split into short subintervals so the oscillation is resolved
        step = 4.0
        points = []
        t = -T + step
        while t < T - step / 2:
            points.append(t)
            t += step
        val = line_integral(integrand, sigma, -T, T, points=points,
                            prec=prec, tol=mpmath.mpf(10) ** (-24))
        return +(val / (2j * mpmath.pi))


def ml_contour_residual(mu, w, guard: int = 32):
    """j_contour(mu, w) + w^(-1/2) E_(1/2-mu)(w) / pi; identically zero
    by the residue expansion of the contour integral."""
    with working_precision(guard=guard):
        w = mpmath.mpc(w)
        return +(j_contour(mu, w)
                 + mpmath.power(w, mpmath.mpf(-1) / 2)
                 * mittag_leffler(mu, w, guard=guard) / mpmath.pi)
