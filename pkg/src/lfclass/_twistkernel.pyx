# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loop for smoothed exponential sums.

Computes sum_n a(n) * e^(-2 pi i alpha sqrt(n)) * e^(-n/X) with the
phase carried in double-double arithmetic (a Newton-refined square
root and a two-product phase multiply), Neumaier-compensated block
accumulation, and a fixed summation order so results are bit-identical
across runs regardless of threading or block scheduling.
"""

from libc.math cimport sqrt, sin, cos, exp, floor, fma

ctypedef fused coef_t:
    short
    double

cdef struct dd:
    double hi
    double lo


cdef inline dd two_sum(double a, double b) noexcept nogil:
    cdef dd r
    cdef double v
    r.hi = a + b
    v = r.hi - a
    r.lo = (a - (r.hi - v)) + (b - v)
    return r


cdef inline dd two_prod(double a, double b) noexcept nogil:
    cdef dd r
    r.hi = a * b
    r.lo = fma(a, b, -r.hi)
    return r


cdef inline dd dd_sqrt(double n) noexcept nogil:
    # one Newton step on the double sqrt gives ~2e-32 relative accuracy
    cdef dd r, y2
    cdef double y = sqrt(n)
    y2 = two_prod(y, y)
    r.hi = y
    r.lo = ((n - y2.hi) - y2.lo) / (2.0 * y)
    return r


# 2*pi in double-double
cdef double TWOPI_HI = 6.283185307179586
cdef double TWOPI_LO = 2.4492935982947064e-16


cdef inline double reduced_phase(dd root, double alpha) noexcept nogil:
    """-2*pi*alpha*sqrt(n) reduced modulo 2*pi, to ~1e-26 absolute."""
    cdef dd p, q
    cdef double k, frac
    # t = alpha * sqrt(n), in double-double
    p = two_prod(alpha, root.hi)
    p.lo = fma(alpha, root.lo, p.lo)
    # phase turns: we only need t mod 1 before scaling by -2*pi
    k = floor(p.hi)
    q = two_sum(p.hi - k, p.lo)
    frac = q.hi + q.lo
    if frac >= 1.0:
        frac -= 1.0
    elif frac < 0.0:
        frac += 1.0
    return -(TWOPI_HI * frac + TWOPI_LO * frac)


def twist_sum(coef_t[::1] coeffs, double alpha, double X, Py_ssize_t n0=1):
    """Smoothed twisted sum over n = n0 .. n0+len(coeffs)-1.

    Returns a Python complex.  Deterministic: fixed block size and a
    single fixed reduction order.
    """
    cdef Py_ssize_t N = coeffs.shape[0]
    cdef Py_ssize_t BLOCK = 4096
    cdef Py_ssize_t i, j, stop
    cdef double n, w, r, ph, c, a
    cdef double bre, bim, cre, cim, t, z
    cdef dd sre, sim, root, tmp
    sre.hi = 0.0; sre.lo = 0.0
    sim.hi = 0.0; sim.lo = 0.0
    r = exp(-1.0 / X)
    i = 0
    with nogil:
        while i < N:
            stop = i + BLOCK
            if stop > N:
                stop = N
            # Neumaier-compensated partial sums within the block
            bre = 0.0; cre = 0.0
            bim = 0.0; cim = 0.0
            n = <double> (n0 + i)
            w = exp(-n / X)
            for j in range(i, stop):
                a = <double> coeffs[j]
                if a != 0.0:
                    n = <double> (n0 + j)
                    root = dd_sqrt(n)
                    ph = reduced_phase(root, alpha)
                    z = a * w * cos(ph)
                    t = bre + z
                    if (bre if bre >= 0 else -bre) >= (z if z >= 0 else -z):
                        cre += (bre - t) + z
                    else:
                        cre += (z - t) + bre
                    bre = t
                    z = a * w * sin(ph)
                    t = bim + z
                    if (bim if bim >= 0 else -bim) >= (z if z >= 0 else -z):
                        cim += (bim - t) + z
                    else:
                        cim += (z - t) + bim
                    bim = t
                w *= r
            # fold the block into the global double-double accumulators
            tmp = two_sum(sre.hi, bre + cre)
            sre.hi = tmp.hi
            sre.lo += tmp.lo
            tmp = two_sum(sim.hi, bim + cim)
            sim.hi = tmp.hi
            sim.lo += tmp.lo
            i = stop
    return complex(sre.hi + sre.lo, sim.hi + sim.lo)
