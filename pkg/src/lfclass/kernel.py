"""Summation kernel dispatch: compiled extension with pure-Python fallback.

The compiled kernel (Cython) carries the oscillatory phase in
double-double precision; the fallback uses numpy in float64 with
fixed-size blocks and exact (fsum) accumulation of the block partial
sums, which is accurate to ~1e-11 relative on 10^8-term sums — ample
for the percent-level residue fits, but measurably less precise than
the compiled path.  Both are deterministic: fixed block size, fixed
reduction order.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from . import _twistkernel as _compiled
except ImportError:  # pragma: no cover - build-environment dependent
    _compiled = None

HAVE_COMPILED = _compiled is not None

_BLOCK = 1 << 16


def twist_sum_python(coeffs: np.ndarray, alpha: float, X: float,
                     n0: int = 1) -> complex:
    """Reference implementation of the smoothed twisted sum."""
    N = len(coeffs)
    re_parts = []
    im_parts = []
    for start in range(0, N, _BLOCK):
        stop = min(start + _BLOCK, N)
        n = np.arange(n0 + start, n0 + stop, dtype=np.float64)
        a = np.asarray(coeffs[start:stop], dtype=np.complex128 if
                       np.iscomplexobj(coeffs) else np.float64)
        phase = alpha * np.sqrt(n)
        phase = -2.0 * np.pi * (phase - np.floor(phase))
        z = a * np.exp(-n / X) * (np.cos(phase) + 1j * np.sin(phase))
        re_parts.append(float(np.sum(z.real)))
        im_parts.append(float(np.sum(z.imag)))
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def twist_sum(coeffs: np.ndarray, alpha: float, X: float, n0: int = 1,
              force_python: bool = False) -> complex:
    """Smoothed twisted sum over n = n0..n0+len(coeffs)-1 using the
    best available backend."""
    if _compiled is not None and not force_python:
        arr = np.ascontiguousarray(coeffs)
        if arr.dtype == np.int16:
            return _compiled.twist_sum(arr, float(alpha), float(X), n0)
        if not np.iscomplexobj(arr):
            return _compiled.twist_sum(
                np.asarray(arr, dtype=np.float64), float(alpha), float(X), n0)
        # complex coefficients only occur for small file-based sources
    return twist_sum_python(coeffs, alpha, X, n0)
