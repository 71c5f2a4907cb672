"""Global working-precision configuration.

All arbitrary-precision numerics run on mpmath.  The library-wide
default is 256 bits; individual routines may add guard bits on top of
the configured precision (they state so in their docstrings) but the
user-facing precision is always the value configured here.
"""

from __future__ import annotations

import contextlib

import mpmath

DEFAULT_PRECISION_BITS = 256

_precision_bits = DEFAULT_PRECISION_BITS


def get_precision() -> int:
    """The configured working precision in bits."""
    return _precision_bits


def set_precision(bits: int) -> None:
    global _precision_bits
    if bits < 53:
        raise ValueError("working precision must be at least 53 bits")
    _precision_bits = int(bits)


@contextlib.contextmanager
def working_precision(bits: int = None, guard: int = 0):
    """mpmath context at the configured precision plus ``guard`` bits.

    When ``bits`` is None (use the configured default) and the ambient
    mpmath precision is already higher, the higher of the two is kept:
    callers that deliberately elevate precision (e.g. linear solvers
    feeding on library evaluators) must not be silently downgraded.
    An explicit ``bits`` value always wins, so precision can also be
    lowered on purpose for expensive low-accuracy work.
    """
    if bits is None:
        target = max(_precision_bits + guard, mpmath.mp.prec)
    else:
        target = bits + guard
    with mpmath.workprec(target):
        yield mpmath.mp
