"""Smoothed standard-twist sums and residue-fit experiments.

For a degree-2 conductor-1 series F(s) = sum a(n) n^-s the twisted sum
S_alpha(X) = sum_n a(n) e(-alpha sqrt(n)) e^(-n/X) has the Mellin
representation (1/2 pi i) int Gamma(s) F(s, alpha) X^s ds.  Shifting
the contour over the twist's poles at s_l = 3/4 - l/2 predicts

    S_alpha(X) ~ rho_0 Gamma(3/4) X^(3/4) + rho_1 Gamma(1/4) X^(1/4)
                 + F(0, alpha) + O(X^(-1/4)),

with rho_l = e^(i pi/4) conj(a(alpha^2/4)) / sqrt(alpha)
             * d(l) (-2 pi i)^(-l) alpha^(-l).

residue_fit compares a least-squares fit of measured sums against
these predictions; off-spectrum alpha must fit a leading coefficient
compatible with zero.
"""

from __future__ import annotations

import dataclasses
import math
from typing import List, Sequence

import mpmath
import numpy as np

from .errors import FitUnstable, StructuralViolation
from .kernel import twist_sum

# e^(-TAIL_FOLDS) bounds the relative truncation error of the smoothed
# sum; 30 folds keep the tail ~1e-13, far below the fit tolerances.
TAIL_FOLDS = 30


def spectrum_member(source, alpha: float, tol: float = 1e-9):
    """(is_member, m): whether alpha = 2 sqrt(m) for an integer m with
    a(m) != 0."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    x = alpha * alpha / 4.0
    m = int(round(x))
    if m < 1 or abs(x - m) > tol:
        return False, None
    if source.a(m) == 0:
        return False, m
    return True, m


def truncation_index(X: float) -> int:
    return int(math.ceil(TAIL_FOLDS * X))


def smoothed_twist(source, alpha: float, X: float, n_cut: int = None,
                   force_python: bool = False) -> complex:
    """S_alpha(X) truncated where the smoothing weight falls below
    e^(-TAIL_FOLDS)."""
    if alpha <= 0 or X <= 0:
        raise ValueError("alpha and X must be positive")
    if n_cut is None:
        n_cut = truncation_index(X)
    if n_cut > 2 ** 31:
        raise OverflowError("truncation index %d exceeds the memory budget"
                            % n_cut)
    coeffs = source.values(n_cut)
    return twist_sum(coeffs, alpha, X, n0=1, force_python=force_python)


@dataclasses.dataclass
class TwistExperiment:
    alpha: float
    X_grid: List[float]
    sums: List[complex]
    fitted: List[complex]          # c0, c1, c2, c3
    predicted_c0: complex
    predicted_c1: complex
    rel_err_c0: float
    rel_err_c1: float
    condition: float
    rms_residual: float

    def as_dict(self):
        return {
            "alpha": self.alpha,
            "X_grid": list(self.X_grid),
            "sums": [[z.real, z.imag] for z in self.sums],
            "fitted": [[z.real, z.imag] for z in self.fitted],
            "predicted_c0": [self.predicted_c0.real, self.predicted_c0.imag],
            "predicted_c1": [self.predicted_c1.real, self.predicted_c1.imag],
            "rel_err_c0": self.rel_err_c0,
            "rel_err_c1": self.rel_err_c1,
            "condition": self.condition,
            "rms_residual": self.rms_residual,
        }


def predicted_rho(a_m: complex, alpha: float, d_l: complex, l: int) -> complex:
    """rho_l(alpha) for a coefficient a(alpha^2/4) and invariant d(l)."""
    phase = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
    rho = phase * a_m.conjugate() / math.sqrt(alpha) * d_l
    rho *= (-2j * math.pi) ** (-l) * alpha ** (-l)
    return rho


def geometric_grid(x_lo: float, x_hi: float, count: int) -> List[float]:
    ratio = (x_hi / x_lo) ** (1.0 / (count - 1))
    return [x_lo * ratio ** i for i in range(count)]


def residue_fit(source, alpha: float, X_grid: Sequence[float],
                d_values: Sequence[complex] = (1.0, 0.0),
                require_spectrum: bool = True,
                force_python: bool = False) -> TwistExperiment:
    """Fit S_alpha(X) to c0 X^(3/4) + c1 X^(1/4) + c2 + c3 X^(-1/4) and
    compare c0, c1 with the residue predictions.

    ``d_values`` are the structural invariants (d(0), d(1)) of the
    series being twisted.  For off-spectrum alpha (require_spectrum
    False) the predictions are zero and rel_err fields hold the fitted
    magnitudes scaled by the on-spectrum target size instead.
    """
    X_grid = sorted(float(x) for x in X_grid)
    if len(X_grid) < 6:
        raise ValueError("need at least 6 grid points for a stable fit")
    member, m = spectrum_member(source, alpha)
    if require_spectrum and not member:
        raise ValueError("alpha=%g is not in the spectrum of the source"
                         % alpha)
    sums = [smoothed_twist(source, alpha, X, force_python=force_python)
            for X in X_grid]

    Xa = np.asarray(X_grid)
    design = np.column_stack([Xa ** 0.75, Xa ** 0.25,
                              np.ones_like(Xa), Xa ** -0.25])
    scale = np.abs(design).max(axis=0)
    scaled = design / scale
    cond = float(np.linalg.cond(scaled))
    if cond > 1e8:
        raise FitUnstable("design-matrix condition number %.3g > 1e8" % cond)
    rhs = np.asarray(sums, dtype=np.complex128)
    sol, *_ = np.linalg.lstsq(scaled, rhs, rcond=None)
    fitted = list(sol / scale)
    resid = rhs - design @ (sol / scale)
    rms = float(np.sqrt(np.mean(np.abs(resid) ** 2)))

    # a pole at s = 1 would show up as an X^1 term the model lacks
    aug = np.column_stack([scaled, Xa / Xa.max()])
    aug_sol, *_ = np.linalg.lstsq(aug, rhs, rcond=None)
    linear_part = abs(aug_sol[-1])
    aug_resid = rhs - aug @ aug_sol
    aug_rms = float(np.sqrt(np.mean(np.abs(aug_resid) ** 2))) + 1e-300
    if linear_part > 20 * max(aug_rms, rms) \
            and linear_part > 0.01 * abs(rhs[-1]):
        raise StructuralViolation(
            "fit residuals show an X^1 signature (|c_X| = %.3g); "
            "the twist should have no pole at s = 1" % linear_part)

    a_m = complex(source.a(m)) if member else 0.0
    g34 = float(mpmath.gamma(mpmath.mpf(3) / 4))
    g14 = float(mpmath.gamma(mpmath.mpf(1) / 4))
    if member:
        c0_pred = predicted_rho(a_m, alpha, complex(d_values[0]), 0) * g34
        c1_pred = predicted_rho(a_m, alpha, complex(d_values[1]), 1) * g14
        rel0 = abs(fitted[0] - c0_pred) / abs(c0_pred)
        rel1 = abs(fitted[1] - c1_pred) / abs(c1_pred)
    else:
        # compare against the size an on-spectrum signal would have
        c0_pred = complex(0.0)
        c1_pred = complex(0.0)
        scale0 = abs(predicted_rho(1.0, alpha, 1.0, 0) * g34)
        rel0 = abs(fitted[0]) / scale0
        rel1 = abs(fitted[1])
    return TwistExperiment(alpha=alpha, X_grid=X_grid, sums=sums,
                           fitted=fitted, predicted_c0=c0_pred,
                           predicted_c1=c1_pred, rel_err_c0=rel0,
                           rel_err_c1=rel1, condition=cond,
                           rms_residual=rms)
