"""The asymmetric form of the functional equation.

Writing the equation as F(s) = omega * S(s) h(s) F(1-s), this module
expands the finite sine product S(s) into exponentials, evaluates the
h-function, and extracts the coefficients of its canonical asymptotic
expansion ("structural invariants") by two independent methods: an
exact Stirling-series computation and a numeric asymptotic fit on the
negative real axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import mpmath

from .errors import (FrequencyCollision, IllConditioned, PoleError,
                     PrefactorMismatch)
from .exact import ExactScalar, QI, QI_ZERO, QI_ONE
from .factors import GammaFactor, StructuralQ, invariants
from .gammafun import log_gamma, stirling_series
from .precision import get_precision, working_precision
from .series import AsymSeries

# -- exponential sums -------------------------------------------------


class ExpCoef:
    """Exact coefficient of the form sum_b g_b * exp(pi * b), g_b Gaussian
    rational, b rational.  The exponential grades arise from sine factors
    with complex arguments (exp(i pi mu) = i^(2 Re mu) exp(-pi Im mu));
    keeping them graded makes cancellation exact."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for b, g in terms.items():
                if g:
                    clean[Fraction(b)] = g
        self.terms = clean

    @classmethod
    def from_qi(cls, g: QI) -> "ExpCoef":
        return cls({Fraction(0): g})

    def __add__(self, other: "ExpCoef") -> "ExpCoef":
        terms = dict(self.terms)
        for b, g in other.terms.items():
            terms[b] = terms.get(b, QI_ZERO) + g
        return ExpCoef(terms)

    def __mul__(self, other: "ExpCoef") -> "ExpCoef":
        terms = {}
        for b1, g1 in self.terms.items():
            for b2, g2 in other.terms.items():
                b = b1 + b2
                terms[b] = terms.get(b, QI_ZERO) + g1 * g2
        return ExpCoef(terms)

    def __neg__(self) -> "ExpCoef":
        return ExpCoef({b: -g for b, g in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ExpCoef):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_gauss(self) -> bool:
        return set(self.terms) <= {Fraction(0)}

    def as_gauss(self) -> QI:
        if not self.terms:
            return QI(0)
        if not self.is_gauss():
            raise ValueError("%r carries exponential grades" % (self,))
        return self.terms[Fraction(0)]

    def to_mpc(self) -> mpmath.mpc:
        with working_precision(guard=16):
            acc = mpmath.mpc(0)
            for b, g in self.terms.items():
                acc += g.to_mpc() * mpmath.exp(
                    mpmath.pi * mpmath.mpf(b.numerator) / b.denominator)
            return +acc

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%r*exp(%s*pi)" % (g, b) if b else repr(g)
                          for b, g in sorted(self.terms.items()))


@dataclass(frozen=True)
class ExpSum:
    """S(s) = sum_j a_j exp(i pi w_j s), frequencies sorted increasing.

    Exact path: frequencies are Fractions and coefficients ExpCoef.
    Numeric path: frequencies mpf, coefficients mpc."""

    frequencies: tuple
    coefficients: tuple
    exact: bool

    @property
    def N(self) -> int:
        return len(self.frequencies) - 1

    def eval(self, s) -> mpmath.mpc:
        with working_precision(guard=16):
            sc = mpmath.mpc(s)
            acc = mpmath.mpc(0)
            for w, a in zip(self.frequencies, self.coefficients):
                wf = (mpmath.mpf(w.numerator) / w.denominator
                      if isinstance(w, Fraction) else mpmath.mpf(w))
                av = a.to_mpc() if isinstance(a, ExpCoef) else mpmath.mpc(a)
                acc += av * mpmath.exp(1j * mpmath.pi * wf * sc)
            return +acc

    def check_symmetry(self) -> bool:
        """The canonical-shape conditions: w_0 = -1, w_N = 1, w_j = -w_{N-j},
        all coefficients nonzero."""
        w = self.frequencies
        if not w or w[0] != -1 or w[-1] != 1:
            return False
        n = self.N
        for j in range(n + 1):
            if w[j] != -w[n - j]:
                return False
        return all(bool(a) if isinstance(a, ExpCoef) else abs(a) > 0
                   for a in self.coefficients)


def _i_power(p: int) -> QI:
    return (QI(1), QI(0, 1), QI(-1), QI(0, -1))[p % 4]


def s_expand(g: GammaFactor) -> ExpSum:
    """Expand 2^r prod_j sin(pi(lam_j s + mu_j)) into exponentials.

    Exact when every lam_j is rational and every 2*Re(mu_j) is an integer
    (so exp(i pi mu) lands in the Gaussian rationals times exponential
    grades); otherwise numeric with merge tolerance 10^(-P/3) and a
    FrequencyCollision error on ambiguous merges.
    """
    exact = g.is_exact and all(
        (2 * mu.real_part().as_rational()).denominator == 1 for mu in g.mus)
    if exact:
        terms = {Fraction(0): ExpCoef.from_qi(QI_ONE)}
        for lam, mu in zip(g.lambdas, g.mus):
            a2 = (2 * mu.real_part().as_rational())  # integer
            b = mu.imag_part().as_rational()
            # 2 sin(pi x) = -i (e^{i pi x} - e^{-i pi x})
            plus = ExpCoef({-b: QI(0, -1) * _i_power(int(a2))})
            minus = ExpCoef({b: QI(0, 1) * _i_power(-int(a2))})
            new = {}
            for w, c in terms.items():
                for dw, f in ((lam, plus), (-lam, minus)):
                    key = w + dw
                    prod = c * f
                    if key in new:
                        new[key] = new[key] + prod
                    else:
                        new[key] = prod
            terms = new
        items = sorted((w, c) for w, c in terms.items() if c)
        return ExpSum(frequencies=tuple(w for w, _ in items),
                      coefficients=tuple(c for _, c in items), exact=True)

    with working_precision(guard=32):
        tol = mpmath.mpf(10) ** (-get_precision() // 3)
        terms = [(mpmath.mpf(0), mpmath.mpc(1))]
        for j, lam in enumerate(g.lambdas):
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            mu = g.mu_mpc(j)
            ep = -1j * mpmath.exp(1j * mpmath.pi * mu)
            em = 1j * mpmath.exp(-1j * mpmath.pi * mu)
            new = []
            for w, c in terms:
                new.append((w + lamf, c * ep))
                new.append((w - lamf, c * em))
            terms = new
        terms.sort(key=lambda t: t[0])
        merged = []
        for w, c in terms:
            if merged and abs(w - merged[-1][0]) < tol:
                if w != merged[-1][0]:
                    raise FrequencyCollision(
                        "frequencies %s and %s within merge tolerance but not equal"
                        % (mpmath.nstr(merged[-1][0], 12), mpmath.nstr(w, 12)))
                merged[-1] = (w, merged[-1][1] + c)
            else:
                merged.append((w, c))
        kept = [(w, +c) for w, c in merged if abs(c) > tol]
        return ExpSum(frequencies=tuple(w for w, _ in kept),
                      coefficients=tuple(c for _, c in kept), exact=False)


# -- the h-function ---------------------------------------------------


def log_h(g: GammaFactor, s) -> mpmath.mpc:
    """log of h(s) = (2 pi)^(-r) Q^(1-2s) prod_j Gamma(lam_j(1-s) + conj-mu_j)
    Gamma(1 - lam_j s - mu_j)."""
    with working_precision(guard=32):
        sc = mpmath.mpc(s)
        acc = -g.r * mpmath.log(2 * mpmath.pi) \
            + (1 - 2 * sc) * mpmath.log(g.Q_mpf())
        for j, lam in enumerate(g.lambdas):
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            mu = g.mu_mpc(j)
            acc += log_gamma(lamf * (1 - sc) + mpmath.conj(mu))
            acc += log_gamma(1 - lamf * sc - mu)
        return +acc


def h_eval(g: GammaFactor, s) -> mpmath.mpc:
    """The h-function of the asymmetric functional equation, numerically."""
    with working_precision(guard=32):
        return +mpmath.exp(log_h(g, s))


# -- structural invariants: exact Stirling route ----------------------


@dataclass(frozen=True)
class StructuralInvariants:
    prefactor: object            # ExactScalar when exact, else mpc
    d: tuple                     # d[0..L]
    order: int
    method: str                  # 'symbolic' | 'numeric'
    errors: Optional[tuple] = None   # per-coefficient error estimates (numeric)


def _factor_rational(x: Fraction):
    """Prime factorization exponents of a positive rational."""
    out = {}

    def grind(n: int, sign: int):
        d = 2
        while d * d <= n:
            while n % d == 0:
                out[d] = out.get(d, 0) + sign
                n //= d
            d += 1
        if n > 1:
            out[n] = out.get(n, 0) + sign

    if x <= 0:
        raise ValueError("need a positive rational")
    grind(x.numerator, 1)
    grind(x.denominator, -1)
    return out


class _LogLedger:
    """Exact linear combination  plain + sum_p c_p log p + c_pi log pi
    with Gaussian-rational coefficients (p prime)."""

    def __init__(self):
        self.entries = {}

    def add(self, key, coef):
        if isinstance(coef, (int, Fraction)):
            coef = QI(coef)
        if isinstance(coef, ExactScalar):
            coef = coef.as_gauss()
        cur = self.entries.get(key, QI_ZERO) + coef
        if cur:
            self.entries[key] = cur
        elif key in self.entries:
            del self.entries[key]

    def add_plain(self, coef):
        self.add(("one",), coef)

    def add_log_rational(self, x: Fraction, coef):
        if not isinstance(coef, QI):
            coef = QI(coef)
        for p, e in _factor_rational(Fraction(x)).items():
            self.add(("logp", p), coef * QI(e))

    def add_log_pi(self, coef):
        self.add(("logpi",), coef)

    def is_zero(self) -> bool:
        return not self.entries

    def exact_exponential(self):
        """exp(ledger) as an ExactScalar when it lands in the ring, else None."""
        if ("one",) in self.entries:
            return None
        pi_coef = self.entries.get(("logpi",), QI_ZERO)
        if pi_coef.im != 0 or (2 * pi_coef.re).denominator != 1:
            return None
        rat = Fraction(1)
        for key, coef in self.entries.items():
            if key == ("logpi",):
                continue
            p = key[1]
            if coef.im != 0 or coef.re.denominator != 1:
                return None
            rat *= Fraction(p) ** coef.re.numerator
        return ExactScalar.pi_power(int(2 * pi_coef.re) , rat)

    def to_mpc(self) -> mpmath.mpc:
        with working_precision(guard=16):
            acc = mpmath.mpc(0)
            for key, coef in self.entries.items():
                if key == ("one",):
                    acc += coef.to_mpc()
                elif key == ("logpi",):
                    acc += coef.to_mpc() * mpmath.log(mpmath.pi)
                else:
                    acc += coef.to_mpc() * mpmath.log(key[1])
            return +acc

    def __repr__(self):
        return "LogLedger(%r)" % (self.entries,)


def _gauss(mu: ExactScalar) -> QI:
    return mu.as_gauss()


def structural_symbolic(g: GammaFactor, L: int) -> StructuralInvariants:
    """Exact structural invariants via Stirling composition.

    Divides h(s) by (4 pi)^(2s-1) (2 pi)^(-1/2) Gamma(3/2 - 2s), expands
    the log of the ratio as an exact series in 1/z (z = -s -> +infinity),
    checks that the z log z, z and log z prefactor parts cancel (they do
    precisely for degree 2, conductor 1, zero internal shift), and solves
    the triangular change of basis to Gamma(t-l)/Gamma(t).
    """
    if not g.is_exact:
        raise ValueError("symbolic route needs exact gamma-factor data")
    if not isinstance(g.Q, StructuralQ):
        raise ValueError("symbolic route needs structural Q")

    order = L + 2
    half = Fraction(1, 2)

    # Ledgers for the prefactor pieces that must cancel, and the constant.
    led_zlogz = _LogLedger()
    led_z = _LogLedger()
    led_logz = _LogLedger()
    led_const = _LogLedger()
    series_total = AsymSeries([0] * (order + 1), order)

    def add_stirling(lam: Fraction, a: ExactScalar, sign: int):
        nonlocal series_total
        # log Gamma(lam z + a): (lam z + a - 1/2)(log lam + log z) - lam z
        # + (1/2) log 2pi + series
        led_zlogz.add_plain(sign * lam)
        led_z.add_log_rational(lam, QI(sign * lam))
        led_z.add_plain(-sign * lam)
        am = _gauss(a - half)
        led_logz.add(("one",), QI(sign) * am)
        led_const.add_log_rational(lam, QI(sign) * am)
        led_const.add_log_rational(Fraction(2), QI(Fraction(sign, 2)))
        led_const.add_log_pi(QI(Fraction(sign, 2)))
        st = stirling_series(lam, a, order)
        coeffs = [0] + [st.series[n] * sign for n in range(1, order + 1)]
        series_total = series_total + AsymSeries(coeffs, order)

    for lam, mu in zip(g.lambdas, g.mus):
        add_stirling(lam, lam + mu.conjugate(), +1)
        add_stirling(lam, 1 - mu, +1)
    add_stirling(Fraction(2), ExactScalar.from_rational(Fraction(3, 2)), -1)

    # (2 pi)^(-r):
    led_const.add_log_rational(Fraction(2), -g.r)
    led_const.add_log_pi(-g.r)
    # Q^(1-2s) = Q^(1+2z): log Q = (1/2) log u + (v/2) log pi
    led_z.add_log_rational(g.Q.u, QI(Fraction(1, 1)))      # 2 * (1/2 log u)
    led_z.add_log_pi(QI(Fraction(g.Q.v, 1)))               # 2 * (v/2 log pi)
    led_const.add_log_rational(g.Q.u, QI(half))
    led_const.add_log_pi(QI(Fraction(g.Q.v, 2)))
    # dividing by (4 pi)^(2s-1): multiply by (4 pi)^(1+2z)
    led_z.add_log_rational(Fraction(4), QI(2))
    led_z.add_log_pi(QI(2))
    led_const.add_log_rational(Fraction(4), QI(1))
    led_const.add_log_pi(QI(1))
    # dividing by (2 pi)^(-1/2): multiply by (2 pi)^(1/2)
    led_const.add_log_rational(Fraction(2), QI(half))
    led_const.add_log_pi(QI(half))

    if not led_zlogz.is_zero():
        raise PrefactorMismatch("z log z part does not cancel (degree != 2?)")
    if not led_z.is_zero():
        raise PrefactorMismatch("z part does not cancel (conductor != 1?)")
    if not led_logz.is_zero():
        raise PrefactorMismatch(
            "log z part does not cancel (nonzero internal shift?)")

    c = led_const.exact_exponential()
    if c is None:
        with working_precision(guard=16):
            c = +mpmath.exp(led_const.to_mpc())

    ratio = series_total.exp()     # 1 + sum e_n / z^n, exact

    # Basis b_l(z) = prod_{j=1..l} (t - j)^(-1) with t = 2z + 3/2.
    basis = [AsymSeries.const(1, order)]
    for j in range(1, L + 1):
        factor_coeffs = [0]
        x = Fraction(3, 2) - j      # (t-j)^(-1) = (1/(2z)) sum (-x/(2z))^m
        term = Fraction(1, 2)
        for m in range(order):
            factor_coeffs.append(term)
            term = term * (-x) / 2
        basis.append(basis[-1] * AsymSeries(factor_coeffs, order))

    d = []
    for n in range(L + 1):
        acc = ratio[n]
        for l in range(n):
            bl = basis[l][n]
            if bl:
                acc = acc - d[l] * bl
        lead = basis[n][n]          # = 2^(-n)
        d.append(acc / Fraction(lead) if isinstance(acc, (int, Fraction))
                 else acc / lead)
    d = [di if isinstance(di, ExactScalar) else ExactScalar.from_rational(di)
         for di in d]
    return StructuralInvariants(prefactor=c, d=tuple(d), order=L,
                                method="symbolic")


# -- structural invariants: numeric asymptotic route ------------------


def _collocation_solve(g: GammaFactor, L_model: int, t_lo, t_hi, prec: int):
    """Solve for the expansion coefficients c*d[l] on a geometric node set.

    Nodes are values of t = 3/2 - 2s on the negative real s-axis; the
    model is r(s)/Gamma(t) = sum_l x_l prod_{j<=l}(t-j)^(-1) with
    x_l = c*d[l].  Returns the mpmath solution vector.
    """
    K = L_model + 1
    with mpmath.workprec(prec):
        ratio = (mpmath.mpf(t_hi) / t_lo) ** (mpmath.mpf(1) / (K - 1))
        ts = [t_lo * ratio ** i for i in range(K)]
        rows, rhs = [], []
        for t in ts:
            s = (mpmath.mpf(3) / 2 - t) / 2
            logy = log_h(g, s) + mpmath.log(2 * mpmath.pi) / 2 \
                + (1 - 2 * s) * mpmath.log(4 * mpmath.pi) \
                - mpmath.loggamma(t)
            rhs.append(mpmath.exp(logy))
            row = [mpmath.mpc(1)]
            acc = mpmath.mpc(1)
            for j in range(1, L_model + 1):
                acc /= (t - j)
                row.append(acc)
            rows.append(row)
        # Column scaling by the geometric-mean node keeps pivots O(1).
        t_mid = mpmath.sqrt(mpmath.mpf(t_lo) * t_hi)
        scales = [t_mid ** l for l in range(K)]
        A = mpmath.matrix([[rows[i][l] * scales[l] for l in range(K)]
                           for i in range(K)])
        y = mpmath.matrix(rhs)
        x = mpmath.lu_solve(A, y)
        return [+(x[i] * scales[i]) for i in range(K)]


def structural_numeric(g: GammaFactor, L: int, t_lo=20000.0, t_hi=2000000.0,
                       extra_orders: int = 24) -> StructuralInvariants:
    """Structural invariants by asymptotic fitting of h on the negative
    real axis, fully independent of the Stirling route.

    Extends the model ``extra_orders`` beyond L so the asymptotic
    remainder falls below the target accuracy, solves the collocation
    system at doubled working precision, and estimates errors from a
    second solve on a shifted node set.  Raises IllConditioned when the
    two solves disagree by more than 10^(-P/8) relative.
    """
    inv = invariants(g, n_max=2)
    if not inv.degree_is(2) or not inv.conductor_is_one():
        raise PrefactorMismatch("numeric route requires degree 2, conductor 1")
    P = get_precision()
    prec = 2 * P + 64
    L_model = L + extra_orders
    x1 = _collocation_solve(g, L_model, t_lo, t_hi, prec)
    x2 = _collocation_solve(g, L_model + 2, t_lo * mpmath.mpf(1.5),
                            t_hi * mpmath.mpf(1.5), prec)
    c = x1[0]
    scale = max(abs(v) for v in x1[:L + 1])
    errors = []
    with mpmath.workprec(prec):
        d = []
        coarse_tol = mpmath.mpf(10) ** (-(P // 8))
        for l in range(L + 1):
            err = abs(x1[l] - x2[l])
            if err > coarse_tol * (1 + abs(x1[l])):
                raise IllConditioned(
                    "coefficient %d unstable across node sets (delta %s)"
                    % (l, mpmath.nstr(err, 5)))
            errors.append(+(err / abs(c)))
            d.append(+(x1[l] / c))
    return StructuralInvariants(prefactor=+c, d=tuple(d), order=L,
                                method="numeric", errors=tuple(errors))


# -- the ratio of sine sums -------------------------------------------


def r_function(g: GammaFactor, gv: GammaFactor, s) -> mpmath.mpc:
    """S_F(s) / S_gamma(s) at s, raising ZeroDivisionError at zeros of
    the denominator."""
    with working_precision(guard=16):
        num = s_expand(g).eval(s)
        den = s_expand(gv).eval(s)
        if den == 0:
            raise ZeroDivisionError("denominator sine sum vanishes at s=%s" % s)
        return +(num / den)


def r_is_constant(g: GammaFactor) -> bool:
    """Structural constancy test: the ratio against the associated
    two-term factor is forced constant when the numerator expansion has
    at most three terms (N <= 2)."""
    return s_expand(g).N <= 2
